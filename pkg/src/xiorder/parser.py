"""Recursive-descent parser for word expressions.

Grammar (whitespace is insignificant)::

    word   := factor+
    factor := base ('^' uint)?
    base   := 'x' | 'I' | '(' word ')'

A power on a group repeats the group, so ``(x I)^3`` is ``x I x I x I``.
"""

from __future__ import annotations

from .core import Gen, Word

MAX_EXPONENT = 2**32 - 1


class ParseError(ValueError):
    """Malformed expression; ``offset`` is a 0-based byte offset."""

    def __init__(self, message: str, offset: int, text: str = ""):
        self.message = message
        self.offset = offset
        self.text = text
        super().__init__(f"{message} at offset {offset}")


class ExponentOverflowError(ParseError):
    pass


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def offset(self) -> int:
        return len(self.text[: self.pos].encode("utf-8"))

    def error(self, message: str, cls: type[ParseError] = ParseError) -> ParseError:
        return cls(message, self.offset(), self.text)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> list[tuple[Gen, int]]:
        blocks = self.word()
        if self.peek():
            raise self.error(f"unexpected {self.peek()!r}")
        return blocks

    def word(self) -> list[tuple[Gen, int]]:
        blocks = self.factor()
        while self.peek() and self.peek() in "xI(":
            blocks += self.factor()
        return blocks

    def factor(self) -> list[tuple[Gen, int]]:
        c = self.peek()
        if c in ("x", "I"):
            self.pos += 1
            blocks = [(Gen(c), 1)]
        elif c == "(":
            self.pos += 1
            blocks = list(Word(tuple(self.word())).canonical().blocks)
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.pos += 1
        elif c == "":
            raise self.error("expected 'x', 'I' or '('; got end of input")
        else:
            raise self.error(f"expected 'x', 'I' or '('; got {c!r}")
        if self.peek() == "^":
            self.pos += 1
            e = self.uint()
            if len(blocks) <= 1:
                blocks = [(g, k * e) for g, k in blocks]
            else:
                blocks = blocks * e
        return blocks

    def uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if self.pos == start:
            raise self.error("expected integer")
        value = int(self.text[start:self.pos])
        if value > MAX_EXPONENT:
            self.pos = start
            raise self.error(f"exponent {value} exceeds {MAX_EXPONENT}", ExponentOverflowError)
        return value


def parse_word(text: str) -> Word:
    """Parse ``text`` into a canonical :class:`Word`."""
    return Word(tuple(_Parser(text).parse())).canonical()
