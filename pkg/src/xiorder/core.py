"""Words, monomials and normal forms in the algebra generated by x and I.

A word is a product of generator powers ``x^r`` and ``I^s`` written left to
right and applied right to left.  A normal form is a sparse integer
combination of basis monomials ``x^i I^j`` with every x standing left of
every I::

    x I x I  ->  {(2, 2): 1, (1, 3): -1}      # x^2 I^2 - x I^3

The zero operator is the empty normal form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple

# Exact rationals are stdlib fractions: always reduced, denominator > 0.
Rational = Fraction


class Gen(str, Enum):
    X = "x"
    I = "I"  # noqa: E741


class Monomial(NamedTuple):
    """Basis element ``x^x_power I^i_power``."""

    x_power: int
    i_power: int


def falling_factorial(a: int, j: int) -> int:
    """``a (a-1) ... (a-j+1)``; 1 for ``j == 0`` and 0 once ``j > a``."""
    if a < 0 or j < 0:
        raise ValueError(f"falling_factorial expects nonnegative arguments, got ({a}, {j})")
    return math.perm(a, j)


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError(f"binomial expects nonnegative arguments, got ({n}, {k})")
    return math.comb(n, k)


# --------------------------------------------------------------------------
# Words
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Word:
    """An operator word stored as a tuple of ``(Gen, exponent)`` blocks.

    Blocks are kept as given; :meth:`canonical` drops zero exponents and
    merges neighbouring blocks of the same generator.
    """

    blocks: tuple[tuple[Gen, int], ...] = ()

    def __post_init__(self) -> None:
        blocks = tuple((Gen(g), int(e)) for g, e in self.blocks)
        for _, e in blocks:
            if e < 0:
                raise ValueError(f"negative exponent {e} in word")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def of(cls, *blocks: tuple[str, int]) -> Word:
        return cls(tuple(blocks))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> Word:
        """Build ``x^{r_n} I^{s_n} ... x^{r_1} I^{s_1}`` from ``[(r_1, s_1), ..., (r_n, s_n)]``."""
        blocks: list[tuple[Gen, int]] = []
        for r, s in reversed(list(pairs)):
            blocks.append((Gen.X, r))
            blocks.append((Gen.I, s))
        return cls(tuple(blocks))

    def canonical(self) -> Word:
        merged: list[list] = []
        for g, e in self.blocks:
            if e == 0:
                continue
            if merged and merged[-1][0] is g:
                merged[-1][1] += e
            else:
                merged.append([g, e])
        return Word(tuple((g, e) for g, e in merged))

    def __add__(self, other: Word) -> Word:
        """Concatenation: ``w1 + w2`` is the operator ``w1 w2`` (w2 acts first)."""
        return Word(self.blocks + other.blocks)

    def __pow__(self, n: int) -> Word:
        if n < 0:
            raise ValueError("words have no inverses")
        return Word(self.blocks * n)

    def __len__(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        parts = []
        for g, e in self.canonical().blocks:
            parts.append(g.value if e == 1 else f"{g.value}^{e}")
        return " ".join(parts) if parts else "1"

    def total_degrees(self) -> tuple[int, int]:
        """Total x-degree R and total I-degree S."""
        r = sum(e for g, e in self.blocks if g is Gen.X)
        s = sum(e for g, e in self.blocks if g is Gen.I)
        return r, s

    def pairs(self) -> list[tuple[int, int]]:
        """Exponent pairs ``[(r_1, s_1), ..., (r_n, s_n)]`` counted from the right.

        Absent leading or trailing blocks show up as zero exponents, so a word
        ending in x has ``s_1 == 0`` and a word starting with I has ``r_n == 0``.
        """
        blocks = list(self.canonical().blocks)
        out: list[tuple[int, int]] = []
        while blocks:
            s = blocks.pop()[1] if blocks[-1][0] is Gen.I else 0
            r = blocks.pop()[1] if blocks and blocks[-1][0] is Gen.X else 0
            out.append((r, s))
        return out

    def partial_x_sums(self) -> list[int]:
        """``[S_1, ..., S_n]`` with ``S_j = r_1 + ... + r_j``."""
        sums, acc = [], 0
        for r, _ in self.pairs():
            acc += r
            sums.append(acc)
        return sums


def word_total_degrees(w: Word) -> tuple[int, int]:
    return w.total_degrees()


# --------------------------------------------------------------------------
# Normal forms
# --------------------------------------------------------------------------


def _sort_key(m: Monomial) -> tuple[int, int]:
    return (m.i_power, m.x_power)


class NormalForm(Mapping):
    """Immutable sparse map ``Monomial -> int`` with zero terms pruned.

    Iteration runs by ascending I power, then ascending x power.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for key, c in items:
            m = Monomial(*key)
            if m.x_power < 0 or m.i_power < 0:
                raise ValueError(f"negative exponent in monomial {tuple(m)}")
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
            acc[m] = acc.get(m, 0) + c
        self._terms = {m: acc[m] for m in sorted(acc, key=_sort_key) if acc[m] != 0}
        self._hash = None

    @classmethod
    def one(cls) -> NormalForm:
        """The identity operator."""
        return cls({(0, 0): 1})

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._terms[Monomial(*key)]

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NormalForm):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self == NormalForm(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other: NormalForm) -> NormalForm:
        return nf_add(self, other)

    def __neg__(self) -> NormalForm:
        return nf_scale(self, -1)

    def __sub__(self, other: NormalForm) -> NormalForm:
        return nf_add(self, nf_scale(other, -1))

    def __repr__(self) -> str:
        inner = ", ".join(f"({m.x_power}, {m.i_power}): {c}" for m, c in self._terms.items())
        return f"NormalForm({{{inner}}})"

    def offsets(self, x_total: int) -> list[tuple[int, int]]:
        """``(k, coeff)`` pairs for a form supported on keys ``(x_total - k, S + k)``."""
        return [(x_total - m.x_power, c) for m, c in self._terms.items()]


def nf_add(a: NormalForm, b: NormalForm) -> NormalForm:
    return NormalForm(list(a.items()) + list(b.items()))


def nf_scale(a: NormalForm, c: int) -> NormalForm:
    return NormalForm([(m, c * v) for m, v in a.items()])


def nf_equal(a: NormalForm, b: NormalForm) -> bool:
    return a == b


def nf_sum(forms: Iterable[NormalForm]) -> NormalForm:
    items: list = []
    for nf in forms:
        items.extend(nf.items())
    return NormalForm(items)


def is_antidiagonal(nf: NormalForm, w: Word) -> bool:
    """True when every key of ``nf`` is ``(R-k, S+k)`` for the word's degrees."""
    r, s = w.total_degrees()
    return all(m.x_power + m.i_power == r + s and m.i_power >= s and m.x_power <= r for m in nf)
