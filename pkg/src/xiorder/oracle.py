"""Operational check of normal forms on monomials.

Nothing here uses the rewrite rule.  ``x`` multiplies and ``I`` integrates
from 0, so on monomials ``I x^d = x^{d+1} / (d+1)``.  Two operators with
anti-diagonal support agree iff they agree on enough monomials ``x^m``,
because ``m -> m! / (m+j)!`` are linearly independent for distinct ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping

from .core import Gen, NormalForm, Word


@dataclass(frozen=True)
class RationalMonomial:
    coeff: Fraction
    degree: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.coeff == 0:
            object.__setattr__(self, "degree", 0)

    def as_polynomial(self) -> RationalPolynomial:
        return RationalPolynomial({self.degree: self.coeff})


class RationalPolynomial(Mapping):
    """Immutable ``degree -> Fraction`` map, zeros dropped, ascending degrees."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Fraction] | None = None):
        terms = terms or {}
        self._terms = {d: Fraction(terms[d]) for d in sorted(terms) if terms[d] != 0}

    def __getitem__(self, degree: int) -> Fraction:
        return self._terms[degree]

    def __iter__(self) -> Iterator[int]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalPolynomial):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self == RationalPolynomial(other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: RationalPolynomial) -> RationalPolynomial:
        out = dict(self._terms)
        for d, c in other.items():
            out[d] = out.get(d, Fraction(0)) + c
        return RationalPolynomial(out)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c} x^{d}" for d, c in self._terms.items())

    def __repr__(self) -> str:
        return f"RationalPolynomial({self._terms!r})"


def apply_word_to_monomial(w: Word, m: int) -> RationalMonomial:
    """Image of ``x^m`` under ``w``, one generator at a time from the right."""
    if m < 0:
        raise ValueError(f"monomial degree must be >= 0, got {m}")
    coeff, degree = Fraction(1), m
    for g, e in reversed(w.blocks):
        if g is Gen.X:
            degree += e
        else:
            for _ in range(e):
                degree += 1
                coeff /= degree
    return RationalMonomial(coeff, degree)


def apply_nf_to_monomial(nf: NormalForm, m: int) -> RationalPolynomial:
    """``sum c(i,j) x^i I^j x^m`` with ``I^j x^m = m!/(m+j)! x^{m+j}``."""
    if m < 0:
        raise ValueError(f"monomial degree must be >= 0, got {m}")
    out: dict[int, Fraction] = {}
    for (i, j), c in nf.items():
        scale = Fraction(1)
        for t in range(1, j + 1):
            scale /= m + t
        d = m + i + j
        out[d] = out.get(d, Fraction(0)) + c * scale
    return RationalPolynomial(out)


@dataclass(frozen=True)
class VerificationReport:
    equal: bool
    samples: list[tuple[int, RationalPolynomial, RationalPolynomial]] = field(default_factory=list)

    @property
    def first_mismatch(self) -> int | None:
        for m, lhs, rhs in self.samples:
            if lhs != rhs:
                return m
        return None


def verify_equivalence(w: Word, nf: NormalForm, samples: int | None = None) -> VerificationReport:
    """Compare ``w`` and ``nf`` on ``x^0, x^1, ...``.

    By default samples ``m = 0 .. S + T`` (S the word's I-degree, T the number
    of terms in ``nf``).  Every sample is evaluated and kept in the report.
    """
    if samples is None:
        samples = w.total_degrees()[1] + len(nf) + 1
    if samples < 1:
        raise ValueError(f"need at least one sample, got {samples}")
    rows = []
    for m in range(samples):
        lhs = apply_word_to_monomial(w, m).as_polynomial()
        rhs = apply_nf_to_monomial(nf, m)
        rows.append((m, lhs, rhs))
    return VerificationReport(all(lhs == rhs for _, lhs, rhs in rows), rows)
