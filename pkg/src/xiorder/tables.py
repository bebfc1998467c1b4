"""Coefficient triangles and closed-form expansions.

* Bessel numbers ``a(n, k)`` (OEIS A001498), the unsigned coefficients of
  ``(x I)^n``.
* The two-parameter triangle for ``(x^lam I^delta)^n``.
* A chain-sum expansion of an arbitrary word, with no rewriting at all.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import NormalForm, Word, binomial, falling_factorial


@dataclass
class BesselTriangle:
    """Rows ``[a(n,0), ..., a(n,n)]`` grown on demand from

        a(n, k) = a(n-1, k) + (n-k+1) a(n, k-1),   a(0, 0) = 1.
    """

    rows: list[list[int]] = field(default_factory=lambda: [[1]])

    def row(self, n: int) -> list[int]:
        if n < 0:
            raise ValueError(f"row index must be >= 0, got {n}")
        while len(self.rows) <= n:
            m = len(self.rows)
            prev = self.rows[-1]
            new = [1]
            for k in range(1, m + 1):
                above = prev[k] if k < len(prev) else 0
                new.append(above + (m - k + 1) * new[k - 1])
            self.rows.append(new)
        return list(self.rows[n])


def bessel_row(n: int) -> list[int]:
    return BesselTriangle().row(n)


def bessel_triangle(n_max: int) -> list[list[int]]:
    """Rows ``0..n_max`` of the Bessel triangle."""
    t = BesselTriangle()
    t.row(n_max)
    return [list(r) for r in t.rows[: n_max + 1]]


def bessel_via_identity(n: int, i: int) -> int:
    """``a(n, i)`` from row ``n-1`` by one left multiplication with ``x I``:

        a(n, i) = sum_{k=0}^{min(n-1, i)} (n-k)_{i-k} a(n-1, k)
    """
    if n < 1:
        raise ValueError(f"bessel_via_identity needs n >= 1, got {n}")
    if not 0 <= i <= n:
        raise ValueError(f"index i={i} outside 0..{n}")
    prev = bessel_row(n - 1)
    return sum(falling_factorial(n - k, i - k) * prev[k] for k in range(min(n - 1, i) + 1))


def xi_power_normal_form(n: int) -> NormalForm:
    """``(x I)^n`` with coefficient ``(-1)^k a(n-1, k)`` on ``x^{n-k} I^{n+k}``."""
    if n < 1:
        raise ValueError(f"xi_power_normal_form needs n >= 1, got {n}")
    row = bessel_row(n - 1)
    return NormalForm(((n - k, n + k), (-1) ** k * a) for k, a in enumerate(row))


@dataclass
class GeneralizedTriangle:
    """Unsigned coefficients of ``(x^lam I^delta)^n``; row ``n`` has ``lam(n-1)+1`` entries.

    Row 1 is ``[1]`` and

        a[n+1][j] = sum_{k=0}^{min(j, lam(n-1))} (lam n - k)_{j-k} binom(j-k+delta-1, delta-1) a[n][k].
    """

    lam: int
    delta: int
    rows: list[list[int]] = field(default_factory=lambda: [[1]])

    def __post_init__(self) -> None:
        if self.lam < 1 or self.delta < 1:
            raise ValueError(f"lambda and delta must be >= 1, got ({self.lam}, {self.delta})")

    def row(self, n: int) -> list[int]:
        """Row ``n`` (1-based)."""
        if n < 1:
            raise ValueError(f"row index must be >= 1, got {n}")
        lam, d = self.lam, self.delta
        while len(self.rows) < n:
            m = len(self.rows)  # current last row index
            prev = self.rows[-1]
            new = []
            for j in range(lam * m + 1):
                new.append(sum(
                    falling_factorial(lam * m - k, j - k) * binomial(j - k + d - 1, d - 1) * prev[k]
                    for k in range(min(j, lam * (m - 1)) + 1)
                ))
            self.rows.append(new)
        return list(self.rows[n - 1])


def generalized_triangle(lam: int, delta: int, n_max: int) -> GeneralizedTriangle:
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    t = GeneralizedTriangle(lam, delta)
    t.row(n_max)
    return t


def general_power_normal_form(lam: int, delta: int, n: int) -> NormalForm:
    """``(x^lam I^delta)^n`` with ``(-1)^k a[n][k]`` on ``x^{lam n - k} I^{delta n + k}``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    row = GeneralizedTriangle(lam, delta).row(n)
    return NormalForm(((lam * n - k, delta * n + k), (-1) ** k * a) for k, a in enumerate(row))


def _step_binomial(i: int, s: int) -> int:
    # I^0 is the identity, so an empty I block admits only i == 0.
    if s == 0:
        return 1 if i == 0 else 0
    return binomial(i + s - 1, s - 1)


def word_closed_form(w: Word, nested: bool = False) -> NormalForm:
    """Normal form of ``w`` as a sum over chains ``0 <= p_1 <= ... <= p_{n-1}``.

    With ``w = x^{r_n} I^{s_n} ... x^{r_1} I^{s_1}``, ``S_j = r_1 + ... + r_j``,
    ``s = s_1 + ... + s_n`` and ``p_0 = 0``, each chain with ``p_j <= S_j``
    contributes

        (-1)^{p_{n-1}} prod_j (S_j - p_{j-1})_{p_j - p_{j-1}} binom(p_j - p_{j-1} + s_{j+1} - 1, s_{j+1} - 1)

    to ``x^{S_n - p_{n-1}} I^{s + p_{n-1}}``.  The exponent offset is the full
    cumulative ``p_{n-1}``; using only the last increment ``p_{n-1} - p_{n-2}``
    is wrong from three blocks on.

    ``nested=True`` enumerates every chain explicitly, which is exponential
    in the number of blocks; the default folds the same sum link by link.
    """
    pairs = w.pairs()
    return chain_sum_nested(pairs) if nested else chain_sum(pairs)


def _step_factor(big_s_j: int, prev: int, p: int, s_next: int) -> int:
    step = p - prev
    return falling_factorial(big_s_j - prev, step) * _step_binomial(step, s_next)


def _prefix_sums(pairs: list[tuple[int, int]]) -> list[int]:
    out, acc = [], 0
    for r, _ in pairs:
        acc += r
        out.append(acc)
    return out


def _assemble(pairs, big_s, coeffs: dict[int, int]) -> NormalForm:
    s_total = sum(s for _, s in pairs)
    return NormalForm(((big_s[-1] - p, s_total + p), (-1) ** p * c) for p, c in coeffs.items())


def chain_sum(pairs: list[tuple[int, int]]) -> NormalForm:
    """Chain-sum expansion for raw ``[(r_1, s_1), ..., (r_n, s_n)]``.

    The chain weight is a product of one factor per link ``p_{j-1} -> p_j``,
    so partial sums over ``p_1 .. p_{j-1}`` are carried in a table keyed by
    ``p_j``.  Zero exponents are allowed anywhere; an empty I block forces
    the chain to stay put across it.
    """
    pairs = list(pairs)
    if not pairs:
        return NormalForm.one()
    big_s = _prefix_sums(pairs)
    table = {0: 1}  # p_0 = 0
    for j in range(1, len(pairs)):
        nxt: dict[int, int] = {}
        for prev, acc in table.items():
            for p in range(prev, big_s[j - 1] + 1):
                f = _step_factor(big_s[j - 1], prev, p, pairs[j][1])
                if f:
                    nxt[p] = nxt.get(p, 0) + acc * f
        table = nxt
    return _assemble(pairs, big_s, table)


def chain_sum_nested(pairs: list[tuple[int, int]]) -> NormalForm:
    """Same expansion, one explicit loop per chain index, ``p_{n-1}`` outermost.

    Runs ``p_{n-1} = 0..S_{n-1}``, then ``p_{n-2} = 0..min(p_{n-1}, S_{n-2})``
    and so on down to ``p_1``.
    """
    pairs = list(pairs)
    if not pairs:
        return NormalForm.one()
    n = len(pairs)
    big_s = _prefix_sums(pairs)
    coeffs: dict[int, int] = {}
    chain = [0] * n  # chain[j] = p_j, chain[0] = p_0 = 0

    def weight() -> int:
        prod = 1
        for j in range(1, n):
            prod *= _step_factor(big_s[j - 1], chain[j - 1], chain[j], pairs[j][1])
            if prod == 0:
                break
        return prod

    def descend(j: int, upper: int) -> None:
        if j == 0:
            c = weight()
            if c:
                coeffs[chain[-1]] = coeffs.get(chain[-1], 0) + c
            return
        for p in range(min(upper, big_s[j - 1]) + 1):
            chain[j] = p
            descend(j - 1, p)

    descend(n - 1, big_s[n - 2] if n > 1 else 0)
    return _assemble(pairs, big_s, coeffs)
