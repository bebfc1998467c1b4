"""Normal ordering by left multiplication.

Words are folded right to left starting from the identity.  Multiplying by
``x^r`` only shifts x exponents; multiplying by ``I`` uses integration by
parts on each basis monomial::

    I x^a I^b = sum_{j=0}^{a} (-1)^j (a)_j x^{a-j} I^{b+1+j}

where ``(a)_j`` is the falling factorial.  Iterating this ``d`` times
collapses to a single sum weighted by ``binomial(k+d-1, d-1)``, the number
of weakly increasing index chains ending at ``k``.
"""

from __future__ import annotations

from .core import Gen, NormalForm, Word, binomial, falling_factorial


def apply_x(nf: NormalForm, r: int) -> NormalForm:
    """Left-multiply by ``x^r``."""
    if r < 0:
        raise ValueError(f"negative exponent {r}")
    return NormalForm([((m.x_power + r, m.i_power), c) for m, c in nf.items()])


def apply_I(nf: NormalForm) -> NormalForm:
    """Left-multiply by a single ``I``."""
    items = []
    for (a, b), c in nf.items():
        for j in range(a + 1):
            items.append(((a - j, b + 1 + j), (-1) ** j * falling_factorial(a, j) * c))
    return NormalForm(items)


def apply_I_power(alpha: int, beta: int, delta: int) -> NormalForm:
    """``I^delta x^alpha I^beta`` in normal form, via the collapsed single sum."""
    if delta < 1:
        raise ValueError(f"apply_I_power needs delta >= 1, got {delta}")
    if alpha < 0 or beta < 0:
        raise ValueError(f"negative exponent in ({alpha}, {beta})")
    return NormalForm(
        ((alpha - k, beta + delta + k), (-1) ** k * falling_factorial(alpha, k) * binomial(k + delta - 1, delta - 1))
        for k in range(alpha + 1)
    )


def apply_I_power_nf(nf: NormalForm, delta: int) -> NormalForm:
    """Left-multiply a whole normal form by ``I^delta`` (``delta == 0`` is the identity)."""
    if delta == 0:
        return nf
    items = []
    for (a, b), c in nf.items():
        items.extend((m, c * v) for m, v in apply_I_power(a, b, delta).items())
    return NormalForm(items)


def act(w: Word, nf: NormalForm) -> NormalForm:
    """Left-multiply ``nf`` by the word ``w`` (rightmost block first)."""
    for g, e in reversed(w.canonical().blocks):
        if g is Gen.X:
            nf = apply_x(nf, e)
        else:
            nf = apply_I_power_nf(nf, e)
    return nf


def normal_order(w: Word) -> NormalForm:
    """Normal form of ``w``; the empty word gives ``{(0, 0): 1}``."""
    return act(w, NormalForm.one())
