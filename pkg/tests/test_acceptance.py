"""Exit criteria.  Each test carries a ``criterion`` marker; the session summary
prints one PASS/FAIL line per criterion.  All checks are exact; the only
tolerances are the wall-clock budgets.
"""

import io
import random
import time
from math import factorial
from pathlib import Path

import pytest

from xiorder import (
    NormalForm,
    Word,
    act,
    apply_I,
    apply_I_power,
    bessel_row,
    bessel_triangle,
    bessel_via_identity,
    falling_factorial,
    general_power_normal_form,
    generalized_triangle,
    normal_order,
    verify_equivalence,
    word_closed_form,
    xi_power_normal_form,
)
from xiorder.cli import run
from xiorder.core import is_antidiagonal
from xiorder.render import nf_from_json, nf_to_json

from words import random_letter_word, random_pairs_word, random_words

GOLDEN = Path(__file__).parent / "golden"
XI = Word.of(("x", 1), ("I", 1))


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    return run(list(argv), out, err), out.getvalue(), err.getvalue()


def independent_bessel_rows(n_max):
    """Bessel rows from the recurrence, written out without the library."""
    rows = [[1]]
    for n in range(1, n_max + 1):
        row = [1]
        for k in range(1, n + 1):
            above = rows[n - 1][k] if k < n else 0
            row.append(above + (n - k + 1) * row[k - 1])
        rows.append(row)
    return rows


@pytest.mark.criterion(1, "I^2 x^5 I^3 reproduced three ways, < 10 ms")
def test_criterion_1_worked_example():
    start = time.perf_counter()
    code, out, _ = cli("order", "I^2 x^5 I^3", "--format", "json")
    _, from_cli = nf_from_json(out)
    folded = apply_I(apply_I(NormalForm({(5, 3): 1})))
    single = apply_I_power(5, 3, 2)
    double = NormalForm(
        ((5 - j, 5 + j), (-1) ** j * sum(falling_factorial(5, k) * falling_factorial(5 - k, j - k) for k in range(j + 1)))
        for j in range(6)
    )
    elapsed = time.perf_counter() - start
    expected = NormalForm({(5 - j, 5 + j): (-1) ** j * c for j, c in enumerate([1, 10, 60, 240, 600, 720])})
    assert code == 0
    assert from_cli == folded == single == double == expected
    assert len(expected) == 6
    print(f"criterion 1: {elapsed * 1e3:.2f} ms")
    assert elapsed < 0.010


@pytest.mark.criterion(2, "(xI)^n against Bessel rows, A001498 fixture and closed form, < 100 ms")
def test_criterion_2_bessel(a001498_rows):
    start = time.perf_counter()
    reference = independent_bessel_rows(12)
    for n in range(1, 9):
        nf = xi_power_normal_form(n)
        assert nf == normal_order(XI ** n)
        assert [(-1) ** k * nf[(n - k, n + k)] for k in range(n)] == reference[n - 1]
    rows = bessel_triangle(12)
    assert rows == reference
    assert rows == a001498_rows
    for n, row in enumerate(rows):
        assert row == [factorial(n + k) // (2 ** k * factorial(k) * factorial(n - k)) for k in range(n + 1)]
    elapsed = time.perf_counter() - start
    print(f"criterion 2: {elapsed * 1e3:.2f} ms")
    assert elapsed < 0.100


@pytest.mark.criterion(3, "one-step identity equals the Bessel recurrence, n <= 12")
def test_criterion_3_identity():
    assert bessel_row(0) == [1]  # seed row; the identity starts at n = 1
    for n in range(1, 13):
        row = bessel_row(n)
        for i in range(n + 1):
            assert bessel_via_identity(n, i) == row[i], (n, i)


@pytest.mark.criterion(4, "(x^L I^D)^n against the rewrite engine, L, D <= 3, n <= 5, < 1 s")
def test_criterion_4_generalized():
    start = time.perf_counter()
    for lam in (1, 2, 3):
        for delta in (1, 2, 3):
            for n in range(1, 6):
                w = Word.of(("x", lam), ("I", delta)) ** n
                assert general_power_normal_form(lam, delta, n) == normal_order(w), (lam, delta, n)
    t = generalized_triangle(1, 1, 13)
    for n in range(1, 14):
        assert t.row(n) == bessel_row(n - 1)
    elapsed = time.perf_counter() - start
    print(f"criterion 4: {elapsed * 1e3:.1f} ms")
    assert elapsed < 1.0


DEGENERATE = [
    Word(),
    Word.of(("x", 4)),
    Word.of(("I", 3)),
    Word.of(("x", 2), ("I", 5)),
    Word.of(("x", 0)),
    Word.of(("x", 0), ("I", 0), ("x", 0)),
    Word.of(("I", 2), ("x", 3)),
    Word.of(("x", 1), ("I", 0), ("x", 2), ("I", 1)),
    Word.of(("I", 1), ("I", 0), ("x", 2), ("x", 0), ("I", 2)),
    Word.from_pairs([(0, 0), (3, 0), (0, 2)]),
]


@pytest.mark.criterion(5, "chain-sum expansion equals the rewrite engine on 200 random + degenerate words, < 2 s")
def test_criterion_5_closed_form():
    words = random_words(5, 200, random_pairs_word, max_blocks=5, max_r=4, max_s=3) + DEGENERATE
    start = time.perf_counter()
    for w in words:
        expected = normal_order(w)
        assert word_closed_form(w) == expected, str(w)
        assert word_closed_form(w, nested=True) == expected, str(w)
    elapsed = time.perf_counter() - start
    print(f"criterion 5: {elapsed * 1e3:.1f} ms for {len(words)} words")
    assert elapsed < 2.0


@pytest.mark.criterion(6, "oracle certifies normal_order on 500 random words, < 5 s")
def test_criterion_6_oracle():
    words = random_words(6, 500, random_letter_word, max_x=10, max_i=6)
    start = time.perf_counter()
    for w in words:
        report = verify_equivalence(w, normal_order(w))
        assert report.equal, str(w)
        assert all(lhs == rhs for _, lhs, rhs in report.samples)
    elapsed = time.perf_counter() - start
    print(f"criterion 6: {elapsed:.2f} s")
    assert elapsed < 5.0


@pytest.mark.criterion(7, "degree conservation, sign alternation, factorization on >= 300 cases each")
def test_criterion_7_structure():
    rng = random.Random(7)
    degree_cases = random_words(71, 300, random_letter_word, max_x=12, max_i=8)
    for w in degree_cases:
        r, s = w.total_degrees()
        nf = normal_order(w)
        assert all(i + j == r + s for i, j in nf)
        assert is_antidiagonal(nf, w)
    sign_cases = random_words(72, 300, random_pairs_word, max_blocks=5, max_r=4, max_s=3)
    for w in sign_cases:
        _, s = w.total_degrees()
        for (i, j), c in normal_order(w).items():
            assert (c > 0) == ((j - s) % 2 == 0), str(w)
    factor_cases = random_words(73, 300, random_letter_word)
    for w in factor_cases:
        cut = rng.randint(0, len(w))
        w1, w2 = Word(w.blocks[:cut]), Word(w.blocks[cut:])
        assert normal_order(w1 + w2) == act(w1, normal_order(w2)), (str(w1), str(w2))


@pytest.mark.criterion(8, "CLI golden output, JSON round trip, exit codes 0/1/2")
def test_criterion_8_cli(monkeypatch):
    code, out, _ = cli("order", "x I x I")
    assert (code, out) == (0, "x^2 I^2 - x I^3\n")
    assert out == (GOLDEN / "order_xIxI.txt").read_text()

    code, out, _ = cli("bessel", "-n", "3", "--format", "csv")
    assert (code, out) == (0, "1\n1,1\n1,3,3\n1,6,15,15\n")
    assert out == (GOLDEN / "bessel_3.csv").read_text()

    for expr in ("x I x I", "I^2 x^5 I^3", "(x^2 I^3)^4 x", "I"):
        code, out, _ = cli("order", expr, "--format", "json")
        assert code == 0
        w, nf = nf_from_json(out)
        assert nf_to_json(nf, w) == out
    assert cli("order", "x I x I", "--format", "json")[1] == (GOLDEN / "order_xIxI.json").read_text()

    assert cli("order", "x^")[0] == 2
    assert cli("order", "x", "--nope")[0] == 2
    assert cli("verify", "x I x I")[0] == 0
    monkeypatch.setattr("xiorder.rewrite.normal_order", lambda w: NormalForm({(2, 2): 1}))
    assert cli("verify", "x I x I")[0] == 1
