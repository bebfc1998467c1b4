"""Text, LaTeX, JSON and CSV renderings of normal forms and triangles.

Every renderer is a pure function of its input, so output is byte-stable.
"""

from __future__ import annotations

import csv
import io
import json

from .core import NormalForm, Word
from .parser import parse_word

FORMATS = ("text", "latex", "json", "csv")


def _monomial_text(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("I" if j == 1 else f"I^{j}")
    return " ".join(parts)


def _monomial_latex(i: int, j: int) -> str:
    out = ""
    if i:
        out += "x" if i == 1 else f"x^{{{i}}}"
    if j:
        out += r"\mathrm{I}" if j == 1 else rf"\mathrm{{I}}^{{{j}}}"
    return out


def _join_terms(nf: NormalForm, monomial, sep: str) -> str:
    if not nf:
        return "0"
    out = []
    for n, ((i, j), c) in enumerate(nf.items()):
        mono = monomial(i, j)
        mag = abs(c)
        body = mono if mag == 1 and mono else f"{mag}{sep if mono else ''}{mono}"
        if n == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(out)


def nf_to_text(nf: NormalForm) -> str:
    """``x^2 I^2 - x I^3``; the zero form prints as ``0``."""
    return _join_terms(nf, _monomial_text, " ")


def nf_to_latex(nf: NormalForm) -> str:
    return _join_terms(nf, _monomial_latex, "")


def nf_to_json(nf: NormalForm, w: Word) -> str:
    r, s = w.total_degrees()
    doc = {
        "word": str(w),
        "total_x": r,
        "total_I": s,
        "terms": [
            {"k": r - i, "x": i, "I": j, "coeff": str(c)}
            for (i, j), c in sorted(nf.items(), key=lambda t: r - t[0][0])
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def nf_from_json(text: str) -> tuple[Word, NormalForm]:
    """Inverse of :func:`nf_to_json`."""
    doc = json.loads(text)
    w = Word() if doc["word"] == "1" else parse_word(doc["word"])
    nf = NormalForm({(t["x"], t["I"]): int(t["coeff"]) for t in doc["terms"]})
    return w, nf


def nf_to_csv(nf: NormalForm, w: Word) -> str:
    r, _ = w.total_degrees()
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "x", "I", "coeff"])
    for (i, j), c in sorted(nf.items(), key=lambda t: r - t[0][0]):
        writer.writerow([r - i, i, j, c])
    return buf.getvalue()


def render_nf(nf: NormalForm, w: Word, fmt: str) -> str:
    if fmt == "text":
        return nf_to_text(nf) + "\n"
    if fmt == "latex":
        return nf_to_latex(nf) + "\n"
    if fmt == "json":
        return nf_to_json(nf, w)
    if fmt == "csv":
        return nf_to_csv(nf, w)
    raise ValueError(f"unknown format {fmt!r}")


def render_triangle(rows: list[list[int]], fmt: str, meta: dict | None = None) -> str:
    """One line per row; JSON wraps rows of decimal strings together with ``meta``."""
    if fmt == "text":
        return "".join(" ".join(map(str, row)) + "\n" for row in rows)
    if fmt == "csv":
        return "".join(",".join(map(str, row)) + "\n" for row in rows)
    if fmt == "latex":
        width = max(len(row) for row in rows)
        lines = [rf"\begin{{array}}{{{'r' * width}}}"]
        lines += [" & ".join(map(str, row)) + r" \\" for row in rows]
        lines.append(r"\end{array}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = dict(meta or {})
        doc["rows"] = [[str(v) for v in row] for row in rows]
        return json.dumps(doc, indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
