"""Reading and writing generated-polynomial files.

One polynomial per line, preceded by a provenance comment::

    # source: circuit B=[1, 2, 3]
    1 * x[1,1] * x[2,2] * x[3,3] - ...

Expanded lines use the coordinate text form; when a polynomial's expansion
would be impractically large it is written in the exact bracket text form
(factors like ``<1 2 q1>``) under an extra ``# form: bracket`` comment.
Both forms parse back losslessly.
"""

from __future__ import annotations

from typing import Iterable

from .brackets import BracketPolynomial
from .generators import LabeledPolynomial
from .poly import Polynomial


def render_polynomials(items: Iterable[LabeledPolynomial]) -> str:
    lines: list[str] = []
    for labeled in items:
        lines.append(f"# source: {labeled.label}")
        if isinstance(labeled.polynomial, BracketPolynomial):
            lines.append("# form: bracket")
            lines.append(labeled.polynomial.to_text())
        else:
            lines.append(labeled.polynomial.to_text())
    return "\n".join(lines) + "\n"


def parse_polynomials(text: str) -> list[LabeledPolynomial]:
    out: list[LabeledPolynomial] = []
    label = None
    bracket_form = False
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("source:"):
                label = body[len("source:") :].strip()
                bracket_form = False
            elif body.startswith("form:"):
                bracket_form = body[len("form:") :].strip() == "bracket"
            continue
        poly = (
            BracketPolynomial.from_text(line)
            if bracket_form or "<" in line
            else Polynomial.from_text(line)
        )
        out.append(LabeledPolynomial(label or f"poly{len(out)}", poly))
        label = None
        bracket_form = False
    return out
