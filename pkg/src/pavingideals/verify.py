"""Exact vanishing verification of generated polynomials on realizations.

Every check is an exact evaluation: a polynomial passes in ``zero`` mode
when its value is the zero scalar under each requested assignment of the
auxiliary symbolic vectors, and in ``nonzero`` mode when no assignment
evaluates to zero.  Assignments are explicit vectors per symbolic name, or
the canonical-basis sweep over every combination.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Sequence

from .brackets import BracketPolynomial
from .concurrency import ordered_map
from .generators import LabeledPolynomial
from .poly import Polynomial, UnboundVariable
from .realizations import Realization
from .scalars import Scalar, format_rational
from .variables import KIND_EXTRA, Variable, extra_var


@dataclass(frozen=True)
class VanishingCheck:
    poly_id: str
    assignment: tuple[tuple[str, tuple[Scalar, ...]], ...]
    value: Scalar
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "poly_id": self.poly_id,
            "assignment": {
                name: [format_rational(c) for c in vec] for name, vec in self.assignment
            },
            "value": format_rational(self.value),
            "pass": self.passed,
        }


@dataclass(frozen=True)
class VanishingReport:
    checks: tuple[VanishingCheck, ...]
    expect: str

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_lines(self) -> str:
        import json

        return "\n".join(json.dumps(c.to_json_dict(), sort_keys=True) for c in self.checks)


def extra_names(poly) -> tuple[str, ...]:
    if isinstance(poly, BracketPolynomial):
        return tuple(sorted(l for l in poly.labels() if isinstance(l, str)))
    return tuple(sorted({v.column for v in poly.support() if v.kind == KIND_EXTRA}))


def canonical_basis_sweep(names: Sequence[str], dim: int) -> list[dict[str, tuple[int, ...]]]:
    """Every assignment of canonical basis vectors to the named extras."""
    basis = [tuple(1 if i == j else 0 for i in range(1, dim + 1)) for j in range(1, dim + 1)]
    out = []
    for pick in product(range(dim), repeat=len(names)):
        out.append({name: basis[i] for name, i in zip(names, pick)})
    return out


def evaluate_poly(
    poly,
    realization: Realization,
    extra: Mapping[str, Sequence[Scalar]],
) -> Scalar:
    """Exact value of an expanded or bracket-form polynomial."""
    if isinstance(poly, BracketPolynomial):
        names = extra_names(poly)
        missing = [n for n in names if n not in extra]
        if missing:
            raise UnboundVariable([extra_var(1, n) for n in missing])
        vectors: dict = dict(realization.vectors)
        for name, vec in extra.items():
            vectors[name] = tuple(vec)
        return poly.evaluate(vectors)
    full = dict(realization.assignment())
    for name, vec in extra.items():
        for r, value in enumerate(vec, start=1):
            full[extra_var(r, name)] = value
    return poly.evaluate(full)


def verify_vanishing(
    polynomials: Iterable[LabeledPolynomial],
    realization: Realization,
    extra_assignments: Sequence[Mapping[str, Sequence[Scalar]]] | None = None,
    sweep: bool = False,
    expect: str = "zero",
    workers: int = 1,
) -> VanishingReport:
    """Evaluate each polynomial exactly on the realization.

    ``extra_assignments`` maps symbolic extra-vector names to concrete
    vectors, one dict per evaluation; ``sweep`` instead runs the full
    canonical-basis sweep over each polynomial's own symbolic names.
    Polynomials may be expanded or in bracket form.  Unassigned symbolic
    vectors raise UnboundVariable.
    """
    if expect not in ("zero", "nonzero"):
        raise ValueError("expect must be 'zero' or 'nonzero'")
    dim = realization.dim
    jobs: list[tuple[str, object, Mapping[str, Sequence[Scalar]], tuple]] = []
    for labeled in polynomials:
        poly = labeled.polynomial
        names = extra_names(poly)
        if sweep:
            assigns: Sequence[Mapping[str, Sequence[Scalar]]] = canonical_basis_sweep(names, dim)
        elif extra_assignments is not None:
            assigns = extra_assignments
        else:
            assigns = [{}]
        for extra in assigns:
            key = tuple(sorted((n, tuple(v)) for n, v in extra.items() if n in names))
            jobs.append((labeled.label, poly, extra, key))

    def run(job) -> VanishingCheck:
        label, poly, extra, key = job
        value = evaluate_poly(poly, realization, extra)
        passed = (value == 0) if expect == "zero" else (value != 0)
        return VanishingCheck(label, key, value, passed)

    checks = ordered_map(run, jobs, workers)
    return VanishingReport(tuple(checks), expect)
