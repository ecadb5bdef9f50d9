"""Command-line interface.

Subcommands: validate, generate, sample, verify, gc, liftcheck.  All I/O is
UTF-8 JSON or plain text on files or stdio, and output is byte-identical
for identical inputs, seeds, budgets and any worker count.

Exit codes: 0 success, 1 usage/parse error, 2 validation failure,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from math import factorial
from pathlib import Path

from .brackets import LabeledExtensor, labeled_join, labeled_meet, to_bracket_polynomial
from .concurrency import ordered_map
from .generators import (
    ExtraVector,
    GraphData,
    LabeledPolynomial,
    builtin_graph_data,
    builtin_graph_data_names,
    circuit_polynomials,
    graph_polynomial,
    graph_polynomial_brackets,
    lifting_polynomials,
)
from .matroids import MatroidError, PavingMatroid, builtin_matroid, builtin_matroid_names
from .polyfiles import parse_polynomials, render_polynomials
from .realizations import Realization
from .samplers import ResamplingExhausted, UnknownFamily, sample_family
from .scalars import parse_rational
from .verify import verify_vanishing

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_VERIFY = 3


@dataclass(frozen=True)
class CommandConfig:
    """Budgets and modes shared by the generating subcommands."""

    seed: int = 0
    budget_minor: int = 4
    max_p_size: int = 6
    cycle_budget: int = 12
    expand_budget: int = 5000
    q_mode: str = "symbolic"  # symbolic | canonical | concrete
    q_vector: tuple | None = None
    workers: int = 1

    def __post_init__(self):
        if self.budget_minor <= 0 or self.cycle_budget <= 0 or self.max_p_size <= 0:
            raise ValueError("budgets must be positive")


def _load_matroid(spec: str) -> PavingMatroid:
    path = Path(spec)
    if path.exists():
        return PavingMatroid.from_json(path.read_text())
    return builtin_matroid(spec)


def _write_out(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_q(q: str, dim: int) -> tuple[str, tuple | None]:
    if q == "symbolic":
        return "symbolic", None
    if q == "canonical":
        return "canonical", None
    coords = tuple(parse_rational(c) for c in q.split(","))
    if len(coords) != dim:
        raise ValueError(f"expected {dim} coordinates, got {len(coords)}")
    return "concrete", coords


def _extra_vectors_for(config: CommandConfig, dim: int) -> list[ExtraVector]:
    if config.q_mode == "symbolic":
        return [ExtraVector.symbolic("q")]
    if config.q_mode == "canonical":
        return [ExtraVector.basis(i, dim) for i in range(1, dim + 1)]
    return [ExtraVector.concrete(config.q_vector)]


# -- subcommands ------------------------------------------------------------


def cmd_validate(args) -> int:
    try:
        matroid = _load_matroid(args.matroid)
    except (json.JSONDecodeError, OSError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MatroidError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    print(
        f"valid {matroid.rank}-paving matroid on {matroid.size} points, "
        f"{len(matroid.hyperplanes)} hyperplanes"
    )
    return EXIT_OK


def _generate_circuits(matroid) -> list[LabeledPolynomial]:
    return circuit_polynomials(matroid)


def _generate_lifting(matroid, config: CommandConfig) -> list[LabeledPolynomial]:
    extras = _extra_vectors_for(config, matroid.rank)
    submatroids = [
        sub
        for sub in matroid.full_rank_submatroids()
        if 0 < sub.size - matroid.rank + 1 <= config.budget_minor
    ]

    def run(job):
        sub, q = job
        return lifting_polynomials(sub, q)

    jobs = [(sub, q) for sub in submatroids for q in extras]
    out: list[LabeledPolynomial] = []
    for chunk in ordered_map(run, jobs, config.workers):
        out.extend(chunk)
    return out


def _graph_data_for(matroid, args) -> GraphData:
    if args.graph_data:
        payload = json.loads(Path(args.graph_data).read_text())
        return GraphData.from_json_dict(matroid, payload)
    name = matroid.name or ""
    if name in builtin_graph_data_names():
        return builtin_graph_data(name)
    raise MatroidError(
        f"no worked-example graph data for {name!r}; pass --graph-data"
    )


def _generate_graph(matroid, config: CommandConfig, args) -> list[LabeledPolynomial]:
    data = _graph_data_for(matroid, args)
    label = (
        f"graph J={sorted(data.anchor)} P={list(data.points)} "
        f"C={[list(c) for c in data.circuits]} q={[e.label() for e in data.extras]}"
    )
    symbolic = all(e.is_symbolic for e in data.extras)
    estimate = factorial(matroid.rank) ** data.k
    if symbolic and estimate > config.expand_budget:
        return [LabeledPolynomial(label, graph_polynomial_brackets(data))]
    return [LabeledPolynomial(label, graph_polynomial(data))]


def cmd_generate(args) -> int:
    try:
        matroid = _load_matroid(args.matroid)
    except (json.JSONDecodeError, OSError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MatroidError as exc:
        print(f"invalid matroid: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    try:
        q_mode, q_vector = _parse_q(args.q, matroid.rank)
        config = CommandConfig(
            seed=args.seed,
            budget_minor=args.budget_minor,
            expand_budget=args.expand_budget,
            q_mode=q_mode,
            q_vector=q_vector,
            workers=args.workers,
        )
    except ValueError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        items: list[LabeledPolynomial] = []
        if args.which in ("circuits", "all"):
            items.extend(_generate_circuits(matroid))
        if args.which in ("lifting", "all"):
            items.extend(_generate_lifting(matroid, config))
        if args.which in ("graph", "all"):
            items.extend(_generate_graph(matroid, config, args))
    except MatroidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    _write_out(render_polynomials(items), args.out)
    return EXIT_OK


def cmd_sample(args) -> int:
    try:
        realization = sample_family(args.family, args.seed)
    except UnknownFamily as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResamplingExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    _write_out(realization.to_json() + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        polys = parse_polynomials(Path(args.polys).read_text())
        realization = Realization.from_json(Path(args.realization).read_text())
    except (OSError, json.JSONDecodeError, ValueError, KeyError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sweep = args.q == "canonical"
    extra_assignments = None
    if args.q and args.q != "canonical":
        try:
            coords = tuple(parse_rational(c) for c in args.q.split(","))
        except ValueError as exc:
            print(f"parse error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        names: set[str] = set()
        from .verify import extra_names

        for labeled in polys:
            names.update(extra_names(labeled.polynomial))
        extra_assignments = [{name: coords for name in sorted(names)}]
    try:
        report = verify_vanishing(
            polys,
            realization,
            extra_assignments=extra_assignments,
            sweep=sweep,
            expect=args.expect,
            workers=args.workers,
        )
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _write_out(report.to_json_lines() + "\n", args.out)
    return EXIT_OK if report.all_pass else EXIT_VERIFY


def _parse_point_list(text: str) -> tuple:
    return tuple(int(t) if t.strip().isdigit() else t.strip() for t in text.split(","))


def cmd_gc(args) -> int:
    try:
        operands = [_parse_point_list(spec) for spec in args.extensors]
        if args.op == "meet":
            if len(operands) != 2:
                raise ValueError("meet takes exactly two extensors")
            result = labeled_meet(
                LabeledExtensor.points(operands[0], args.dim),
                LabeledExtensor.points(operands[1], args.dim),
            )
        else:
            result = LabeledExtensor.points(operands[0], args.dim)
            for labels in operands[1:]:
                result = labeled_join(result, LabeledExtensor.points(labels, args.dim))
        for labels in args.join or []:
            result = labeled_join(
                result, LabeledExtensor.points(_parse_point_list(labels), args.dim)
            )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if result.grade == args.dim:
        print(to_bracket_polynomial(result).pretty())
    elif result.is_zero():
        print("0")
    else:
        parts = []
        for key in sorted(result.parts, key=lambda k: tuple(str(x) for x in k)):
            coeff = result.parts[key].pretty()
            parts.append(f"({coeff}) * [{' '.join(str(l) for l in key)}]")
        print(" + ".join(parts))
    return EXIT_OK


def cmd_liftcheck(args) -> int:
    try:
        matroid = _load_matroid(args.matroid)
    except (json.JSONDecodeError, OSError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MatroidError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    k = len(matroid.circuits_n())
    n = matroid.rank
    if matroid.liftable_sufficient():
        print(f"liftable: certified (|M| >= k+n: {matroid.size} >= {k + n})")
    else:
        print(f"inconclusive ({matroid.size} < {k + n})")
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pavingideals",
        description="Generators of matroid ideals for paving matroids, with exact verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    names = ", ".join(builtin_matroid_names())

    p = sub.add_parser("validate", help="validate a matroid JSON file or builtin name")
    p.add_argument("--matroid", required=True, help=f"path or builtin name ({names})")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("generate", help="emit circuit/lifting/graph polynomials")
    p.add_argument("--matroid", required=True)
    p.add_argument("--which", choices=("circuits", "lifting", "graph", "all"), default="all")
    p.add_argument("--q", default="symbolic", help="symbolic | canonical | comma-separated rationals")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget-minor", type=int, default=4)
    p.add_argument("--expand-budget", type=int, default=5000)
    p.add_argument("--graph-data", help="GraphData JSON path (defaults to the builtin instance)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_generate)

    p = sub.add_parser("sample", help="sample an exact rational realization")
    p.add_argument("--family", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_sample)

    p = sub.add_parser("verify", help="evaluate generated polynomials on a realization")
    p.add_argument("--polys", required=True)
    p.add_argument("--realization", required=True)
    p.add_argument("--q", help="canonical (basis sweep) or comma-separated rationals")
    p.add_argument("--expect", choices=("zero", "nonzero"), default="zero")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("gc", help="join/meet of labeled point extensors")
    p.add_argument("op", choices=("meet", "join"))
    p.add_argument("extensors", nargs="+", help="comma-separated point labels, e.g. 3,4")
    p.add_argument("--join", action="append", help="join the result with more points")
    p.add_argument("--dim", type=int, required=True)
    p.set_defaults(fn=cmd_gc)

    p = sub.add_parser("liftcheck", help="sufficient-liftability verdict")
    p.add_argument("--matroid", required=True)
    p.set_defaults(fn=cmd_liftcheck)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
