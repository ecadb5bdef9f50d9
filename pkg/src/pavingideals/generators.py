"""Generators of matroid ideals: circuit, lifting and graph polynomials.

Circuit polynomials are the maximal minors of the generic coordinate matrix
on the columns of a size-n circuit.  Lifting polynomials are the
(|N|-n+1)-minors of the liftability matrix of a full-rank submatroid N: one
row per size-n circuit, whose nonzero entries are signed brackets of the
circuit with one point swapped out for an auxiliary vector q.  Graph
polynomials come from collections of circuits threaded through a set of
points outside the closure of an anchor set J: the signed sum over disjoint
cycle collections of a dependency digraph, which equals the determinant of
the circuit/point bracket matrix after clearing denominators.  Both routes
are implemented; the determinant is the production path and the cycle
expansion is kept as an independent oracle.

Sign conventions: circuit elements are always listed ascending by point id
when forming brackets, so every emitted polynomial is canonical; agreement
with hand-written displays is up to one overall sign.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

import networkx as nx

from .linalg import ScalarMatrix
from .matroids import NotFullRank, PavingMatroid, Submatroid
from .poly import Polynomial
from .polymatrix import MinorEngine, PolyMatrix
from .scalars import Scalar, as_scalar
from .variables import Variable, entry_var, extra_var


class HypothesisViolation(ValueError):
    """The data fails a structural requirement of the construction."""


class TooLarge(ValueError):
    """An enumeration exceeded its configured budget."""


# -- auxiliary vectors -------------------------------------------------------


@dataclass(frozen=True)
class ExtraVector:
    """Auxiliary vector appended inside brackets: symbolic or concrete."""

    name: str | None = None
    coords: tuple[Scalar, ...] | None = None

    def __post_init__(self):
        if (self.name is None) == (self.coords is None):
            raise ValueError("an extra vector is either symbolic or concrete")

    @staticmethod
    def symbolic(name: str) -> "ExtraVector":
        return ExtraVector(name=name)

    @staticmethod
    def concrete(coords: Sequence[Scalar]) -> "ExtraVector":
        return ExtraVector(coords=tuple(as_scalar(c) for c in coords))

    @staticmethod
    def basis(index: int, dim: int) -> "ExtraVector":
        return ExtraVector.concrete(tuple(1 if i == index else 0 for i in range(1, dim + 1)))

    @property
    def is_symbolic(self) -> bool:
        return self.name is not None

    def column(self, dim: int) -> list[Polynomial]:
        if self.coords is not None:
            if len(self.coords) != dim:
                raise ValueError(f"extra vector of length {len(self.coords)} in dimension {dim}")
            return [Polynomial.constant(c) for c in self.coords]
        return [Polynomial.variable(extra_var(r, self.name)) for r in range(1, dim + 1)]

    def label(self) -> str:
        if self.name is not None:
            return self.name
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def to_json_dict(self) -> dict:
        if self.name is not None:
            return {"symbolic": self.name}
        from .scalars import format_rational

        return {"concrete": [format_rational(c) for c in self.coords]}

    @staticmethod
    def from_json_dict(data: dict) -> "ExtraVector":
        if "symbolic" in data:
            return ExtraVector.symbolic(data["symbolic"])
        return ExtraVector.concrete([as_scalar(c) for c in data["concrete"]])


ColumnSpec = object  # int point id | str extra name | ExtraVector | sequence of scalars


def _column(spec: ColumnSpec, dim: int) -> list[Polynomial]:
    if isinstance(spec, int):
        return [Polynomial.variable(entry_var(r, spec)) for r in range(1, dim + 1)]
    if isinstance(spec, str):
        return ExtraVector.symbolic(spec).column(dim)
    if isinstance(spec, ExtraVector):
        return spec.column(dim)
    return [Polynomial.constant(as_scalar(c)) for c in spec]


def bracket(columns: Sequence[ColumnSpec], dim: int) -> Polynomial:
    """Determinant of the named columns, in the order given."""
    cols = [_column(spec, dim) for spec in columns]
    if len(cols) != dim:
        raise ValueError(f"bracket needs {dim} columns, got {len(cols)}")
    rows = [[cols[j][i] for j in range(dim)] for i in range(dim)]
    from .polymatrix import determinant

    return determinant(PolyMatrix.from_rows(rows))


# -- circuit polynomials ----------------------------------------------------


class LabeledPolynomial(NamedTuple):
    label: str
    polynomial: Polynomial


def circuit_polynomials(matroid: PavingMatroid) -> list[LabeledPolynomial]:
    """One generic-matrix minor per size-n circuit, columns ascending."""
    out = []
    for circuit in matroid.circuits_n():
        poly = bracket(list(circuit), matroid.rank)
        out.append(LabeledPolynomial(f"circuit B={list(circuit)}", poly))
    return out


# -- liftability matrices ----------------------------------------------------


def liftability_row(
    circuit: Sequence[int], q: ExtraVector, columns: Sequence[int], dim: int
) -> list[Polynomial]:
    """Row of the liftability matrix for one circuit, over the given columns.

    The circuit is listed ascending; the entry at its i-th element is
    (-1)^(i-1) times the bracket of the other elements followed by q.
    """
    circuit = tuple(sorted(circuit))
    entries = {}
    for i, point in enumerate(circuit):
        others = circuit[:i] + circuit[i + 1 :]
        poly = bracket(list(others) + [q], dim)
        entries[point] = poly if i % 2 == 0 else -poly
    zero = Polynomial.zero()
    return [entries.get(p, zero) for p in columns]


def liftability_matrix(
    matroid: PavingMatroid | Submatroid, q: ExtraVector, ambient: int | None = None
) -> PolyMatrix:
    """Rows: circuits of size = ambient dimension (sorted); columns: points.

    For a rank-n paving matroid with ambient n these are the size-n
    circuits; a rank-(n-1) uniform matroid in ambient n contributes all its
    size-n circuits instead, which is what non-degenerate lifting needs.
    """
    dim = ambient if ambient is not None else matroid.rank
    if q.coords is not None and len(q.coords) != dim:
        raise ValueError("extra vector dimension disagrees with the ambient dimension")
    circuits = matroid.circuits_of_size(dim)
    columns = tuple(matroid.points)
    rows = [liftability_row(c, q, columns, dim) for c in circuits]
    return PolyMatrix(tuple(circuits), columns, tuple(tuple(r) for r in rows))


def liftability_matrix_at(
    matroid: PavingMatroid | Submatroid,
    vectors: Mapping[int, Sequence[Scalar]],
    q: Sequence[Scalar],
    ambient: int | None = None,
) -> ScalarMatrix:
    """Liftability matrix evaluated at concrete vectors (numeric brackets)."""
    dim = ambient if ambient is not None else len(q)
    circuits = matroid.circuits_of_size(dim)
    columns = tuple(matroid.points)
    rows = []
    for circuit in circuits:
        circuit = tuple(sorted(circuit))
        entries = {}
        for i, point in enumerate(circuit):
            others = circuit[:i] + circuit[i + 1 :]
            cols = [vectors[p] for p in others] + [q]
            det = ScalarMatrix.from_rows(
                [[cols[jj][ii] for jj in range(dim)] for ii in range(dim)]
            ).determinant()
            entries[point] = det if i % 2 == 0 else -det
        rows.append([entries.get(p, 0) for p in columns])
    return ScalarMatrix.from_rows(rows)


def lifting_polynomials(
    submatroid: Submatroid | PavingMatroid,
    q: ExtraVector,
    minor_size: int | None = None,
    memo_limit: int = 8,
) -> list[LabeledPolynomial]:
    """All (|N|-n+1)-minors of the liftability matrix of a full-rank N.

    Columns are restricted to N's points.  A nonpositive minor size, or one
    exceeding either matrix dimension, yields no polynomials.
    """
    if isinstance(submatroid, Submatroid):
        if not submatroid.is_full_rank():
            raise NotFullRank(f"submatroid on {submatroid.points} is not full rank")
        n = submatroid.parent.rank
        tag = f"N={list(submatroid.points)}"
    else:
        n = submatroid.rank
        tag = f"N={list(submatroid.points)}"
    size = len(submatroid.points) - n + 1 if minor_size is None else minor_size
    matrix = liftability_matrix(submatroid, q, ambient=n)
    if size <= 0 or size > matrix.n_rows or size > matrix.n_cols:
        return []
    engine = MinorEngine(matrix, memo_limit=memo_limit)
    out = []
    for row_idx in combinations(range(matrix.n_rows), size):
        for col_idx in combinations(range(matrix.n_cols), size):
            poly = engine.minor(row_idx, col_idx)
            row_labels = [list(matrix.row_labels[i]) for i in row_idx]
            col_labels = [matrix.col_labels[j] for j in col_idx]
            label = (
                f"lifting-minor {tag} rows={row_labels} cols={col_labels} q={q.label()}"
            )
            out.append(LabeledPolynomial(label, poly))
    return out


# -- graph data and dependency digraphs ------------------------------------------


@dataclass(frozen=True)
class GraphData:
    """Anchor set J, threaded points P, one circuit and extra vector each.

    The i-th point must lie in the i-th circuit, every circuit must stay
    inside P together with J, and P must avoid the closure of J.  Repeating
    a circuit is legal (with equal extra vectors the polynomial collapses to
    zero, which is the degenerate case of the construction).
    """

    matroid: PavingMatroid
    anchor: frozenset[int]
    points: tuple[int, ...]
    circuits: tuple[tuple[int, ...], ...]
    extras: tuple[ExtraVector, ...]

    def __post_init__(self):
        object.__setattr__(self, "circuits", tuple(tuple(sorted(c)) for c in self.circuits))

    @property
    def k(self) -> int:
        return len(self.points)

    def validate(self) -> None:
        m = self.matroid
        if len(self.circuits) != self.k or len(self.extras) != self.k:
            raise HypothesisViolation("need one circuit and one extra vector per point")
        if len(set(self.points)) != self.k:
            raise HypothesisViolation("threaded points must be distinct")
        ground = set(m.points)
        if not (set(self.points) <= ground and self.anchor <= ground):
            raise HypothesisViolation("points leave the ground set")
        closure = m.closure(self.anchor)
        overlap = set(self.points) & closure
        if overlap:
            raise HypothesisViolation(
                f"points {sorted(overlap)} lie in the closure of the anchor set"
            )
        allowed = self.anchor | set(self.points)
        n_circuits = set(m.circuits_n())
        for p, c in zip(self.points, self.circuits):
            if len(c) != m.rank:
                raise HypothesisViolation(f"circuit {list(c)} has size != {m.rank}")
            if c not in n_circuits:
                raise HypothesisViolation(f"{list(c)} is not a size-{m.rank} circuit")
            if p not in c:
                raise HypothesisViolation(f"point {p} missing from its circuit {list(c)}")
            if not set(c) <= allowed:
                raise HypothesisViolation(
                    f"circuit {list(c)} uses points outside the anchor set and P"
                )

    def to_json_dict(self) -> dict:
        return {
            "J": sorted(self.anchor),
            "P": list(self.points),
            "C": [list(c) for c in self.circuits],
            "extra": [e.to_json_dict() for e in self.extras],
        }

    @staticmethod
    def from_json_dict(matroid: PavingMatroid, data: dict) -> "GraphData":
        return GraphData(
            matroid,
            frozenset(data["J"]),
            tuple(data["P"]),
            tuple(tuple(c) for c in data["C"]),
            tuple(ExtraVector.from_json_dict(e) for e in data["extra"]),
        )


@dataclass(frozen=True)
class DependencyDigraph:
    """Loopless digraph on the threaded points; weights exact or symbolic."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    weights: Mapping[tuple[int, int], Scalar] | None = None

    def weight(self, edge: tuple[int, int]) -> Scalar:
        if self.weights is None:
            raise ValueError("symbolic digraph has no numeric weights")
        return self.weights[edge]

    def simple_cycles(self) -> list[tuple[int, ...]]:
        """All simple directed cycles, rotated to start at their least vertex."""
        g = nx.DiGraph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        cycles = []
        for nodes in nx.simple_cycles(g):
            pivot = nodes.index(min(nodes))
            cycles.append(tuple(nodes[pivot:] + nodes[:pivot]))
        cycles.sort()
        return cycles

    def cycle_collections(self, max_collections: int = 100_000) -> list[tuple[tuple[int, ...], ...]]:
        """Nonempty sets of pairwise vertex-disjoint cycles, sorted."""
        cycles = self.simple_cycles()
        out: list[tuple[tuple[int, ...], ...]] = []

        def extend(start: int, chosen: list[int], used: set[int]):
            if len(out) > max_collections:
                raise TooLarge("too many disjoint cycle collections")
            if chosen:
                out.append(tuple(cycles[i] for i in chosen))
            for i in range(start, len(cycles)):
                verts = set(cycles[i])
                if verts & used:
                    continue
                chosen.append(i)
                extend(i + 1, chosen, used | verts)
                chosen.pop()

        extend(0, [], set())
        out.sort()
        return out


def cycle_edges(cycle: tuple[int, ...]) -> list[tuple[int, int]]:
    return [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def build_graph(
    data: GraphData,
    vectors: Mapping[int, Sequence[Scalar]] | None = None,
    extra_values: Mapping[str, Sequence[Scalar]] | None = None,
) -> DependencyDigraph:
    """Dependency digraph of the data.

    Symbolic mode (no vectors) inserts the edge p_i -> p_j whenever p_j sits
    in c_i besides p_i, i.e. generic nonvanishing of the coefficient.
    Numeric mode reads the dependency coefficients off a realization as
    signed bracket quotients and drops exact zeros.
    """
    data.validate()
    point_set = set(data.points)
    if vectors is None:
        edges = []
        for p, c in zip(data.points, data.circuits):
            for other in sorted(set(c) & point_set - {p}):
                edges.append((p, other))
        return DependencyDigraph(tuple(data.points), tuple(sorted(set(edges))), None)
    dim = data.matroid.rank
    weights: dict[tuple[int, int], Scalar] = {}
    edges = []
    for p, c, extra in zip(data.points, data.circuits, data.extras):
        if extra.coords is not None:
            q = extra.coords
        else:
            if not extra_values or extra.name not in extra_values:
                raise HypothesisViolation(
                    f"numeric mode needs a value for extra vector {extra.name!r}"
                )
            q = tuple(extra_values[extra.name])
        diag = _numeric_bracket([vectors[x] for x in _drop(c, p)] + [q], dim)
        if diag == 0:
            raise HypothesisViolation(
                f"degenerate dependency: bracket of {list(_drop(c, p))} with q vanishes"
            )
        for other in sorted(set(c) & point_set - {p}):
            num = _numeric_bracket([vectors[x] for x in _drop(c, other)] + [q], dim)
            sign_p = (-1) ** c.index(p)
            sign_other = (-1) ** c.index(other)
            # alpha_{p,other} = -N[p-row][other] / N[p-row][p].
            value = -(sign_other * num) / (sign_p * diag)
            if value != 0:
                edges.append((p, other))
                weights[(p, other)] = value
    return DependencyDigraph(tuple(data.points), tuple(sorted(edges)), weights)


def _drop(circuit: tuple[int, ...], point: int) -> tuple[int, ...]:
    return tuple(x for x in circuit if x != point)


def _numeric_bracket(cols: list[Sequence[Scalar]], dim: int) -> Scalar:
    return ScalarMatrix.from_rows(
        [[cols[j][i] for j in range(dim)] for i in range(dim)]
    ).determinant()


def cycle_identity_value(graph: DependencyDigraph) -> Scalar:
    """1 + sum over disjoint cycle collections of (-1)^size * weight product.

    Equals det(I - A) for the weight matrix A, and vanishes whenever the
    weights come from genuine linear dependencies of nonzero vectors.
    """
    total: Scalar = 1
    for collection in graph.cycle_collections():
        prod: Scalar = 1
        for cyc in collection:
            for edge in cycle_edges(cyc):
                prod = prod * graph.weight(edge)
        total = total + (-1) ** len(collection) * prod
    return total


# -- graph polynomials ----------------------------------------------------------


def graph_matrix(data: GraphData) -> PolyMatrix:
    """k-by-k bracket matrix: row i from circuit c_i with its extra vector,
    columns the threaded points."""
    data.validate()
    dim = data.matroid.rank
    rows = []
    for c, extra in zip(data.circuits, data.extras):
        rows.append(liftability_row(c, extra, data.points, dim))
    row_labels = tuple(
        (c, e.label(), i) for i, (c, e) in enumerate(zip(data.circuits, data.extras))
    )
    return PolyMatrix(row_labels, tuple(data.points), tuple(tuple(r) for r in rows))


def graph_polynomial(data: GraphData, memo_limit: int = 8) -> Polynomial:
    """Determinant route: det of the circuit/point bracket matrix."""
    matrix = graph_matrix(data)
    return MinorEngine(matrix, memo_limit=memo_limit).determinant()


def graph_polynomial_via_cycles(data: GraphData, max_points: int = 8) -> Polynomial:
    """Cycle route: expand the cycle identity in bracket quotients and clear
    denominators with the diagonal brackets.  Oracle for graph_polynomial."""
    data.validate()
    if data.k > max_points:
        raise TooLarge(f"cycle expansion budget is {max_points} points, got {data.k}")
    matrix = graph_matrix(data)
    index = {p: i for i, p in enumerate(data.points)}
    diag = [matrix.entry(i, i) for i in range(data.k)]
    digraph = build_graph(data)
    total = Polynomial.one()
    for d in diag:
        total = total * d
    for collection in digraph.cycle_collections():
        used = set()
        term = Polynomial.one() if len(collection) % 2 == 0 else -Polynomial.one()
        for cyc in collection:
            used.update(cyc)
            for a, b in cycle_edges(cyc):
                term = term * (-matrix.entry(index[a], index[b]))
        for p in data.points:
            if p not in used:
                term = term * diag[index[p]]
        total = total + term
    return total


# -- bracket-level graph polynomials ----------------------------------------------


def _require_symbolic_extras(data: GraphData) -> list[str]:
    names = []
    for extra in data.extras:
        if not extra.is_symbolic:
            raise HypothesisViolation(
                "bracket-level graph polynomials need symbolic extra vectors"
            )
        names.append(extra.name)
    return names


def graph_matrix_brackets(data: GraphData) -> PolyMatrix:
    """The circuit/point matrix with formal brackets as entries.

    Exact and tiny regardless of how large the coordinate expansion would
    be; ``expand`` on the resulting determinant recovers the coordinate
    polynomial when that is feasible.
    """
    from .brackets import BracketPolynomial

    data.validate()
    names = _require_symbolic_extras(data)
    rows = []
    for c, name in zip(data.circuits, names):
        entries = {}
        for i, point in enumerate(c):
            others = c[:i] + c[i + 1 :]
            entry = BracketPolynomial.bracket(others + (name,))
            entries[point] = entry if i % 2 == 0 else -entry
        rows.append(
            tuple(entries.get(p, BracketPolynomial.zero()) for p in data.points)
        )
    row_labels = tuple(
        (c, e.label(), i) for i, (c, e) in enumerate(zip(data.circuits, data.extras))
    )
    return PolyMatrix(row_labels, tuple(data.points), tuple(rows))


def graph_polynomial_brackets(data: GraphData):
    """Determinant route at the bracket level."""
    return MinorEngine(graph_matrix_brackets(data)).determinant()


def graph_polynomial_via_cycles_brackets(
    data: GraphData, dedupe_denominators: bool = False, max_points: int = 12
):
    """Cycle route at the bracket level.

    With ``dedupe_denominators`` the identity is cleared by each distinct
    diagonal bracket once instead of once per row, which is the minimal
    polynomial form when parallel rows share a dependency denominator; a
    collection that would consume a shared denominator twice is rejected.
    """
    from .brackets import BracketPolynomial

    data.validate()
    if data.k > max_points:
        raise TooLarge(f"cycle expansion budget is {max_points} points, got {data.k}")
    matrix = graph_matrix_brackets(data)
    index = {p: i for i, p in enumerate(data.points)}
    diag = [matrix.entry(i, i) for i in range(data.k)]
    # Group rows whose diagonal brackets agree up to sign; each class is
    # cleared once, and a used row contributes its sign relative to the
    # class representative.
    row_sign = [1] * data.k
    if dedupe_denominators:
        classes: dict = {}
        for i, d in enumerate(diag):
            rep, sign = d.normalized_sign()
            classes.setdefault(rep, []).append(i)
            row_sign[i] = sign
        class_list = list(classes.items())
    else:
        class_list = [(d, [i]) for i, d in enumerate(diag)]
    digraph = build_graph(data)
    one = BracketPolynomial.one()
    total = one
    for d, _ in class_list:
        total = total * d
    for collection in digraph.cycle_collections():
        used_rows = set()
        for cyc in collection:
            used_rows.update(index[v] for v in cyc)
        term = one if len(collection) % 2 == 0 else -one
        for cyc in collection:
            for a, b in cycle_edges(cyc):
                entry = matrix.entry(index[a], index[b])
                term = term * (-entry).scale(row_sign[index[a]])
        for d, members in class_list:
            hits = sum(1 for i in members if i in used_rows)
            if hits == 0:
                term = term * d
            elif hits > 1:
                raise HypothesisViolation(
                    "a shared dependency denominator is consumed twice; "
                    "denominator deduplication does not apply to this data"
                )
        total = total + term
    return total


# -- finite generating family ---------------------------------------------------


@dataclass(frozen=True)
class FamilyBudget:
    """Enumeration caps for the finite generating family."""

    max_anchor_size: int = 3
    max_p_size: int = 4
    max_circuit_tuples: int = 4
    max_basis_assignments: int = 9
    max_polynomials: int = 200


@dataclass(frozen=True)
class GeneratingFamily:
    polynomials: tuple[LabeledPolynomial, ...]
    truncated: bool


def finite_generating_family(
    matroid: PavingMatroid, budget: FamilyBudget = FamilyBudget()
) -> GeneratingFamily:
    """Circuit polynomials plus canonical-basis graph polynomials.

    Anchor sets run over closed sets, the threaded set is the whole
    complement, circuits are threaded with distinct representatives, and
    extra vectors sweep the canonical basis one circuit at a time.  The
    enumeration respects the budget and reports truncation; polynomials are
    deduplicated up to sign.
    """
    if matroid.max_degree() > 2:
        warnings.warn(
            "matroid has a point of degree > 2: the emitted family is not known "
            "to generate the full ideal",
            stacklevel=2,
        )
    emitted: list[LabeledPolynomial] = []
    seen: set[Polynomial] = set()
    truncated = False
    for labeled in circuit_polynomials(matroid):
        normal, _ = labeled.polynomial.normalized_sign()
        if normal not in seen:
            seen.add(normal)
            emitted.append(labeled)

    n = matroid.rank
    circuits = matroid.circuits_n()
    for anchor in matroid.closed_sets(max_size=budget.max_anchor_size):
        points = tuple(p for p in matroid.points if p not in anchor)
        if not points or len(points) > budget.max_p_size:
            if points:
                truncated = True
            continue
        allowed = anchor | set(points)
        choices = []
        for p in points:
            cands = [c for c in circuits if p in c and set(c) <= allowed]
            choices.append(cands)
        if any(not c for c in choices):
            continue
        tuple_count = 0
        for combo in product(*choices):
            if len(set(combo)) != len(combo):
                continue
            tuple_count += 1
            if tuple_count > budget.max_circuit_tuples:
                truncated = True
                break
            assignments = 0
            for basis_pick in product(range(1, n + 1), repeat=len(points)):
                assignments += 1
                if assignments > budget.max_basis_assignments:
                    truncated = True
                    break
                extras = tuple(ExtraVector.basis(b, n) for b in basis_pick)
                data = GraphData(matroid, anchor, points, combo, extras)
                poly = graph_polynomial(data)
                if poly.is_zero():
                    continue
                normal, _ = poly.normalized_sign()
                if normal in seen:
                    continue
                seen.add(normal)
                label = (
                    f"graph J={sorted(anchor)} P={list(points)} "
                    f"C={[list(c) for c in combo]} q={[f'e{b}' for b in basis_pick]}"
                )
                emitted.append(LabeledPolynomial(label, normal))
                if len(emitted) >= budget.max_polynomials:
                    return GeneratingFamily(tuple(emitted), True)
    return GeneratingFamily(tuple(emitted), truncated)


# -- named constructions -----------------------------------------------------------


class BadIndexSet(ValueError):
    pass


def pascal_gc_quartic_brackets():
    """Join of the three opposite-side meets of the hexagon, as brackets."""
    from .brackets import meet_then_join

    return meet_then_join(3, [((1, 2), (4, 5)), ((2, 3), (5, 6)), ((3, 4), (6, 1))])


def pascal_gc_quartic() -> Polynomial:
    """Same quartic expanded into matrix-entry variables."""
    return pascal_gc_quartic_brackets().expand(3)


def rnc_polynomial_brackets(curve_degree: int, hexagon: Sequence[int]):
    """Two-term bracket difference for d+4 points on a degree-d normal curve.

    ``hexagon`` is the cyclically ordered choice of six point indices; the
    three formal columns x1, x2, x3 stand for the meets of opposite sides.
    Returns a bracket polynomial over ambient dimension d+1.
    """
    from .brackets import BracketPolynomial

    d = curve_degree
    if d < 2:
        raise BadIndexSet("curve degree must be at least 2")
    hexagon = tuple(hexagon)
    if len(hexagon) != 6 or len(set(hexagon)) != 6:
        raise BadIndexSet("need six distinct point indices")
    if not all(1 <= i <= d + 4 for i in hexagon):
        raise BadIndexSet(f"indices must lie in 1..{d + 4}")
    complement = tuple(sorted(set(range(1, d + 5)) - set(hexagon)))
    x = ("x1", "x2", "x3")
    firsts, seconds = [], []
    for t in range(6):
        head = hexagon[t]
        tail = hexagon[(t + 1) % 6]
        xi = x[t % 3]
        if t < 3:
            extras = tuple(f"r{t + 1}_{s}" for s in range(1, d))
            firsts.append((head, xi) + extras)
            seconds.append((tail, xi) + extras)
        else:
            extras = complement + (f"q{t - 2}",)
            firsts.append((head, xi) + extras)
            seconds.append((tail, xi) + extras)
    term1 = BracketPolynomial.constant(1)
    term2 = BracketPolynomial.constant(1)
    for labels in firsts:
        term1 = term1 * BracketPolynomial.bracket(labels)
    for labels in seconds:
        term2 = term2 * BracketPolynomial.bracket(labels)
    return term1 - term2


def rnc_polynomial(curve_degree: int, hexagon: Sequence[int]) -> Polynomial:
    """Expanded form of the normal-curve bracket difference (degree 2 only;
    higher degrees explode combinatorially — use the bracket form)."""
    if curve_degree > 2:
        raise TooLarge("expansion above curve degree 2 is impractical; use rnc_polynomial_brackets")
    return rnc_polynomial_brackets(curve_degree, hexagon).expand(curve_degree + 1)


# -- canonical worked-example data -------------------------------------------------


def builtin_graph_data(name: str) -> GraphData:
    """The worked-example instances, keyed by matroid name."""
    from .matroids import builtin_matroid, grid_point

    key = name.strip().lower()
    if key in ("qs", "quadrilateral"):
        m = builtin_matroid("qs")
        return GraphData(
            m,
            frozenset({1, 5, 6}),
            (4, 3, 2),
            ((2, 4, 6), (3, 4, 5), (1, 2, 3)),
            tuple(ExtraVector.symbolic(f"q{i}") for i in (1, 2, 3)),
        )
    if key == "pascal":
        m = builtin_matroid("pascal")
        return GraphData(
            m,
            frozenset({7, 8, 9}),
            (6, 5, 4, 3, 2, 1),
            ((1, 6, 9), (5, 6, 8), (4, 5, 7), (3, 4, 9), (2, 3, 8), (1, 2, 7)),
            tuple(ExtraVector.symbolic(f"q{i}") for i in range(1, 7)),
        )
    if key in ("fig2c", "fig2_center"):
        m = builtin_matroid("fig2c")
        return GraphData(
            m,
            frozenset({6, 7, 8}),
            (1, 2, 3, 4, 5),
            ((1, 2, 3), (2, 5, 7), (3, 4, 7), (1, 4, 8), (1, 5, 6)),
            tuple(ExtraVector.symbolic(q) for q in ("q1", "q2", "q4", "q5", "q3")),
        )
    if key in ("fig2r", "fig2_right"):
        m = builtin_matroid("fig2r")
        return GraphData(
            m,
            frozenset({5, 6, 7}),
            (1, 2, 3, 4),
            ((1, 3, 6), (1, 2, 5), (2, 3, 4), (1, 4, 7)),
            tuple(ExtraVector.symbolic(f"q{i}") for i in range(1, 5)),
        )
    if key in ("concurrent3", "concurrent_lines"):
        m = builtin_matroid("concurrent3")
        return GraphData(
            m,
            frozenset({7}),
            (3, 4),
            ((3, 4, 7), (3, 4, 7)),
            (ExtraVector.symbolic("qa"), ExtraVector.symbolic("qb")),
        )
    if key == "grid3x4":
        m = builtin_matroid("grid3x4")
        k = 4
        anchor = frozenset(grid_point(i, 4, k) for i in (1, 2, 3))
        pairs = []
        for i in (1, 2, 3):
            diag = grid_point(i, i, k)
            col_circuit = tuple(sorted(grid_point(r, i, k) for r in (1, 2, 3)))
            pairs.append((diag, col_circuit, f"q{3 + i}"))
            for j in (1, 2, 3):
                if j == i:
                    continue
                row_circuit = tuple(
                    sorted((grid_point(i, j, k), diag, grid_point(i, 4, k)))
                )
                pairs.append((grid_point(i, j, k), row_circuit, f"q{i}"))
        pairs.sort()
        return GraphData(
            m,
            anchor,
            tuple(p for p, _, _ in pairs),
            tuple(c for _, c, _ in pairs),
            tuple(ExtraVector.symbolic(q) for _, _, q in pairs),
        )
    if key == "paving4_9":
        m = builtin_matroid("paving4_9")
        return GraphData(
            m,
            frozenset({6, 7, 8, 9}),
            (1, 2, 3, 4, 5),
            ((1, 2, 3, 4), (2, 5, 6, 7), (3, 5, 8, 9), (4, 5, 6, 8), (1, 5, 7, 9)),
            tuple(ExtraVector.symbolic(f"q{i}") for i in range(1, 6)),
        )
    raise ValueError(f"no worked-example graph data for {name!r}")


def builtin_graph_data_names() -> tuple[str, ...]:
    return ("qs", "pascal", "fig2c", "fig2r", "concurrent3", "grid3x4", "paving4_9")
