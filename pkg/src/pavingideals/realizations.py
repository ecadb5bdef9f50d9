"""Exact rational realizations of paving matroids.

A realization assigns an exact vector of length n to every point.  Two
membership tests matter: the circuit variety (every hyperplane's vectors
span at most n-1 dimensions) and the realization space itself (dependencies
are exactly the matroid's: hyperplane subsets degenerate, everything else
in general position).  Both are decided by exact rank computations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

from .linalg import matrix_rank
from .matroids import PavingMatroid, builtin_matroid
from .scalars import Scalar, as_scalar, format_rational
from .variables import Variable, entry_var


class IndexMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Realization:
    """Exact vectors indexed by the matroid's points."""

    matroid: PavingMatroid
    vectors: Mapping[int, tuple[Scalar, ...]]
    seed: int | None = None

    def __post_init__(self):
        if set(self.vectors) != set(self.matroid.points):
            raise IndexMismatch("vectors must be indexed by exactly the matroid's points")

    @property
    def dim(self) -> int:
        first = next(iter(self.vectors.values()))
        return len(first)

    def vector(self, point: int) -> tuple[Scalar, ...]:
        return self.vectors[point]

    def assignment(self) -> dict[Variable, Scalar]:
        """Matrix-entry variable values of this realization."""
        out = {}
        for p, vec in self.vectors.items():
            for r, value in enumerate(vec, start=1):
                out[entry_var(r, p)] = value
        return out

    def rank_of_points(self, points: Sequence[int]) -> int:
        return matrix_rank([self.vectors[p] for p in points])

    # -- JSON ------------------------------------------------------------

    def to_json_dict(self) -> dict:
        name = self.matroid.name
        matroid_field: object
        if name:
            try:
                builtin_matroid(name)
                matroid_field = name
            except Exception:
                matroid_field = self.matroid.to_json_dict()
        else:
            matroid_field = self.matroid.to_json_dict()
        out = {
            "matroid": matroid_field,
            "points": {
                str(p): [format_rational(c) for c in vec]
                for p, vec in sorted(self.vectors.items())
            },
        }
        if self.seed is not None:
            out["seed"] = self.seed
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True)

    @staticmethod
    def from_json_dict(data: dict) -> "Realization":
        matroid_field = data["matroid"]
        if isinstance(matroid_field, str):
            matroid = builtin_matroid(matroid_field)
        else:
            matroid = PavingMatroid.from_json_dict(matroid_field)
        vectors = {
            int(p): tuple(as_scalar(c) for c in vec) for p, vec in data["points"].items()
        }
        return Realization(matroid, vectors, data.get("seed"))

    @staticmethod
    def from_json(text: str) -> "Realization":
        return Realization.from_json_dict(json.loads(text))


def _check_indexing(vectors: Mapping[int, Sequence[Scalar]], matroid: PavingMatroid):
    if set(vectors) != set(matroid.points):
        raise IndexMismatch("vectors are not indexed by the matroid's points")


def in_circuit_variety(vectors: Mapping[int, Sequence[Scalar]], matroid: PavingMatroid) -> bool:
    """True when every hyperplane's vectors have rank at most n-1."""
    _check_indexing(vectors, matroid)
    n = matroid.rank
    for h in matroid.hyperplanes:
        if matrix_rank([vectors[p] for p in sorted(h)]) > n - 1:
            return False
    return True


def in_realization_space(vectors: Mapping[int, Sequence[Scalar]], matroid: PavingMatroid) -> bool:
    """True when the vectors realize exactly the matroid's dependencies.

    Checks every (n-1)-subset is independent and every n-subset has rank
    n-1 or n according to whether it is a circuit; larger subsets follow.
    """
    _check_indexing(vectors, matroid)
    n = matroid.rank
    points = matroid.points
    for combo in combinations(points, n - 1):
        if matrix_rank([vectors[p] for p in combo]) != n - 1:
            return False
    circuits = set(matroid.circuits_n())
    for combo in combinations(points, n):
        expected = n - 1 if combo in circuits else n
        if matrix_rank([vectors[p] for p in combo]) != expected:
            return False
    return True
