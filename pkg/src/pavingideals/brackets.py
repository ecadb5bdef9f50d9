"""Bracket polynomials over formal column labels.

A bracket ⟨a b c ...⟩ stands for the determinant of the matrix whose columns
are the named vectors.  Labels are either integer point ids or strings for
formal columns (auxiliary vectors, symbolic intersection points).  Working
at the label level keeps meet/join output readable — the printer emits
⟨i j k⟩ notation — while ``expand`` turns everything into an honest
coordinate polynomial and ``evaluate`` plugs in exact vectors directly.

The labeled wedge here is the algebra of formal points: joins concatenate
labels with the sorting sign, meets follow the shuffle sum with formal
brackets as coefficients.  No rewriting (straightening) is performed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Mapping, Sequence, Union

from .extensors import DimensionMismatch, perm_sign_of_merge
from .linalg import ScalarMatrix
from .poly import Polynomial
from .polymatrix import PolyMatrix, determinant
from .scalars import Scalar, format_rational
from .variables import entry_var, extra_var

Label = Union[int, str]

BracketKey = tuple[Label, ...]
BracketMonomial = tuple[BracketKey, ...]


def _label_key(label: Label):
    return (0, label) if isinstance(label, int) else (1, label)


def _bracket_sort_key(key: BracketKey):
    return tuple(_label_key(l) for l in key)


def _mono_sort_key(mono: BracketMonomial):
    return tuple(_bracket_sort_key(k) for k in mono)


def normalize_labels(labels: Sequence[Label]) -> tuple[int, tuple[Label, ...]]:
    """(sign, sorted labels); sign 0 when a label repeats."""
    if len(set(labels)) != len(labels):
        return 0, ()
    sign = perm_sign_of_merge(tuple(_label_key(l) for l in labels))
    return sign, tuple(sorted(labels, key=_label_key))


class BracketPolynomial:
    """Polynomial whose variables are formal brackets of column labels."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[BracketMonomial, Scalar] | None = None):
        self.terms: dict[BracketMonomial, Scalar] = {
            m: c for m, c in (terms or {}).items() if c != 0
        }

    @staticmethod
    def zero() -> "BracketPolynomial":
        return BracketPolynomial()

    @staticmethod
    def constant(value: Scalar) -> "BracketPolynomial":
        return BracketPolynomial({(): value})

    @staticmethod
    def bracket(labels: Sequence[Label]) -> "BracketPolynomial":
        sign, key = normalize_labels(labels)
        if sign == 0:
            return BracketPolynomial()
        return BracketPolynomial({(key,): sign})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError("not a constant bracket polynomial")
        return self.terms.get((), 0)

    @staticmethod
    def one() -> "BracketPolynomial":
        return BracketPolynomial({(): 1})

    def __add__(self, other: "BracketPolynomial") -> "BracketPolynomial":
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            new = terms.get(mono, 0) + coeff
            if new == 0:
                terms.pop(mono, None)
            else:
                terms[mono] = new
        return BracketPolynomial(terms)

    def __neg__(self) -> "BracketPolynomial":
        return BracketPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "BracketPolynomial") -> "BracketPolynomial":
        return self + (-other)

    def __mul__(self, other: "BracketPolynomial") -> "BracketPolynomial":
        terms: dict[BracketMonomial, Scalar] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = tuple(sorted(ma + mb, key=_bracket_sort_key))
                new = terms.get(mono, 0) + ca * cb
                if new == 0:
                    terms.pop(mono, None)
                else:
                    terms[mono] = new
        return BracketPolynomial(terms)

    def scale(self, value: Scalar) -> "BracketPolynomial":
        if value == 0:
            return BracketPolynomial()
        return BracketPolynomial({m: c * value for m, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, BracketPolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def normalized_sign(self) -> tuple["BracketPolynomial", int]:
        """(p, +1) or (-p, -1) with the leading coefficient positive."""
        if not self.terms:
            return self, 1
        lead = self.terms[min(self.terms, key=_mono_sort_key)]
        if lead < 0:
            return -self, -1
        return self, 1

    # -- output -----------------------------------------------------------

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        def mono_text(mono: BracketMonomial) -> str:
            return "".join("⟨" + " ".join(str(l) for l in key) + "⟩" for key in mono)

        chunks = []
        for idx, (mono, coeff) in enumerate(sorted(self.terms.items(), key=lambda kv: _mono_sort_key(kv[0]))):
            body = mono_text(mono) if mono else ""
            mag = abs(coeff)
            if mag != 1 or not mono:
                body = format_rational(mag) + body
            sign = "-" if coeff < 0 else "+"
            if idx == 0:
                chunks.append(body if sign == "+" else f"-{body}")
            else:
                chunks.append(f" {sign} {body}")
        return "".join(chunks)

    def __repr__(self):
        return f"BracketPolynomial({self.pretty()})"

    def to_text(self) -> str:
        """ASCII file form: coefficient then <a b c> factors per term."""
        if not self.terms:
            return "0"
        chunks = []
        ordered = sorted(self.terms.items(), key=lambda kv: _mono_sort_key(kv[0]))
        for idx, (mono, coeff) in enumerate(ordered):
            mag = format_rational(-coeff if coeff < 0 else coeff)
            body = mag + "".join(
                "<" + " ".join(str(l) for l in key) + ">" for key in mono
            )
            sign = "-" if coeff < 0 else "+"
            if idx == 0:
                chunks.append(body if sign == "+" else f"-{body}")
            else:
                chunks.append(f" {sign} {body}")
        return "".join(chunks)

    @staticmethod
    def from_text(text: str) -> "BracketPolynomial":
        import re as _re

        text = text.strip()
        if text == "0":
            return BracketPolynomial()
        from .poly import _split_terms
        from .scalars import parse_rational

        terms: dict[BracketMonomial, Scalar] = {}
        for sign, body in _split_terms(text):
            m = _re.match(r"^([0-9]+(?:/[0-9]+)?)?\s*((?:<[^>]*>)*)$", body)
            if not m:
                raise ValueError(f"bad bracket term: {body!r}")
            coeff = sign * (parse_rational(m.group(1)) if m.group(1) else 1)
            keys = []
            for group in _re.findall(r"<([^>]*)>", m.group(2)):
                labels = tuple(
                    int(tok) if tok.isdigit() else tok for tok in group.split()
                )
                key_sign, norm = normalize_labels(labels)
                coeff = coeff * key_sign
                keys.append(norm)
            if coeff == 0:
                continue
            mono = tuple(sorted(keys, key=_bracket_sort_key))
            terms[mono] = terms.get(mono, 0) + coeff
        return BracketPolynomial(terms)

    def labels(self) -> set[Label]:
        out: set[Label] = set()
        for mono in self.terms:
            for key in mono:
                out.update(key)
        return out

    def rename_labels(self, mapping: Mapping[Label, Label]) -> "BracketPolynomial":
        terms: dict[BracketMonomial, Scalar] = {}
        for mono, coeff in self.terms.items():
            sign = 1
            keys = []
            for key in mono:
                s, norm = normalize_labels(tuple(mapping.get(l, l) for l in key))
                sign *= s
                keys.append(norm)
            if sign == 0:
                continue
            new_mono = tuple(sorted(keys, key=_bracket_sort_key))
            new = terms.get(new_mono, 0) + sign * coeff
            if new == 0:
                terms.pop(new_mono, None)
            else:
                terms[new_mono] = new
        return BracketPolynomial(terms)

    # -- expansion and evaluation ---------------------------------------------

    def expand(self, dim: int, column: Callable[[Label], Sequence[Polynomial]] | None = None) -> Polynomial:
        """Replace each bracket by its determinant polynomial.

        The default column map sends integer labels to matrix-entry columns
        and string labels to extra-vector columns.
        """
        column = column or (lambda label: symbolic_column(label, dim))
        cache: dict[BracketKey, Polynomial] = {}

        def bracket_poly(key: BracketKey) -> Polynomial:
            got = cache.get(key)
            if got is None:
                if len(key) != dim:
                    raise DimensionMismatch(
                        f"bracket {key} has {len(key)} columns in dimension {dim}"
                    )
                cols = [column(label) for label in key]
                rows = [[cols[j][i] for j in range(dim)] for i in range(dim)]
                got = determinant(PolyMatrix.from_rows(rows))
                cache[key] = got
            return got

        total = Polynomial.zero()
        for mono, coeff in sorted(self.terms.items(), key=lambda kv: _mono_sort_key(kv[0])):
            term = Polynomial.constant(coeff)
            for key in mono:
                term = term * bracket_poly(key)
            total = total + term
        return total

    def evaluate(self, vectors: Mapping[Label, Sequence[Scalar]]) -> Scalar:
        """Exact value with every label bound to a concrete vector."""
        cache: dict[BracketKey, Scalar] = {}

        def bracket_value(key: BracketKey) -> Scalar:
            got = cache.get(key)
            if got is None:
                cols = [vectors[label] for label in key]
                rows = [[cols[j][i] for j in range(len(key))] for i in range(len(key))]
                got = ScalarMatrix.from_rows(rows).determinant()
                cache[key] = got
            return got

        total: Scalar = 0
        for mono, coeff in self.terms.items():
            val: Scalar = coeff
            for key in mono:
                val = val * bracket_value(key)
            total = total + val
        return total


def symbolic_column(label: Label, dim: int) -> list[Polynomial]:
    if isinstance(label, int):
        return [Polynomial.variable(entry_var(r, label)) for r in range(1, dim + 1)]
    return [Polynomial.variable(extra_var(r, label)) for r in range(1, dim + 1)]


# -- labeled exterior algebra ---------------------------------------------------


@dataclass(frozen=True)
class LabeledExtensor:
    """Sum of wedges of formal points with bracket-polynomial coefficients."""

    dim: int
    grade: int
    parts: Mapping[tuple[Label, ...], BracketPolynomial]

    @staticmethod
    def points(labels: Sequence[Label], dim: int) -> "LabeledExtensor":
        sign, key = normalize_labels(labels)
        if sign == 0:
            return LabeledExtensor(dim, len(labels), {})
        return LabeledExtensor(dim, len(labels), {key: BracketPolynomial.constant(sign)})

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.parts.values())


def labeled_join(v: LabeledExtensor, w: LabeledExtensor) -> LabeledExtensor:
    if v.dim != w.dim:
        raise DimensionMismatch("join of labeled extensors in different dimensions")
    grade = v.grade + w.grade
    parts: dict[tuple[Label, ...], BracketPolynomial] = {}
    if grade > v.dim:
        return LabeledExtensor(v.dim, v.dim, {})
    for a, ca in v.parts.items():
        for b, cb in w.parts.items():
            sign, key = normalize_labels(a + b)
            if sign == 0:
                continue
            add = (ca * cb).scale(sign)
            parts[key] = parts.get(key, BracketPolynomial.zero()) + add
    return LabeledExtensor(v.dim, grade, {k: p for k, p in parts.items() if not p.is_zero()})


def labeled_meet(v: LabeledExtensor, w: LabeledExtensor) -> LabeledExtensor:
    """Shuffle sum with formal brackets as coefficients."""
    if v.dim != w.dim:
        raise DimensionMismatch("meet of labeled extensors in different dimensions")
    d = v.dim
    k, j = v.grade, w.grade
    if k + j < d:
        return LabeledExtensor(d, 0, {})
    head = d - j
    parts: dict[tuple[Label, ...], BracketPolynomial] = {}
    for a, ca in v.parts.items():
        for positions in combinations(range(k), head):
            a1 = tuple(a[i] for i in positions)
            rest_pos = tuple(i for i in range(k) if i not in positions)
            rest = tuple(a[i] for i in rest_pos)
            shuffle_sign = perm_sign_of_merge(positions + rest_pos)
            for b, cb in w.parts.items():
                bracket = BracketPolynomial.bracket(a1 + b)
                if bracket.is_zero():
                    continue
                add = (ca * cb * bracket).scale(shuffle_sign)
                parts[rest] = parts.get(rest, BracketPolynomial.zero()) + add
    return LabeledExtensor(
        v.dim, k + j - d, {key: p for key, p in parts.items() if not p.is_zero()}
    )


def to_bracket_polynomial(v: LabeledExtensor) -> BracketPolynomial:
    """Collapse a top-grade labeled extensor into a single bracket polynomial."""
    if v.grade != v.dim:
        raise DimensionMismatch(f"grade {v.grade} is not top grade in dimension {v.dim}")
    total = BracketPolynomial.zero()
    for key, coeff in v.parts.items():
        total = total + coeff * BracketPolynomial.bracket(key)
    return total


def meet_then_join(dim: int, meets: Sequence[tuple[Sequence[Label], Sequence[Label]]],
                   joins: Sequence[Sequence[Label]] = ()) -> BracketPolynomial:
    """Join of pairwise meets (and plain point wedges), collapsed at top grade."""
    factors = [labeled_meet(LabeledExtensor.points(a, dim), LabeledExtensor.points(b, dim))
               for a, b in meets]
    factors.extend(LabeledExtensor.points(labels, dim) for labels in joins)
    out = factors[0]
    for f in factors[1:]:
        out = labeled_join(out, f)
    return to_bracket_polynomial(out)
