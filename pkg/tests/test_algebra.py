"""Ring, determinant and exact linear algebra checks."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pavingideals.linalg import (
    NonSquare,
    ScalarMatrix,
    gaussian_pivot_product,
    kernel_basis,
    matrix_rank,
)
from pavingideals.poly import Polynomial, UnboundVariable
from pavingideals.polymatrix import MinorEngine, PolyMatrix, determinant
from pavingideals.scalars import format_rational, parse_rational
from pavingideals.variables import entry_var, extra_var


def x(r, c):
    return Polynomial.variable(entry_var(r, c))


def random_poly(rng: random.Random, n_vars: int = 4, n_terms: int = 5) -> Polynomial:
    p = Polynomial.zero()
    for _ in range(rng.randint(0, n_terms)):
        term = Polynomial.constant(rng.randint(-5, 5))
        for _ in range(rng.randint(0, 3)):
            term = term * x(rng.randint(1, 2), rng.randint(1, n_vars))
        p = p + term
    return p


# -- scalars ------------------------------------------------------------


def test_rational_round_trip():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(8, 4)) == "2"
    assert parse_rational("7") == 7


# -- polynomial ring ----------------------------------------------------


def test_additive_inverse():
    assert (x(1, 1) + (-x(1, 1))).is_zero()


def test_difference_of_squares():
    lhs = (x(1, 1) + x(1, 2)) * (x(1, 1) - x(1, 2))
    rhs = x(1, 1) * x(1, 1) - x(1, 2) * x(1, 2)
    assert lhs == rhs


def test_multiplicative_identity():
    rng = random.Random(7)
    for _ in range(20):
        p = random_poly(rng)
        assert Polynomial.one() * p == p


def test_cancellation_gives_empty_association():
    rng = random.Random(11)
    for _ in range(30):
        p = random_poly(rng)
        assert (p - p).is_zero()
        assert len((p - p).terms) == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(), st.integers(), st.integers())
def test_ring_distributivity(sa, sb, sc):
    rng_a, rng_b, rng_c = random.Random(sa), random.Random(sb), random.Random(sc)
    a, b, c = random_poly(rng_a), random_poly(rng_b), random_poly(rng_c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)


def test_evaluate_is_ring_homomorphism():
    rng = random.Random(3)
    for _ in range(15):
        a, b = random_poly(rng), random_poly(rng)
        assignment = {
            v: Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            for v in (a * b + a + b).support()
        }
        assert (a * b).evaluate(assignment) == a.evaluate(assignment) * b.evaluate(assignment)
        assert (a + b).evaluate(assignment) == a.evaluate(assignment) + b.evaluate(assignment)


def test_evaluate_missing_variable():
    p = x(1, 1) * x(2, 2)
    with pytest.raises(UnboundVariable) as exc:
        p.evaluate({entry_var(1, 1): 3})
    assert entry_var(2, 2) in exc.value.variables


def test_evaluate_partial_then_full():
    p = x(1, 1) * x(2, 2) + 3 * x(1, 1)
    q = p.evaluate_partial({entry_var(1, 1): 2})
    assert q == 2 * x(2, 2) + 6
    assert q.evaluate({entry_var(2, 2): Fraction(1, 2)}) == 7


def test_text_round_trip():
    p = 2 * x(1, 3) * x(1, 3) * x(2, 1) - Polynomial.constant(Fraction(1, 3)) * x(1, 4)
    p = p + Polynomial.variable(extra_var(2, "q1"))
    text = p.to_text()
    assert Polynomial.from_text(text) == p
    assert Polynomial.from_text("0").is_zero()


def test_text_form_is_sorted_and_stable():
    p = x(2, 2) + x(1, 1) + x(1, 2)
    assert p.to_text() == "1 * x[1,1] + 1 * x[1,2] + 1 * x[2,2]"


# -- scalar linear algebra ------------------------------------------------


def test_zero_matrix_rank_and_kernel():
    m = ScalarMatrix.from_rows([[0] * 4 for _ in range(3)])
    assert m.rank() == 0
    assert len(m.kernel_basis()) == 4


def test_identity_rank_and_kernel():
    m = ScalarMatrix.from_rows([[1 if i == j else 0 for j in range(3)] for i in range(3)])
    assert m.rank() == 3
    assert m.kernel_basis() == []


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_rank_nullity(seed):
    rng = random.Random(seed)
    n_rows = rng.randint(1, 5)
    n_cols = rng.randint(1, 5)
    rows = [[rng.randint(-3, 3) for _ in range(n_cols)] for _ in range(n_rows)]
    m = ScalarMatrix.from_rows(rows)
    assert m.rank() + len(m.kernel_basis()) == n_cols
    for vec in m.kernel_basis():
        for row in rows:
            assert sum(a * b for a, b in zip(row, vec)) == 0


def test_bareiss_matches_gaussian_pivots():
    rng = random.Random(123)
    for _ in range(40):
        n = rng.randint(1, 5)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        det = ScalarMatrix.from_rows(rows).determinant()
        assert det == gaussian_pivot_product(rows)


def test_fraction_matrix_determinant():
    rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 5), Fraction(2, 7)]]
    det = ScalarMatrix.from_rows(rows).determinant()
    assert det == Fraction(1, 2) * Fraction(2, 7) - Fraction(1, 3) * Fraction(1, 5)


# -- symbolic determinants -------------------------------------------------


def generic_matrix(n, row_offset=0, col_offset=0):
    return PolyMatrix.from_rows(
        [[x(i + 1 + row_offset, j + 1 + col_offset) for j in range(n)] for i in range(n)]
    )


def test_two_by_two_cofactor():
    m = generic_matrix(2)
    assert determinant(m) == x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1)


def test_identity_pattern_determinant():
    one, zero = Polynomial.one(), Polynomial.zero()
    m = PolyMatrix.from_rows([[one if i == j else zero for j in range(3)] for i in range(3)])
    assert determinant(m) == Polynomial.one()


def test_non_square_rejected():
    m = PolyMatrix.from_rows([[x(1, 1), x(1, 2)]])
    with pytest.raises(NonSquare):
        determinant(m)


def test_random_scalar_determinant_vs_elimination_oracle():
    rng = random.Random(99)
    for _ in range(25):
        rows = [[Polynomial.constant(rng.randint(-5, 5)) for _ in range(4)] for _ in range(4)]
        m = PolyMatrix.from_rows(rows)
        expected = gaussian_pivot_product(
            [[p.constant_value() for p in row] for row in rows]
        )
        assert determinant(m) == Polynomial.constant(expected)


def test_row_swap_negates_determinant():
    rng = random.Random(5)
    for _ in range(10):
        n = rng.randint(2, 4)
        rows = [[random_poly(rng, n_vars=3, n_terms=2) for _ in range(n)] for _ in range(n)]
        i, j = rng.sample(range(n), 2)
        swapped = list(rows)
        swapped[i], swapped[j] = rows[j], rows[i]
        assert determinant(PolyMatrix.from_rows(swapped)) == -determinant(
            PolyMatrix.from_rows(rows)
        )


def test_determinant_commutes_with_evaluation():
    rng = random.Random(17)
    for _ in range(10):
        n = rng.randint(2, 3)
        m = generic_matrix(n)
        det = determinant(m)
        assignment = {
            entry_var(i + 1, j + 1): Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            for i in range(n)
            for j in range(n)
        }
        evaluated = m.evaluate(assignment)
        assert det.evaluate(assignment) == evaluated.determinant()


def test_minor_engine_shares_cache():
    m = generic_matrix(4)
    engine = MinorEngine(m)
    d1 = engine.minor((0, 1, 2), (0, 1, 2))
    d2 = engine.minor((0, 1, 2), (0, 1, 3))
    assert d1 != d2
    assert engine.minor((0, 1), (0, 1)) in engine._cache.values()
