from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polysum.errors import DimensionMismatch, NoSolution, Underdetermined
from polysum.linalg import (
    canonical_line,
    dot,
    format_rational,
    integer_direction,
    nullspace,
    parse_rational,
    rank,
    solve_linear,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def test_rank_examples():
    assert rank([(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 3
    assert rank([(1, 0), (2, 0)]) == 1
    assert rank([(1, 1), (1, -1), (1, 0)]) == 2
    assert rank([]) == 0
    assert rank([(0, 0), (0, 0)]) == 0


def test_rank_with_fractions():
    assert rank([(Fraction(1, 2), Fraction(1, 3)), (3, 2)]) == 1


def test_solve_examples():
    assert solve_linear([(1, 0), (0, 1)], (3, 5)) == (3, 5)
    assert solve_linear([(1, 1), (1, -1)], (2, 0)) == (1, 1)
    with pytest.raises(NoSolution):
        solve_linear([(1, 0), (1, 0)], (1, 2))
    with pytest.raises(Underdetermined):
        solve_linear([(1, 1), (2, 2)], (1, 2))


def test_solve_overdetermined_consistent():
    assert solve_linear([(1, 0), (0, 1), (1, 1)], (2, 3, 5)) == (2, 3)


def test_dot_examples():
    assert dot((1, 2), (3, 4)) == 11
    assert dot((Fraction(7, 3), -5), (0, 0)) == 0
    assert dot((Fraction(1, 2), Fraction(1, 3)), (2, 3)) == 2
    with pytest.raises(DimensionMismatch):
        dot((1, 2), (1, 2, 3))


@pytest.mark.parametrize(
    "text, value",
    [("3", 3), ("-4", -4), ("0.25", Fraction(1, 4)), ("-1.5", Fraction(-3, 2)),
     ("2/6", Fraction(1, 3)), ("-3/4", Fraction(-3, 4)), ("1e-2", Fraction(1, 100))],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["", "abc", "1/0", "1//2", "nan", "inf"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_format_rational():
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-3, 6)) == "-1/2"


def test_integer_direction_keeps_orientation():
    assert integer_direction((Fraction(-1, 2), Fraction(1, 3))) == (-3, 2)
    assert integer_direction((0, -4)) == (0, -1)
    assert canonical_line((0, -4)) == (0, 1)


def test_nullspace():
    assert nullspace([(1, 1, 0)], 3) == [(1, -1, 0), (0, 0, 1)]
    assert nullspace([(1, 0), (0, 1)], 2) == []


@given(rationals, rationals, rationals)
def test_addition_associative(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(rationals.filter(lambda x: x != 0))
def test_multiplicative_inverse(a):
    assert a * (1 / a) == 1


small_rows = st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=1, max_size=5)


@given(small_rows, st.randoms(use_true_random=False))
def test_rank_permutation_invariant(rows, rnd):
    shuffled = rows[:]
    rnd.shuffle(shuffled)
    assert rank(rows) == rank(shuffled)


@given(small_rows, st.lists(rationals.filter(lambda x: x != 0), min_size=5, max_size=5))
def test_rank_scaling_invariant(rows, factors):
    scaled = [[f * x for x in r] for r, f in zip(rows, factors)]
    assert rank(rows) == rank(scaled)


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=3),
       st.lists(st.integers(-9, 9), min_size=3, max_size=3))
def test_solve_resubstitution(m, rhs):
    try:
        x = solve_linear(m, rhs)
    except (NoSolution, Underdetermined):
        assert rank(m) < 3
        return
    assert [dot(r, x) for r in m] == list(rhs)


@given(small_rows)
def test_nullspace_is_orthogonal(rows):
    basis = nullspace(rows, 3)
    assert len(basis) == 3 - rank(rows)
    assert all(dot(r, b) == 0 for r in rows for b in basis)
