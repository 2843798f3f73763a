from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from cosplit.errors import DimensionMismatch, SingularMatrix
from cosplit.exact import (
    DenseMatrix,
    format_rational,
    inverse,
    kernel_basis,
    parse_rational,
    rank,
    solve_linear,
)

F = Fraction


def M(rows):
    return DenseMatrix.from_rows(rows)


class TestSolve:
    def test_identity(self):
        assert solve_linear(M([[1, 0], [0, 1]]), [F(3, 2), -2]) == (F(3, 2), F(-2))

    def test_inconsistent(self):
        assert solve_linear(M([[1, 1], [2, 2]]), [1, 3]) is None

    def test_diagonal(self):
        assert solve_linear(M([[2, 0], [0, 4]]), [1, 1]) == (F(1, 2), F(1, 4))

    def test_free_variables_zero(self):
        # x + y = 2 with y free -> (2, 0)
        assert solve_linear(M([[1, 1]]), [2]) == (F(2), F(0))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            solve_linear(M([[1, 0], [0, 1]]), [1, 2, 3])


class TestKernel:
    def test_full_rank(self):
        assert kernel_basis(M([[1, 0], [0, 1]])) == []

    def test_one_relation(self):
        (v,) = kernel_basis(M([[1, 1]]))
        assert v == (F(-1), F(1))

    def test_zero_map(self):
        assert len(kernel_basis(DenseMatrix.zeros(2, 4))) == 4


class TestRank:
    @pytest.mark.parametrize(
        "A, r",
        [(DenseMatrix.identity(3), 3), (M([[1, 2], [2, 4]]), 1), (DenseMatrix.zeros(3, 2), 0)],
    )
    def test_examples(self, A, r):
        assert rank(A) == r


def test_inverse():
    A = M([[2, 1], [7, 4]])
    assert A @ inverse(A) == DenseMatrix.identity(2)
    with pytest.raises(SingularMatrix):
        inverse(M([[1, 2], [2, 4]]))


def test_rational_serialization():
    assert format_rational(F(3, 1)) == "3"
    assert format_rational(F(-6, 4)) == "-3/2"
    assert format_rational(F(0)) == "0"
    assert parse_rational("-3/2") == F(-3, 2)
    assert parse_rational("4/2").denominator == 1


def test_floats_rejected():
    with pytest.raises(TypeError):
        DenseMatrix(1, 1, [0.5])


rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)


@st.composite
def matrices(draw, max_dim=5):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    # Mix in zero entries so rank deficiency is common.
    entries = draw(st.lists(st.one_of(st.just(F(0)), rationals), min_size=r * c, max_size=r * c))
    return DenseMatrix(r, c, entries)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity(A):
    assert rank(A) + len(kernel_basis(A)) == A.cols
    for v in kernel_basis(A):
        assert not any(A @ v)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_matches_sympy(A):
    assert rank(A) == sympy.Matrix(A.to_rows()).rank()


@settings(max_examples=150, deadline=None)
@given(matrices(), st.data())
def test_solve_substitutes_exactly(A, data):
    x0 = data.draw(st.lists(rationals, min_size=A.cols, max_size=A.cols))
    b = A @ x0
    x = solve_linear(A, b)
    assert x is not None
    assert A @ x == b
    assert all(isinstance(v, Fraction) for v in x)


@settings(max_examples=100, deadline=None)
@given(matrices(max_dim=4), st.data())
def test_solve_agrees_with_sympy_on_consistency(A, data):
    b = data.draw(st.lists(rationals, min_size=A.rows, max_size=A.rows))
    ours = solve_linear(A, b)
    aug = sympy.Matrix([list(A.row(i)) + [b[i]] for i in range(A.rows)])
    consistent = aug.rank() == sympy.Matrix(A.to_rows()).rank()
    assert (ours is not None) == consistent
