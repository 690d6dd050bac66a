from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import sqdist.closed_forms as cf
from oracles import sympy_charpoly_coeffs
from sqdist.errors import BlockCountTooSmall, CofactorZero
from sqdist.graph import Shape, squared_distance_matrix
from sqdist.linalg import (
    Inertia,
    RatPoly,
    as_rational,
    cofactor_matrix,
    identity,
    inertia_congruence,
    inverse,
    rank,
)

S11, S111, S21 = Shape([1, 1]), Shape([1, 1, 1]), Shape([2, 1])

shapes = st.lists(st.integers(1, 4), min_size=1, max_size=4).map(Shape)
multi_block = st.lists(st.integers(1, 4), min_size=2, max_size=4).map(Shape).filter(
    lambda s: s.canonical() != S11
)


def test_scalar_invariants_s111():
    s = cf.scalar_invariants(S111)
    assert s.alpha == 64 and s.alpha_hat == (16, 16, 16)
    assert s.beta == 48 and s.beta_hat == (8, 8, 8)
    assert s.a2b == -32 and s.lambda_ == F(-3, 2)


def test_scalar_invariants_s21():
    s = cf.scalar_invariants(S21)
    assert (s.alpha, s.alpha_hat, s.beta, s.a2b, s.lambda_) == (28, (4, 7), 15, -2, F(-15, 2))


def test_scalar_invariants_path_has_no_lambda():
    s = cf.scalar_invariants(S11)
    assert (s.alpha, s.beta, s.a2b, s.lambda_) == (16, 8, 0, None)


def test_scalar_invariants_single_block():
    s = cf.scalar_invariants(Shape([3]))
    assert s.alpha == 10 and s.alpha_hat == (1,) and s.beta == 3 and s.beta_hat == (0,)


@given(shapes)
def test_scalar_regrouping_identities(shape):
    s = cf.scalar_invariants(shape)
    parts = shape.parts
    for i, ni in enumerate(parts):
        assert s.alpha == (3 * ni + 1) * s.alpha_hat[i]
        assert s.beta == ni * s.alpha_hat[i] + (3 * ni + 1) * s.beta_hat[i]
        for j, nj in enumerate(parts):
            if j != i:
                assert s.alpha_hat[i] == (3 * nj + 1) * s.alpha_hat2[i][j]


def test_determinants():
    assert cf.det_delta_closed(S11) == 8
    assert cf.det_delta_closed(S111) == -48
    assert cf.det_delta22_closed(S21) == 32


def test_cofactor_sums():
    assert cf.cof_delta_closed(S11) == 0
    assert cf.cof_delta_closed(S111) == 32
    assert cf.cof_delta22_closed(S21) == 15


def test_charpoly_examples():
    assert cf.charpoly_delta_closed(S11) == RatPoly([-8, -18, 0, 1])
    assert cf.charpoly_delta_closed(S111) == RatPoly([-48, -152, -51, 0, 1])
    p21 = cf.charpoly_delta_closed(S21)
    assert p21.degree == 4 and p21(0) == -15


def test_quotient_matrices():
    assert (cf.quotient_matrix_delta(S11) == as_rational(squared_distance_matrix(S11))).all()
    assert cf.quotient_matrix_delta(S21).tolist() == [[0, 2, 1], [1, 1, 4], [1, 8, 0]]
    assert cf.quotient_matrix_delta22(S21).tolist() == [[1, 4], [8, 0]]


def test_quotient_charpolys():
    x = RatPoly.x()
    x4 = RatPoly.linear(4)
    assert cf.charpoly_quotient_delta(S11) == x4 * RatPoly([-2, -4, 1])
    assert cf.charpoly_quotient_delta(S111) == x * x4 ** 3 - 3 * (4 * x + 1) * x4 ** 2
    assert list(cf.charpoly_quotient_delta(S21).coeffs) == sympy_charpoly_coeffs(
        cf.quotient_matrix_delta(S21)
    )


@settings(max_examples=40, deadline=None)
@given(shapes)
def test_quotient_charpoly_divides(shape):
    full, q = cf.charpoly_delta_closed(shape), cf.charpoly_quotient_delta(shape)
    quot, rem = divmod(full, q)
    assert rem.is_zero() and quot == RatPoly.linear(1) ** (sum(shape.parts) - shape.b)


def test_minus_one_eigenbasis():
    assert cf.minus_one_eigenbasis(S11) == []
    (v,) = cf.minus_one_eigenbasis(S21)
    assert v.tolist() == [0, 1, -1, 0]
    assert len(cf.minus_one_eigenbasis(Shape([3, 2]))) == 3


@settings(max_examples=40, deadline=None)
@given(shapes)
def test_minus_one_eigenvectors(shape):
    delta = squared_distance_matrix(shape)
    for v in cf.minus_one_eigenbasis(shape):
        assert (delta @ v == -v).all()


def test_inertia_closed():
    assert cf.inertia_delta_closed(S111) == Inertia(1, 0, 3)
    assert cf.inertia_delta22_closed(S21) == Inertia(1, 0, 2)
    s532 = Shape([5, 3, 2])
    assert cf.inertia_delta_closed(s532) == (1, 0, 10)
    assert inertia_congruence(squared_distance_matrix(s532)) == (1, 0, 10)


def test_eta_and_lambda():
    assert list(cf.eta(S111)) == [F(5, 2), F(-1, 2), F(-1, 2), F(-1, 2)]
    assert cf.lambda_(S111) == F(-3, 2)
    assert list(cf.eta(S21)) == [F(17, 2), -2, -2, F(-7, 2)]
    assert cf.lambda_(S21) == F(-15, 2)


@pytest.mark.parametrize(
    "fn", [cf.eta, cf.lambda_, cf.laplacian_like, cf.delta_inverse_closed, cf.cofactor_constant]
)
def test_preconditions(fn):
    with pytest.raises(CofactorZero):
        fn(S11)
    with pytest.raises(CofactorZero):
        fn(Shape([1, 1]))
    with pytest.raises(BlockCountTooSmall):
        fn(Shape([3]))


def test_laplacian_like_s111():
    lap = cf.laplacian_like(S111)
    assert lap.l_hat.tolist() == [[48, -16, -16, -16], [-16, 0, 8, 8], [-16, 8, 0, 8], [-16, 8, 8, 0]]
    assert (lap.l == lap.l_hat / -32).all()
    assert all(sum(row) == 0 for row in lap.l)


def test_delta_inverse_s111():
    expected = [
        [F(-8, 3), F(1, 3), F(1, 3), F(1, 3)],
        [F(1, 3), F(-1, 6), F(1, 12), F(1, 12)],
        [F(1, 3), F(1, 12), F(-1, 6), F(1, 12)],
        [F(1, 3), F(1, 12), F(1, 12), F(-1, 6)],
    ]
    assert cf.delta_inverse_closed(S111).tolist() == expected


def test_delta_inverse_s21():
    delta = as_rational(squared_distance_matrix(S21))
    assert (delta @ cf.delta_inverse_closed(S21) == identity(4)).all()


def test_cofactor_constant_examples():
    assert cf.cofactor_constant(S111) == F(-1, 32)
    assert F(1024) * F(-1, 32) ** 3 == F(-1, 32)
    assert cf.cofactor_constant(S21) == F(-1, 2)
    assert (cofactor_matrix(cf.laplacian_like(S21).l) == F(-1, 2)).all()


@settings(max_examples=30, deadline=None)
@given(multi_block)
def test_inverse_decomposition_properties(shape):
    n = shape.n
    delta = as_rational(squared_distance_matrix(shape))
    e = cf.eta(shape).entries
    one = np.array([F(1)] * n, dtype=object)
    lap = cf.laplacian_like(shape)
    assert (delta @ e == cf.lambda_(shape) * one).all()
    assert sum(e) == 1
    assert (lap.l_hat @ one == 0).all() and (lap.l_hat == lap.l_hat.T).all()
    assert (lap.l @ delta + identity(n) == np.outer(e, one)).all()
    assert (cf.delta_inverse_closed(shape) == inverse(delta)).all()
    assert rank(lap.l) == n - 1
    assert (cofactor_matrix(lap.l) == cf.cofactor_constant(shape)).all()


def test_laplacian_like_is_not_psd_for_s111():
    # trace is 48 / -32 < 0, so a negative eigenvalue must exist
    lap = cf.laplacian_like(S111).l
    assert sum(lap[i, i] for i in range(4)) == F(-3, 2)
    assert inertia_congruence(lap).n_minus >= 1
