from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bistrata.coeffring import (
    InterpolationError,
    ParamPoly,
    binomial,
    grid_eval_at,
    interpolate,
)

polys = st.lists(st.integers(-9, 9), min_size=0, max_size=5).map(ParamPoly)


def poly_d_minus(a):
    return ParamPoly((-a, 1))


def test_canonical_form_trims_trailing_zeros():
    assert ParamPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert ParamPoly([0, 0]).is_zero()
    assert ParamPoly().degree() == -1


def test_binomial_square():
    # (d-1)*(d-1) = d^2 - 2d + 1
    assert poly_d_minus(1) * poly_d_minus(1) == ParamPoly([1, -2, 1])


def test_additive_identity():
    a = ParamPoly([3, 0, 7])
    assert a + ParamPoly() == a


def test_product_evaluation():
    # 3(d-1)^2 * 1 at d=4 is 27
    assert (3 * poly_d_minus(1) ** 2 * ParamPoly.const(1))(4) == 27


def test_eval_corollary_value_by_hand():
    # 9(d-1)^4 - 42(d-1)^2 + 33(d-1) at d=3:
    # 9*16 - 42*4 + 33*2 = 144 - 168 + 66 = 42
    dm1 = poly_d_minus(1)
    poly = 9 * dm1 ** 4 - 42 * dm1 ** 2 + 33 * dm1
    assert poly(3) == 42


def test_eval_zero_and_shifted_square():
    assert ParamPoly()(17) == 0
    assert (poly_d_minus(2) ** 2)(5) == 9


def test_shifted_is_taylor_shift():
    poly = ParamPoly([1, -3, 2])
    shifted = poly.shifted(4)
    for d in range(-3, 4):
        assert shifted(d) == poly(d + 4)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a


@given(polys, st.integers(-5, 5))
def test_evaluation_is_a_ring_map(a, d0):
    b = ParamPoly([2, -1])
    assert (a * b)(d0) == a(d0) * b(d0)
    assert (a + b)(d0) == a(d0) + b(d0)


def test_json_round_trip():
    poly = ParamPoly([-66, 81, 12, -36, 9])
    assert ParamPoly.from_json(poly.to_json()) == poly
    assert poly.to_json() == ["-66", "81", "12", "-36", "9"]


def test_interpolate_round_trip_bivariate():
    # c[i][j] for p^i d^j with integer entries round-trips exactly
    grid = [[1, 0, 2], [0, -3, 0], [5, 0, 0]]
    samples = [(p, grid_eval_at(grid, p)) for p in range(0, 5)]
    recovered = interpolate(samples)
    assert recovered == grid
    for p in range(-4, 8):
        assert grid_eval_at(recovered, p) == grid_eval_at(grid, p)


@given(st.lists(st.lists(st.integers(-6, 6), min_size=1, max_size=3),
                min_size=1, max_size=4))
def test_interpolate_round_trip_property(rows):
    samples = [(p, grid_eval_at(rows, p)) for p in range(len(rows) + 1)]
    recovered = interpolate(samples)
    for p in range(-2, len(rows) + 3):
        assert grid_eval_at(recovered, p) == grid_eval_at(rows, p)


def test_interpolate_detects_non_integral_result():
    # values of p(p-1)/2 are integers but its monomial coefficients are not
    samples = [(p, ParamPoly.const(p * (p - 1) // 2)) for p in range(3)]
    with pytest.raises(InterpolationError):
        interpolate(samples)


def test_interpolate_rejects_repeated_points():
    samples = [(1, ParamPoly.const(1)), (1, ParamPoly.const(2))]
    with pytest.raises(InterpolationError):
        interpolate(samples)


def test_constant_family_gives_degree_zero_grid():
    samples = [(p, ParamPoly([7, 1])) for p in range(1, 5)]
    assert interpolate(samples) == [[7, 1]]


@pytest.mark.parametrize("n,k,value", [(4, 2, 6), (6, 2, 15), (10, 2, 45),
                                       (5, 0, 1), (3, 5, 0), (2, -1, 0)])
def test_binomial(n, k, value):
    assert binomial(n, k) == value
