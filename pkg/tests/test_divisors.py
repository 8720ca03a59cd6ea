import pytest

from bistrata.coeffring import ParamPoly, binomial
from bistrata.cohring import CohClass, VarSpec, product_of
from bistrata.divisors import (
    diagonal_class,
    exceptional_class,
    incidence_class,
    kill_tangent_cone_class,
    monomial_kill_class,
    omp_conditions_class,
)

XL = VarSpec.projective(("X", "L"))
XYL = VarSpec.projective(("X", "Y", "L"))
LINES = VarSpec.projective(("X", "L", "L1", "L2"))


def test_incidence_class():
    assert incidence_class(XYL, "X", "L") == CohClass.divisor(XYL, 0, {"X": 1, "L": 1})
    assert incidence_class(XYL, "Y", "L") == CohClass.divisor(XYL, 0, {"Y": 1, "L": 1})
    with pytest.raises(KeyError):
        incidence_class(XYL, "X", "M")


def test_diagonal_class_of_planes():
    assert diagonal_class(XYL, "X", "Y", 2) == CohClass(XYL, 2, {
        (2, 0, 0): 1, (1, 1, 0): 1, (0, 2, 0): 1})
    # coincidence of two marked lines in the dual plane
    got = diagonal_class(LINES, "L", "L1", 2)
    assert got == CohClass(LINES, 2, {
        (0, 2, 0, 0): 1, (0, 1, 1, 0): 1, (0, 0, 2, 0): 1})
    assert diagonal_class(XYL, "X", "Y", 1) == CohClass.divisor(XYL, 0, {"X": 1, "Y": 1})


def test_diagonal_class_is_symmetric():
    for n in (1, 2, 3, 4):
        assert diagonal_class(XYL, "X", "Y", n) == diagonal_class(XYL, "Y", "X", n)


def test_diagonal_high_dimension_truncates():
    # entries with any exponent >= 3 drop out
    got = diagonal_class(XYL, "X", "Y", 4)
    assert got == CohClass(XYL, 4, {(2, 2, 0): 1})


def test_exceptional_class():
    assert exceptional_class(XYL) == CohClass.divisor(XYL, 0, {"X": 1, "Y": 1, "L": -1})


def test_exceptional_pushforward():
    e = exceptional_class(XYL)
    lhs = e * incidence_class(XYL, "X", "L") * incidence_class(XYL, "Y", "L")
    rhs = incidence_class(XYL, "X", "L") * diagonal_class(XYL, "X", "Y", 2)
    assert lhs == rhs


def test_monomial_kill_transverse_cone():
    # erasing the transverse monomial of exponent p: F + (d-p)X - pL
    p = 3
    got = monomial_kill_class(XL, 0, p)
    assert got == CohClass.divisor(XL, 1, {"X": ParamPoly((-p, 1)), "L": -p})


def test_monomial_kill_rectify_branch():
    # raising the contact order with the traced line: F + (d-2k)X + kL
    k = 4
    got = monomial_kill_class(XL, k, 0)
    assert got == CohClass.divisor(XL, 1, {"X": ParamPoly((-2 * k, 1)), "L": k})


@pytest.mark.parametrize("p", range(2, 11))
def test_monomial_kill_matches_cusp_product(p):
    # the chain of kills along the degree-p level reproduces the published
    # cusp factors (F + (d+i-2p)X + (p-2i)L); this pins the orientation of
    # the (along, transverse) arguments
    got = [monomial_kill_class(XL, p - i, i) for i in range(p)]
    want = [CohClass.divisor(XL, 1, {"X": ParamPoly((i - 2 * p, 1)), "L": p - 2 * i})
            for i in range(p)]
    assert got == want


def test_monomial_kill_rejects_negative_exponents():
    with pytest.raises(ValueError):
        monomial_kill_class(XL, -1, 0)


def test_kill_tangent_cone_examples():
    got = kill_tangent_cone_class(LINES, 2, [("L1", 1), ("L2", 1)])
    assert got == CohClass.divisor(
        LINES, 1, {"X": ParamPoly((-2, 1)), "L1": -1, "L2": -1})
    got = kill_tangent_cone_class(LINES, 3, [("L1", 3)])
    assert got == CohClass.divisor(LINES, 1, {"X": ParamPoly((-3, 1)), "L1": -3})
    got = kill_tangent_cone_class(LINES, 3, [("L1", 2), ("L2", 1)])
    assert got == CohClass.divisor(
        LINES, 1, {"X": ParamPoly((-3, 1)), "L1": -2, "L2": -1})


def test_kill_tangent_cone_multiplicity_mismatch():
    with pytest.raises(ValueError):
        kill_tangent_cone_class(LINES, 3, [("L1", 1), ("L2", 1)])


def test_omp_conditions_class():
    dm1 = ParamPoly((-1, 1))
    got = omp_conditions_class(XL, 1)
    assert got == CohClass.divisor(XL, 1, {"X": dm1}) ** 3
    assert got.coefficient({"X": 2}) == 3 * dm1 ** 2
    assert omp_conditions_class(XL, 2).total_degree == 6
    assert omp_conditions_class(XL, 3).coefficient({"X": 2}) == 45 * ParamPoly((-3, 1)) ** 2
    with pytest.raises(ValueError):
        omp_conditions_class(XL, 0)


def test_constructors_are_homogeneous_of_their_condition_count():
    assert incidence_class(XL, "X", "L").total_degree == 1
    assert diagonal_class(XYL, "X", "Y", 2).total_degree == 2
    assert exceptional_class(XYL).total_degree == 1
    assert monomial_kill_class(XL, 1, 2).total_degree == 1
    assert omp_conditions_class(XL, 4).total_degree == binomial(6, 2)
