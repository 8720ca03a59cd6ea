"""Identity suites: every closed form in the package checked against another route.

Each runner returns (name, passed, detail) triples so the command line can
print one line per identity and the test suite can assert on the same data.
"""

from __future__ import annotations

import random
from typing import Callable

from .coeffring import ParamPoly
from .cohring import CohClass, VarSpec
from .collide import NewtonDiagram, SingularitySpec
from .degrees import (
    closed_form_in_p,
    gysin_degree,
    pair_degree,
    reference_kbranch,
    reference_omp,
    reference_pair_correction,
    reference_two_omp,
    single_point_degree,
    REFERENCE_FORMULAS,
)
from .divisors import diagonal_class, exceptional_class, incidence_class
from .strata import (
    cusp_stratum,
    diagram_stratum,
    node_pair_stratum,
    solve_degeneration,
    two_omp_stratum,
)

Check = tuple[str, bool, str]


def _check(name: str, ok: bool, detail: str = "") -> Check:
    return (name, bool(ok), detail)


def _random_poly(rng: random.Random) -> ParamPoly:
    return ParamPoly([rng.randint(-9, 9) for _ in range(rng.randint(1, 5))])


def ring_checks(triples: int = 1000, seed: int = 20260809) -> list[Check]:
    out = []
    rng = random.Random(seed)
    ok_assoc = ok_comm = ok_dist = True
    for _ in range(triples):
        a, b, c = (_random_poly(rng) for _ in range(3))
        ok_assoc = ok_assoc and (a * b) * c == a * (b * c)
        ok_comm = ok_comm and a * b == b * a
        ok_dist = ok_dist and a * (b + c) == a * b + a * c
    out.append(_check(f"coefficient ring axioms on {triples} random triples",
                      ok_assoc and ok_comm and ok_dist))
    amb = VarSpec.projective(("X", "Y", "L"))
    ok_nil = all(CohClass.generator(amb, g) ** 3 == CohClass.zero(amb, 3)
                 for g in ("X", "Y", "L"))
    out.append(_check("nilpotency of the plane generators", ok_nil))
    blowup = incidence_class(amb, "X", "L") * incidence_class(amb, "Y", "L")
    lhs = exceptional_class(amb) * blowup
    rhs = incidence_class(amb, "X", "L") * diagonal_class(amb, "X", "Y", 2)
    out.append(_check("blowup pushforward identity (X+Y-L)(L+X)(L+Y) = (L+X)(X^2+XY+Y^2)",
                      lhs == rhs))
    return out


def one_point_checks() -> list[Check]:
    out = []
    for p in range(1, 11):
        got = single_point_degree(SingularitySpec.omp(p + 1)).degree
        out.append(_check(f"ordinary point p={p}: class route equals printed formula",
                          got == reference_omp(p)))
    for p in range(2, 7):
        nd = NewtonDiagram.from_points([(p, 0), (0, p + 1)])
        out.append(_check(f"cusp p={p}: diagram chain equals the closed product",
                          diagram_stratum(nd).cls == cusp_stratum(p).cls))
    deg = single_point_degree(SingularitySpec.cusp(2)).degree
    hand = 12 * ParamPoly((-1, 1)) * ParamPoly((-2, 1))
    out.append(_check("cusp p=2 degree equals the hand expansion 12(d-1)(d-2)",
                      deg == hand))
    return out


def corollary_checks(p_max: int = 6) -> list[Check]:
    out = []
    for q in (1, 2, 3):
        for p in range(q, p_max + 1):
            got = gysin_degree(two_omp_stratum(p, q)).degree
            out.append(_check(
                f"two ordinary points (p={p}, q={q}): product equals the closed form",
                got == reference_two_omp(p, q)))
    pair = pair_degree(SingularitySpec.omp(2), SingularitySpec.omp(2))
    out.append(_check("two nodes: 21 cubics through 7 points",
                      pair.value_at(3) == 21, f"got {pair.value_at(3)}"))
    out.append(_check("two nodes: 225 quartics through 12 points",
                      pair.value_at(4) == 225, f"got {pair.value_at(4)}"))
    return out


def interpolation_checks() -> list[Check]:
    out = []
    fam: Callable[[int], ParamPoly] = \
        lambda p: gysin_degree(two_omp_stratum(p, 1)).degree
    form = closed_form_in_p(fam, 1, 8)
    ref = closed_form_in_p(lambda p: reference_two_omp(p, 1), 1, 8)
    out.append(_check("q=1 family p=1..8: recovered grid matches the printed form",
                      form.grid == ref.grid and form.p_base == ref.p_base))
    out.append(_check("q=1 family: held-out sample at p=9 matches",
                      form.at_p(9) == fam(9)))
    fam2 = lambda p: gysin_degree(two_omp_stratum(p, 2)).degree
    form2 = closed_form_in_p(fam2, 2, 9)
    ref2 = closed_form_in_p(lambda p: reference_two_omp(p, 2), 2, 9)
    out.append(_check("q=2 family p=2..9: recovered grid matches the printed form",
                      form2.grid == ref2.grid))
    return out


def recursion_checks() -> list[Check]:
    out = []
    for p in (3, 4):
        got = gysin_degree(node_pair_stratum(SingularitySpec.cusp(p)))
        want = (reference_kbranch((p,)) * reference_omp(1)
                + reference_pair_correction("cusp-node", p))
        out.append(_check(
            f"cusp p={p} beside a node: recursion equals the printed closed form",
            got.degree == want))
    # round trip: multiply back by the killing divisor and re-solve
    from .strata import node_pair_recursion_parts
    rhs, kill, ambient, _ = node_pair_recursion_parts(SingularitySpec.cusp(3))
    cls = solve_degeneration(rhs, kill)
    out.append(_check("degeneration division round trip (cls * kill == rhs)",
                      cls * kill == rhs))
    # ordinary point with marked tangents: recursion against the direct product route
    got = gysin_degree(node_pair_stratum(SingularitySpec.kbranch(1, 1, 1)))
    out.append(_check(
        "ordinary triple point beside a node: recursion equals the direct route",
        got.degree == 6 * reference_two_omp(2, 1)))
    for p in (2, 3):
        got = gysin_degree(node_pair_stratum(SingularitySpec.kbranch(p, 1)))
        want = (reference_kbranch((p, 1)) * reference_omp(1)
                + reference_pair_correction("cusp-branch-node", p))
        out.append(_check(
            f"branch pair ({p},1) beside a node: recursion equals the printed form",
            got.degree == want))
    return out


def integrality_checks(p_max: int = 8, q_max: int = 8) -> list[Check]:
    out = []
    for formula in REFERENCE_FORMULAS:
        worst = None
        total = 0
        try:
            for p, q in formula.domain(p_max, q_max):
                poly = formula.evaluate(p, q)
                v0 = formula.validity(p, q)
                for d in range(v0, v0 + 6):
                    poly(d)
                    total += 1
        except ArithmeticError as exc:  # non-integral transcription value
            worst = str(exc)
        out.append(_check(
            f"catalog formula {formula.key}: integral on {total} grid points",
            worst is None, worst or ""))
    ok = True
    for p in (1, 2, 3):
        raw = gysin_degree(two_omp_stratum(p, p)).degree
        ok = ok and all(raw(d) % 2 == 0 for d in range(2 * p + 2, 2 * p + 8))
    out.append(_check("equal multiplicities: raw two-point degree is even", ok))
    return out


SUITES: dict[str, Callable[[], list[Check]]] = {
    "ring": ring_checks,
    "corollary": corollary_checks,
    "appendix": lambda: one_point_checks() + integrality_checks(),
    "recursion": recursion_checks,
    "interpolation": interpolation_checks,
}


def run_suite(name: str) -> list[Check]:
    if name == "all":
        checks = []
        for suite in SUITES.values():
            checks.extend(suite())
        return checks
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; have {sorted(SUITES)} and 'all'")
    return SUITES[name]()
