"""Named divisor and cycle classes on products of planes with the curve system.

Each constructor returns the class of a geometric condition as a CohClass
over an explicitly supplied VarSpec, so the same condition can be written in
any ambient that contains the generators it mentions.  Conventions:

* points of the plane carry generators like "X", "Y"; lines of the dual
  plane carry "L", "L1", ..; every generator is truncated at 3;
* ``monomial_kill_class(a, b)`` is the divisor erasing the Newton-diagram
  vertex with exponent a along the traced tangent line and exponent b
  transverse to it.  The orientation (which axis the traced line occupies)
  is fixed by requiring the chain of kills on a cusp diagram to reproduce
  the known cusp stratum product; a test pins this.
"""

from __future__ import annotations

from typing import Sequence

from .coeffring import ParamPoly, binomial
from .cohring import CohClass, VarSpec


def incidence_class(ambient: VarSpec, point: str, line: str) -> CohClass:
    """Class of {the point lies on the line}: point + line generators."""
    for name in (point, line):
        idx = ambient.index(name)  # raises KeyError for unknown generators
        if ambient.truncations[idx] != 3:
            raise ValueError(f"generator {name} must have truncation 3")
    return CohClass.divisor(ambient, 0, {point: 1, line: 1})


def diagonal_class(ambient: VarSpec, a: str, b: str, n: int) -> CohClass:
    """Coincidence of two points of an n-dimensional projective space.

    The class is sum(a^(n-i) * b^i for i in 0..n), reduced modulo the
    truncations.  With n = 2 this is the diagonal of the plane (or of the
    dual plane, giving the class of {l = l_i} for two marked lines).
    """
    if n < 1:
        raise ValueError("ambient dimension must be >= 1")
    ia, ib = ambient.index(a), ambient.index(b)
    truncs = ambient.truncations
    terms = {}
    for i in range(n + 1):
        exp = [0] * len(truncs)
        exp[ia] += n - i
        exp[ib] += i
        if any(e >= t for e, t in zip(exp, truncs)):
            continue
        terms[tuple(exp)] = ParamPoly.const(1)
    return CohClass(ambient, n, terms)


def exceptional_class(ambient: VarSpec, x: str = "X", y: str = "Y", line: str = "L") -> CohClass:
    """Exceptional divisor of the blowup of the point pair space along its diagonal."""
    return CohClass.divisor(ambient, 0, {x: 1, y: 1, line: -1})


def monomial_kill_class(ambient: VarSpec, a: int, b: int,
                        point: str = "X", line: str = "L") -> CohClass:
    """Divisor erasing a Newton-diagram vertex.

    ``a`` is the exponent along the traced tangent line, ``b`` the exponent
    transverse to it; the class is F + (d-b-2a)*point + (a-b)*line.  Special
    cases: (a, 0) rectifies the traced branch to contact order a+1, and
    (0, p) kills a one-line tangent cone of multiplicity p.
    """
    if a < 0 or b < 0:
        raise ValueError("exponents must be non-negative")
    return CohClass.divisor(ambient, 1, {
        point: ParamPoly((-b - 2 * a, 1)),
        line: ParamPoly.const(a - b),
    })


def kill_tangent_cone_class(ambient: VarSpec, p: int,
                            cone: Sequence[tuple[str, int]],
                            point: str = "X") -> CohClass:
    """Divisor raising the multiplicity from p to p+1.

    ``cone`` lists the tangent lines with their multiplicities; these must
    sum to p.  The class is F + (d-p)*point - sum(p_i * L_i).
    """
    total = sum(m for _, m in cone)
    if total != p:
        raise ValueError(f"tangent cone multiplicities sum to {total}, expected {p}")
    parts: dict[str, ParamPoly] = {point: ParamPoly((-p, 1))}
    for name, mult in cone:
        parts[name] = parts.get(name, ParamPoly()) - ParamPoly.const(mult)
    return CohClass.divisor(ambient, 1, parts)


def omp_conditions_class(ambient: VarSpec, p: int, point: str = "X") -> CohClass:
    """Vanishing of all order-p derivatives at a point: multiplicity >= p+1.

    The conditions are a smooth global complete intersection, so the class
    is (F + (d-p)*point)^binomial(p+2, 2).
    """
    if p < 1:
        raise ValueError("p must be >= 1")
    factor = CohClass.divisor(ambient, 1, {point: ParamPoly((-p, 1))})
    return factor ** binomial(p + 2, 2)
