"""Truncated multigraded cohomology ring with an implicit free generator.

Classes live in Z[g1, .., gn]/(g1^t1, .., gn^tn) [F] with polynomial
coefficients in the curve degree d.  The hyperplane class F of the curve
system is never truncated at the degrees that occur here, so it is not
stored: a class keeps its ``total_degree`` (the number of degree-1 factors
accumulated) and only the exponents of the nilpotent generators.  The F
exponent of a stored monomial is total_degree minus the sum of its visible
exponents, which is kept non-negative.

Every divisor class multiplied in this package is homogeneous of
cohomological degree 2 with F coefficient 0 or 1, so this encoding is exact
and keeps multiplication by F invertible on bounded classes.  That
invertibility is what ``divide_exact`` uses to undo a degeneration.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .coeffring import ParamPoly


class ExactDivisionError(ArithmeticError):
    """A class division that should be exact left a remainder."""


@dataclass(frozen=True)
class VarSpec:
    """Ordered nilpotent generators (name, truncation)."""

    generators: tuple[tuple[str, int], ...]

    def __post_init__(self):
        names = [n for n, _ in self.generators]
        if len(set(names)) != len(names):
            raise ValueError(f"generator names must be unique: {names}")
        for name, trunc in self.generators:
            if trunc < 1:
                raise ValueError(f"truncation of {name} must be >= 1, got {trunc}")

    @classmethod
    def projective(cls, names: Iterable[str]) -> "VarSpec":
        """Generators of projective-plane factors: every truncation is 3."""
        return cls(tuple((n, 3) for n in names))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.generators)

    @property
    def truncations(self) -> tuple[int, ...]:
        return tuple(t for _, t in self.generators)

    def index(self, name: str) -> int:
        for i, (n, _) in enumerate(self.generators):
            if n == name:
                return i
        raise KeyError(f"unknown generator {name!r}; have {self.names}")

    def exponent(self, parts: Mapping[str, int]) -> tuple[int, ...]:
        """Exponent vector with the named entries set, zero elsewhere."""
        exp = [0] * len(self.generators)
        for name, e in parts.items():
            exp[self.index(name)] = e
        return tuple(exp)

    def top_exponent(self) -> tuple[int, ...]:
        """Exponent truncation-1 on every generator: the Gysin monomial."""
        return tuple(t - 1 for t in self.truncations)


def _coerce_poly(value) -> ParamPoly:
    if isinstance(value, ParamPoly):
        return value
    if isinstance(value, int):
        return ParamPoly.const(value)
    raise TypeError(f"coefficient must be ParamPoly or int, not {value!r}")


class CohClass:
    """An element of the truncated ring, graded by total_degree."""

    __slots__ = ("ambient", "total_degree", "terms")

    def __init__(self, ambient: VarSpec, total_degree: int,
                 terms: Mapping[tuple[int, ...], ParamPoly]):
        if total_degree < 0:
            raise ValueError("total_degree must be non-negative")
        cleaned: dict[tuple[int, ...], ParamPoly] = {}
        truncs = ambient.truncations
        for exp, coeff in terms.items():
            coeff = _coerce_poly(coeff)
            if coeff.is_zero():
                continue
            if len(exp) != len(truncs):
                raise ValueError(f"exponent {exp} has wrong arity for {ambient.names}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            if any(e >= t for e, t in zip(exp, truncs)):
                raise ValueError(f"exponent {exp} not reduced modulo truncations {truncs}")
            if sum(exp) > total_degree:
                raise ValueError(
                    f"monomial {exp} exceeds total_degree {total_degree}; "
                    "the implicit F exponent would be negative")
            cleaned[tuple(exp)] = coeff
        self.ambient = ambient
        self.total_degree = total_degree
        self.terms = cleaned

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ambient: VarSpec, total_degree: int = 0) -> "CohClass":
        return cls(ambient, total_degree, {})

    @classmethod
    def one(cls, ambient: VarSpec) -> "CohClass":
        return cls(ambient, 0, {tuple([0] * len(ambient.generators)): ParamPoly.const(1)})

    @classmethod
    def divisor(cls, ambient: VarSpec, f_part, parts: Mapping[str, object] = ()) -> "CohClass":
        """Degree-1 class f_part * F + sum(parts[g] * g)."""
        terms: dict[tuple[int, ...], ParamPoly] = {}
        f_poly = _coerce_poly(f_part)
        if not f_poly.is_zero():
            terms[tuple([0] * len(ambient.generators))] = f_poly
        for name, coeff in dict(parts).items():
            poly = _coerce_poly(coeff)
            if poly.is_zero():
                continue
            terms[ambient.exponent({name: 1})] = poly
        return cls(ambient, 1, terms)

    @classmethod
    def generator(cls, ambient: VarSpec, name: str) -> "CohClass":
        return cls.divisor(ambient, 0, {name: 1})

    # -- ring structure ------------------------------------------------------

    def _require_same_ambient(self, other: "CohClass"):
        if self.ambient != other.ambient:
            raise ValueError(
                f"ambient mismatch: {self.ambient.names} vs {other.ambient.names}")

    def __add__(self, other: "CohClass") -> "CohClass":
        self._require_same_ambient(other)
        if self.total_degree != other.total_degree:
            raise ValueError(
                "cannot add classes of total degree "
                f"{self.total_degree} and {other.total_degree}")
        terms = dict(self.terms)
        for exp, coeff in other.terms.items():
            terms[exp] = terms.get(exp, ParamPoly()) + coeff
        return CohClass(self.ambient, self.total_degree, terms)

    def __neg__(self) -> "CohClass":
        return CohClass(self.ambient, self.total_degree,
                        {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "CohClass") -> "CohClass":
        return self + (-other)

    def scaled(self, factor) -> "CohClass":
        """Multiply every coefficient by an integer or ParamPoly (degree 0 in F)."""
        poly = _coerce_poly(factor)
        return CohClass(self.ambient, self.total_degree,
                        {e: c * poly for e, c in self.terms.items()})

    def __mul__(self, other: "CohClass") -> "CohClass":
        self._require_same_ambient(other)
        truncs = self.ambient.truncations
        out: dict[tuple[int, ...], ParamPoly] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                if any(e >= t for e, t in zip(exp, truncs)):
                    continue  # nilpotent: the monomial dies
                prod = c1 * c2
                if exp in out:
                    out[exp] = out[exp] + prod
                else:
                    out[exp] = prod
        return CohClass(self.ambient, self.total_degree + other.total_degree, out)

    def __pow__(self, n: int) -> "CohClass":
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = CohClass.one(self.ambient)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CohClass):
            return NotImplemented
        return (self.ambient == other.ambient
                and self.total_degree == other.total_degree
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.ambient, self.total_degree, tuple(sorted(self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    # -- extraction and division ---------------------------------------------

    def coefficient(self, monomial) -> ParamPoly:
        """ParamPoly coefficient of a monomial; zero if absent.

        ``monomial`` is an exponent tuple or a {name: exponent} mapping.
        """
        if isinstance(monomial, Mapping):
            exp = self.ambient.exponent(monomial)
        else:
            exp = tuple(monomial)
        truncs = self.ambient.truncations
        if len(exp) != len(truncs):
            raise ValueError(f"exponent {exp} has wrong arity")
        if any(e >= t for e, t in zip(exp, truncs)):
            raise ValueError(f"monomial {exp} exceeds truncations {truncs}")
        return self.terms.get(exp, ParamPoly())

    def graded_parts(self) -> dict[int, dict[tuple[int, ...], ParamPoly]]:
        """Terms grouped by visible degree (sum of nilpotent exponents)."""
        parts: dict[int, dict[tuple[int, ...], ParamPoly]] = {}
        for exp, coeff in self.terms.items():
            parts.setdefault(sum(exp), {})[exp] = coeff
        return parts

    def divide_exact(self, b: "CohClass") -> "CohClass":
        """Solve a * b == self for a, where b = F + (nilpotent part).

        b must have total_degree 1 and F coefficient exactly 1.  Multiplying
        by b is injective on bounded classes because F is invertible there,
        so the quotient is found by matching implicit F degrees from the top
        down; a nonzero remainder means the defining equation was
        inconsistent and raises ExactDivisionError.
        """
        self._require_same_ambient(b)
        if b.total_degree != 1:
            raise ValueError("divisor must have total_degree 1")
        zero_exp = tuple([0] * len(self.ambient.generators))
        if b.terms.get(zero_exp, ParamPoly()) != ParamPoly.const(1):
            raise ValueError("divisor must have F coefficient 1")
        if self.is_zero():
            raise ValueError("cannot divide the zero class")
        if self.total_degree < 1:
            raise ExactDivisionError("dividend has total_degree 0")
        nilpotent = CohClass(self.ambient, 1,
                             {e: c for e, c in b.terms.items() if e != zero_exp})
        target = self.graded_parts()
        t_quot = self.total_degree - 1
        quotient = CohClass.zero(self.ambient, t_quot)
        prev_level = CohClass.zero(self.ambient, t_quot)
        for level in range(0, t_quot + 1):
            carried = (prev_level * nilpotent).graded_parts().get(level, {})
            wanted = target.get(level, {})
            exps = set(wanted) | set(carried)
            level_terms = {}
            for exp in exps:
                coeff = wanted.get(exp, ParamPoly()) - carried.get(exp, ParamPoly())
                if not coeff.is_zero():
                    level_terms[exp] = coeff
            level_cls = CohClass(self.ambient, t_quot, level_terms)
            quotient = quotient + level_cls
            prev_level = CohClass(self.ambient, t_quot, level_terms)
        if quotient * b != self:
            raise ExactDivisionError("division left a nonzero remainder")
        return quotient

    # -- serialization and display ---------------------------------------------

    def to_json(self) -> dict:
        variables = [{"name": n, "trunc": t} for n, t in self.ambient.generators]
        names = self.ambient.names
        terms = []
        for exp in sorted(self.terms):
            exps = {names[i]: e for i, e in enumerate(exp) if e != 0}
            terms.append({"exps": exps, "coeff": self.terms[exp].to_json()})
        return {"variables": variables, "total_degree": self.total_degree, "terms": terms}

    @classmethod
    def from_json(cls, data: Mapping) -> "CohClass":
        ambient = VarSpec(tuple((v["name"], v["trunc"]) for v in data["variables"]))
        terms = {}
        for item in data["terms"]:
            exp = ambient.exponent(dict(item["exps"]))
            terms[exp] = ParamPoly.from_json(item["coeff"])
        return cls(ambient, data["total_degree"], terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self.ambient.names
        pieces = []
        for exp in sorted(self.terms):
            factors = []
            f_exp = self.total_degree - sum(exp)
            if f_exp == 1:
                factors.append("F")
            elif f_exp > 1:
                factors.append(f"F^{f_exp}")
            for name, e in zip(names, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors) if factors else "1"
            coeff = self.terms[exp]
            if coeff == ParamPoly.const(1) and factors:
                pieces.append(mono)
            else:
                pieces.append(f"({coeff})*{mono}" if factors else f"({coeff})")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"<CohClass deg={self.total_degree} over {self.ambient.names}: {self}>"


def product_of(factors: Sequence[CohClass]) -> CohClass:
    """Deterministic balanced product of many classes.

    Balancing keeps intermediate coefficient degrees small on long
    products; the association order never changes the result.
    """
    items = list(factors)
    if not items:
        raise ValueError("empty product has no ambient to live in")
    while len(items) > 1:
        nxt = [items[i] * items[i + 1] for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]
