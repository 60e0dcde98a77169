"""Weight enumerator families of ternary self-dual codes.

With the first variable evaluated at 1, every weight enumerator of a ternary
self-dual code of length n lies in the span of the polynomials
g4^a * g12^b with 4a + 12b = n, where

    g4  = 1 + 8 y^3
    g12 = y^3 (1 - y^3)^3.

For lengths divisible by 12 the codes of interest have no nonzero words
below weight n/4, which pins the enumerator down to a one-parameter family
base + alpha * direction, alpha being the number of words of weight n/4.
All solving is done over exact rationals; no floating point enters anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InternalInconsistencyError


class IntPoly:
    """A sparse univariate polynomial with exact integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        c = {e: int(v) for e, v in (coeffs or {}).items() if v}
        self.coeffs = c

    def coefficient(self, e: int) -> int:
        return self.coeffs.get(e, 0)

    def degree(self) -> int:
        return max(self.coeffs, default=0)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self.coeffs.items())

    def exponents(self) -> list[int]:
        return sorted(self.coeffs)

    def negative_exponents(self) -> list[int]:
        return sorted(e for e, v in self.coeffs.items() if v < 0)

    def sum_of_coefficients(self) -> int:
        return sum(self.coeffs.values())

    def __add__(self, other: "IntPoly") -> "IntPoly":
        out = dict(self.coeffs)
        for e, v in other.coeffs.items():
            out[e] = out.get(e, 0) + v
        return IntPoly(out)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + other.scale(-1)

    def scale(self, c: int) -> "IntPoly":
        return IntPoly({e: c * v for e, v in self.coeffs.items()})

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        out: dict[int, int] = {}
        for e1, v1 in self.coeffs.items():
            for e2, v2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + v1 * v2
        return IntPoly(out)

    def __pow__(self, k: int) -> "IntPoly":
        out = IntPoly({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.coeffs.items())))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "IntPoly(0)"
        parts = [f"{v}*y^{e}" for e, v in self.items()]
        return "IntPoly(" + " + ".join(parts) + ")"


G4 = IntPoly({0: 1, 3: 8})
G12 = IntPoly({3: 1}) * (IntPoly({0: 1, 3: -1}) ** 3)


def gleason_basis(n: int) -> list[IntPoly]:
    """The products g4^a * g12^b with 4a + 12b = n, b ascending."""
    if n <= 0 or n % 4:
        raise ValueError(f"length {n} does not support ternary self-dual codes")
    return [(G4 ** ((n - 12 * b) // 4)) * (G12**b) for b in range(n // 12 + 1)]


def _solve_exact(basis: list[IntPoly], targets: dict[int, int]) -> list[Fraction]:
    """Solve sum_i c_i * basis_i for the prescribed coefficients at the given
    exponents, over exact rationals.  The system must be square and uniquely
    solvable."""
    exps = sorted(targets)
    m = len(basis)
    if len(exps) != m:
        raise InternalInconsistencyError("constraint count does not match basis size")
    a = [[Fraction(p.coefficient(e)) for p in basis] + [Fraction(targets[e])] for e in exps]
    for col in range(m):
        piv = next((r for r in range(col, m) if a[r][col] != 0), None)
        if piv is None:
            raise InternalInconsistencyError("singular enumerator system")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(m):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][m] for r in range(m)]


def _combine(basis: list[IntPoly], coeffs: list[Fraction]) -> IntPoly:
    out = IntPoly()
    for c, p in zip(coeffs, basis):
        if c.denominator != 1:
            raise InternalInconsistencyError(f"non-integral combination weight {c}")
        out = out + p.scale(c.numerator)
    return out


@dataclass(frozen=True)
class EnumeratorFamily:
    """The one-parameter enumerator family base + alpha * direction for
    length-n codes whose smallest nonzero weight is n/4."""

    n: int
    base: IntPoly
    direction: IntPoly

    def at(self, alpha: int) -> IntPoly:
        return self.base + self.direction.scale(alpha)


@lru_cache(maxsize=None)
def near_extremal_family(n: int) -> EnumeratorFamily:
    """Solve for the family at length n (n a positive multiple of 12).

    The base is the unique basis combination with constant coefficient 1 and
    zero coefficients at weights 3, 6, ..., 3m (m = n/12); the direction has
    constant coefficient 0, coefficient 1 at weight 3m and zeros between.
    """
    if n <= 0 or n % 12:
        raise ValueError(f"length {n} is not a positive multiple of 12")
    m = n // 12
    basis = gleason_basis(n)
    constraints = {3 * j: 0 for j in range(m + 1)}
    constraints[0] = 1
    base = _combine(basis, _solve_exact(basis, constraints))
    constraints = {3 * j: 0 for j in range(m + 1)}
    constraints[3 * m] = 1
    direction = _combine(basis, _solve_exact(basis, constraints))
    return EnumeratorFamily(n, base, direction)


def distribution_from_alpha(n: int, alpha: int) -> IntPoly:
    """The family enumerator evaluated at the given alpha.

    The result may have negative coefficients when alpha is infeasible;
    inspect IntPoly.negative_exponents to flag those.
    """
    return near_extremal_family(n).at(alpha)


@dataclass(frozen=True)
class AlphaConstraint:
    """Admissible range for the count of minimum-weight words: the count is
    divisor * beta with beta in [beta_min, beta_max]."""

    n: int
    divisor: int
    beta_min: int
    beta_max: int

    def contains_alpha(self, alpha: int) -> bool:
        beta, rem = divmod(alpha, self.divisor)
        return rem == 0 and self.beta_min <= beta <= self.beta_max

    def betas(self) -> range:
        return range(self.beta_min, self.beta_max + 1)


_ALPHA_CONSTRAINTS = {
    36: AlphaConstraint(36, 8, 1, 111),
    48: AlphaConstraint(48, 8, 1, 4324),
    60: AlphaConstraint(60, 8, 1, 5148),
    72: AlphaConstraint(72, 8, 14466, 251482),
}


def alpha_constraint(n: int) -> AlphaConstraint:
    try:
        return _ALPHA_CONSTRAINTS[n]
    except KeyError:
        raise ValueError(f"no admissible-count table for length {n}") from None
