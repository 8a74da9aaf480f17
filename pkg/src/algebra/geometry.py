"""Exact rational vectors, the two inner products and lattice membership.

Everything here is exact: scalars are ``fractions.Fraction`` and vectors are
immutable tuples of them. Root-system objects are only used through their
attributes (``type_tag``, ``normalization``, ``simple_roots`` ...), so this
module does not import ``root_data``.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import sympy

from src.algebra.errors import DimensionMismatchError, UnsupportedRootSystemError

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction, str]


def to_rational(value: Scalar) -> Fraction:
    """Convert an int, Fraction or "p/q" string to a Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, str)):
        return Fraction(value)
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def is_integral(value: Fraction) -> bool:
    return value.denominator == 1


class AmbientVector:
    """Immutable vector of exact rationals in R^N"""

    __slots__ = ("_coords", "_hash")

    def __init__(self, coords: Iterable[Scalar]):
        self._coords: Tuple[Fraction, ...] = tuple(to_rational(c) for c in coords)
        self._hash = hash(self._coords)

    @classmethod
    def zero(cls, dim: int) -> "AmbientVector":
        return cls([0] * dim)

    @classmethod
    def basis(cls, dim: int, index: int) -> "AmbientVector":
        """Canonical basis vector e_{index + 1} (0-based index)"""
        coords = [0] * dim
        coords[index] = 1
        return cls(coords)

    @property
    def coords(self) -> Tuple[Fraction, ...]:
        return self._coords

    def __len__(self) -> int:
        return len(self._coords)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._coords)

    def __getitem__(self, index: int) -> Fraction:
        return self._coords[index]

    def _check(self, other: "AmbientVector") -> None:
        if len(other) != len(self):
            raise DimensionMismatchError(
                f"vectors of dimension {len(self)} and {len(other)} cannot be combined"
            )

    def __add__(self, other: "AmbientVector") -> "AmbientVector":
        self._check(other)
        return AmbientVector(a + b for a, b in zip(self._coords, other._coords))

    def __sub__(self, other: "AmbientVector") -> "AmbientVector":
        self._check(other)
        return AmbientVector(a - b for a, b in zip(self._coords, other._coords))

    def __neg__(self) -> "AmbientVector":
        return AmbientVector(-a for a in self._coords)

    def __mul__(self, scalar: Scalar) -> "AmbientVector":
        s = to_rational(scalar)
        return AmbientVector(s * a for a in self._coords)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "AmbientVector":
        s = to_rational(scalar)
        return AmbientVector(a / s for a in self._coords)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AmbientVector):
            return NotImplemented
        return self._coords == other._coords

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"AmbientVector({self.to_strings()})"

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._coords)

    def is_integral(self) -> bool:
        return all(is_integral(c) for c in self._coords)

    def coordinate_sum(self) -> Fraction:
        return sum(self._coords, Fraction(0))

    def reversed(self) -> "AmbientVector":
        return AmbientVector(reversed(self._coords))

    def to_strings(self) -> List[str]:
        """Exact "p/q" rendering of each coordinate (integers print as "p")"""
        return [str(c) for c in self._coords]

    @classmethod
    def from_strings(cls, values: Sequence[str]) -> "AmbientVector":
        return cls(Fraction(v) for v in values)


def dot_standard(x: AmbientVector, y: AmbientVector) -> Fraction:
    """Standard inner product of R^N"""
    if len(x) != len(y):
        raise DimensionMismatchError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def dot_killing(rs, x: AmbientVector, y: AmbientVector) -> Fraction:
    """Killing-normalized product: <x,y> / c with c = <theta,theta> h^vee"""
    for v in (x, y):
        if len(v) != rs.ambient_dim:
            raise DimensionMismatchError(
                f"vector of dimension {len(v)} is not in the ambient space R^{rs.ambient_dim}"
            )
    return dot_standard(x, y) / rs.normalization


class LatticeKind(Enum):
    ROOT = "Q"
    WEIGHT = "P"
    COROOT_STAR = "Q*"


@dataclass(frozen=True)
class LatticeId:
    """A lattice named by kind; COROOT_STAR carries an integer scale k for k*Q*"""

    kind: LatticeKind
    scale: int = 1

    def __post_init__(self):
        if self.scale <= 0:
            raise ValueError(f"lattice scale must be positive, got {self.scale}")
        if self.scale != 1 and self.kind is not LatticeKind.COROOT_STAR:
            raise ValueError("only the coroot lattice Q* can be scaled")

    @classmethod
    def root(cls) -> "LatticeId":
        return cls(LatticeKind.ROOT)

    @classmethod
    def weight(cls) -> "LatticeId":
        return cls(LatticeKind.WEIGHT)

    @classmethod
    def coroot_star(cls, scale: int = 1) -> "LatticeId":
        return cls(LatticeKind.COROOT_STAR, scale)

    def __str__(self) -> str:
        if self.kind is LatticeKind.COROOT_STAR and self.scale != 1:
            return f"{self.scale}Q*"
        return self.kind.value


def _sum_zero(v: AmbientVector) -> bool:
    return v.coordinate_sum() == 0


def _even_integral(v: AmbientVector) -> bool:
    return v.is_integral() and v.coordinate_sum() % 2 == 0


def _uniform_half_integral(v: AmbientVector) -> bool:
    # all coordinates in Z, or all in Z + 1/2
    if not all(is_integral(2 * c) for c in v):
        return False
    return all(is_integral(c - v[0]) for c in v)


def _a_weight(v: AmbientVector) -> bool:
    return _sum_zero(v) and all(is_integral(c - v[-1]) for c in v)


def _g2_coroot_star(v: AmbientVector) -> bool:
    # v = a(e1 - e2) + b(-2e1 + e2 + e3)/3 with a = v1 + 2 v3, b = 3 v3
    return _sum_zero(v) and is_integral(3 * v[2]) and is_integral(v[0] + 2 * v[2])


_PREDICATES = {
    ("A", LatticeKind.ROOT): lambda v: v.is_integral() and _sum_zero(v),
    ("A", LatticeKind.WEIGHT): _a_weight,
    ("A", LatticeKind.COROOT_STAR): lambda v: v.is_integral() and _sum_zero(v),
    ("B", LatticeKind.ROOT): lambda v: v.is_integral(),
    ("B", LatticeKind.WEIGHT): _uniform_half_integral,
    ("B", LatticeKind.COROOT_STAR): _even_integral,
    ("C", LatticeKind.ROOT): _even_integral,
    ("C", LatticeKind.WEIGHT): lambda v: v.is_integral(),
    ("C", LatticeKind.COROOT_STAR): lambda v: v.is_integral(),
    ("D", LatticeKind.ROOT): _even_integral,
    ("D", LatticeKind.WEIGHT): _uniform_half_integral,
    ("D", LatticeKind.COROOT_STAR): _even_integral,
    ("G", LatticeKind.ROOT): lambda v: v.is_integral() and _sum_zero(v),
    ("G", LatticeKind.WEIGHT): lambda v: v.is_integral() and _sum_zero(v),
    ("G", LatticeKind.COROOT_STAR): _g2_coroot_star,
}


def lattice_contains(rs, lattice: LatticeId, v: AmbientVector) -> bool:
    """Congruence test for v in the lattice, following the coordinate descriptions per type"""
    if len(v) != rs.ambient_dim:
        raise DimensionMismatchError(
            f"vector of dimension {len(v)} is not in the ambient space R^{rs.ambient_dim}"
        )
    predicate = _PREDICATES.get((rs.type_tag, lattice.kind))
    if predicate is None:
        raise UnsupportedRootSystemError(f"no lattice description for type {rs.type_tag}")
    return predicate(v / lattice.scale)


def lattice_basis(rs, lattice: LatticeId) -> List[AmbientVector]:
    """Z-basis of the lattice inside the span of the roots"""
    if lattice.kind is LatticeKind.ROOT:
        return list(rs.simple_roots)
    if lattice.kind is LatticeKind.WEIGHT:
        return list(rs.fundamental_weights)
    return [rs.coroot_star(alpha) * lattice.scale for alpha in rs.simple_roots]


def coordinates_in_basis(
    basis: Sequence[AmbientVector], v: AmbientVector
) -> Optional[List[Fraction]]:
    """Solve v = sum c_i b_i exactly; None when v is outside the span"""
    if not basis:
        return [] if v.is_zero() else None
    matrix = sympy.Matrix(
        [[sympy.Rational(b[row].numerator, b[row].denominator) for b in basis]
         for row in range(len(v))]
    )
    target = sympy.Matrix([sympy.Rational(c.numerator, c.denominator) for c in v])
    try:
        solution, params = matrix.gauss_jordan_solve(target)
    except ValueError:
        return None
    if params.shape[0]:
        solution = solution.subs({p: 0 for p in params})
    return [to_rational(sympy.Rational(x)) for x in solution]


def integer_gcd(values: Iterable[Fraction]) -> int:
    """gcd of a collection of integral rationals (0 for an all-zero collection)"""
    result = 0
    for value in values:
        if not is_integral(value):
            raise ValueError(f"{value} is not an integer")
        result = gcd(result, int(value))
    return result
