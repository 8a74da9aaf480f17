"""Bourbaki-coordinate root systems of types A, B, C, D and G2.

Two orderings of the canonical basis are available: ``BOURBAKI`` (the usual
tables) and ``REVERSED`` (coordinates read backwards, simple roots numbered
backwards), which is the chart the permutation representations use.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import sympy

from src.algebra.errors import (
    NormalizationError,
    UnsupportedRootSystemError,
)
from src.algebra.geometry import (
    AmbientVector,
    LatticeId,
    coordinates_in_basis,
    dot_standard,
    is_integral,
    lattice_contains,
    to_rational,
)

logger = logging.getLogger(__name__)

BOURBAKI = "bourbaki"
REVERSED = "reversed"
ORDERINGS = (BOURBAKI, REVERSED)

SUPPORTED_TYPES = ("A", "B", "C", "D", "G")
MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "G": 2}


def _e(dim: int, *terms: Tuple[int, int]) -> AmbientVector:
    """Vector sum coeff * e_index over (index, coeff) pairs, 1-based indices"""
    coords = [0] * dim
    for index, coeff in terms:
        coords[index - 1] += coeff
    return AmbientVector(coords)


def _plus_minus_pairs(n: int) -> List[AmbientVector]:
    roots = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            roots.append(_e(n, (i, 1), (j, -1)))
            roots.append(_e(n, (i, 1), (j, 1)))
    return roots


def _bourbaki_tables(type_tag: str, n: int):
    """(ambient dim, simple roots, positive roots, highest root, epsilon) in Bourbaki order"""
    if type_tag == "A":
        dim = n + 1
        simple = [_e(dim, (i, 1), (i + 1, -1)) for i in range(1, n + 1)]
        positive = [
            _e(dim, (i, 1), (j, -1)) for i in range(1, dim + 1) for j in range(i + 1, dim + 1)
        ]
        return dim, simple, positive, _e(dim, (1, 1), (dim, -1)), None
    if type_tag in ("B", "C"):
        long_factor = 1 if type_tag == "B" else 2
        simple = [_e(n, (i, 1), (i + 1, -1)) for i in range(1, n)]
        simple.append(_e(n, (n, long_factor)))
        positive = _plus_minus_pairs(n) + [_e(n, (i, long_factor)) for i in range(1, n + 1)]
        theta = _e(n, (1, 1), (2, 1)) if type_tag == "B" else _e(n, (1, 2))
        return n, simple, positive, theta, None
    if type_tag == "D":
        simple = [_e(n, (i, 1), (i + 1, -1)) for i in range(1, n)]
        simple.append(_e(n, (n - 1, 1), (n, 1)))
        return n, simple, _plus_minus_pairs(n), _e(n, (1, 1), (2, 1)), None
    if type_tag == "G":
        a1 = AmbientVector([1, -1, 0])
        a2 = AmbientVector([-2, 1, 1])
        positive = [a1, a2, a1 + a2, 2 * a1 + a2, 3 * a1 + a2, 3 * a1 + 2 * a2]
        return 3, [a1, a2], positive, 3 * a1 + 2 * a2, (-1, -1, 1)
    raise UnsupportedRootSystemError(f"unknown root system type {type_tag!r}")


@dataclass(frozen=True)
class RootSystemData:
    """Type/rank tables of a root system realized in R^N"""

    type_tag: str
    rank: int
    ambient_dim: int
    ordering: str
    simple_roots: Tuple[AmbientVector, ...]
    positive_roots: Tuple[AmbientVector, ...]
    highest_root: AmbientVector
    rho: AmbientVector
    fundamental_weights: Tuple[AmbientVector, ...]
    marks: Tuple[int, ...]
    dual_coxeter: int
    normalization: Fraction
    epsilon: Optional[Tuple[int, ...]] = None
    _positive_set: FrozenSet[AmbientVector] = field(default=frozenset(), repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_positive_set", frozenset(self.positive_roots))

    @property
    def label(self) -> str:
        return f"{self.type_tag}{self.rank}"

    @property
    def theta(self) -> AmbientVector:
        return self.highest_root

    @property
    def roots(self) -> Tuple[AmbientVector, ...]:
        return self.positive_roots + tuple(-a for a in self.positive_roots)

    @property
    def lie_algebra_dimension(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    def is_positive_root(self, vector: AmbientVector) -> bool:
        return vector in self._positive_set

    def is_root(self, vector: AmbientVector) -> bool:
        return vector in self._positive_set or -vector in self._positive_set

    def coroot_star(self, alpha: AmbientVector) -> AmbientVector:
        """alpha* = 2 alpha / <alpha, alpha> in standard coordinates"""
        return alpha * Fraction(2, 1) / dot_standard(alpha, alpha)

    def reflect(self, alpha: AmbientVector, x: AmbientVector) -> AmbientVector:
        return x - self.coroot_star(alpha) * dot_standard(x, alpha)

    def cartan_matrix(self) -> List[List[Fraction]]:
        """Entries <alpha_i, alpha_j*>"""
        stars = [self.coroot_star(a) for a in self.simple_roots]
        return [[dot_standard(a, s) for s in stars] for a in self.simple_roots]

    def is_dominant(self, weight: AmbientVector) -> bool:
        if not lattice_contains(self, LatticeId.weight(), weight):
            return False
        return all(dot_standard(weight, a) >= 0 for a in self.simple_roots)

    def weight_from_fundamental(self, coefficients: Sequence[int]) -> AmbientVector:
        """sum a_i omega_i"""
        if len(coefficients) != self.rank:
            raise ValueError(f"expected {self.rank} coefficients, got {len(coefficients)}")
        total = AmbientVector.zero(self.ambient_dim)
        for a, omega in zip(coefficients, self.fundamental_weights):
            total = total + omega * a
        return total

    def to_reversed(self, vector: AmbientVector) -> AmbientVector:
        """Bourbaki coordinates -> reversed coordinates"""
        return vector.reversed()

    def to_bourbaki(self, vector: AmbientVector) -> AmbientVector:
        """Reversed coordinates -> Bourbaki coordinates"""
        return vector.reversed()

    def __str__(self) -> str:
        return f"{self.label} ({self.ordering})"


def _fundamental_weights(simple: Sequence[AmbientVector]) -> List[AmbientVector]:
    # omega_i = sum_m (C^-1)[m][i] alpha_m with C[j][m] = <alpha_j*, alpha_m>
    stars = [a * 2 / dot_standard(a, a) for a in simple]
    rows = [
        [sympy.Rational(str(dot_standard(s, a))) for a in simple] for s in stars
    ]
    inverse = sympy.Matrix(rows).inv()
    dim = len(simple[0])
    weights = []
    for i in range(len(simple)):
        omega = AmbientVector.zero(dim)
        for m, alpha in enumerate(simple):
            omega = omega + alpha * to_rational(inverse[m, i])
        weights.append(omega)
    return weights


@lru_cache(maxsize=None)
def build(type_tag: str, rank: int, ordering: str = BOURBAKI) -> RootSystemData:
    """Populate every table for (type, rank) in the requested basis ordering"""
    type_tag = type_tag.upper()
    if type_tag not in SUPPORTED_TYPES:
        raise UnsupportedRootSystemError(f"unsupported root system type {type_tag!r}")
    if ordering not in ORDERINGS:
        raise UnsupportedRootSystemError(f"unknown basis ordering {ordering!r}")
    if rank < MIN_RANK[type_tag] or (type_tag == "G" and rank != 2):
        raise UnsupportedRootSystemError(f"unsupported rank {rank} for type {type_tag}")
    if type_tag == "G" and ordering == REVERSED:
        raise UnsupportedRootSystemError("G2 is only tabulated in the Bourbaki ordering")

    dim, simple, positive, theta, epsilon = _bourbaki_tables(type_tag, rank)
    if ordering == REVERSED:
        simple = [a.reversed() for a in reversed(simple)]
        positive = [a.reversed() for a in positive]
        theta = theta.reversed()

    rho = AmbientVector.zero(dim)
    for alpha in positive:
        rho = rho + alpha
    rho = rho / 2

    weights = _fundamental_weights(simple)

    theta_star = theta * 2 / dot_standard(theta, theta)
    marks = coordinates_in_basis([a * 2 / dot_standard(a, a) for a in simple], theta_star)
    if marks is None or not all(is_integral(m) for m in marks):
        raise NormalizationError(f"highest coroot of {type_tag}{rank} has no integral marks")
    dual_coxeter = 1 + sum(int(m) for m in marks)
    expected = 2 * dot_standard(rho, theta) / dot_standard(theta, theta) + 1
    if expected != dual_coxeter:
        raise NormalizationError(
            f"dual Coxeter number mismatch for {type_tag}{rank}: {dual_coxeter} vs {expected}"
        )

    rs = RootSystemData(
        type_tag=type_tag,
        rank=rank,
        ambient_dim=dim,
        ordering=ordering,
        simple_roots=tuple(simple),
        positive_roots=tuple(positive),
        highest_root=theta,
        rho=rho,
        fundamental_weights=tuple(weights),
        marks=tuple(int(m) for m in marks),
        dual_coxeter=dual_coxeter,
        normalization=dot_standard(theta, theta) * dual_coxeter,
        epsilon=epsilon,
    )
    logger.debug("built %s: h^vee=%s c=%s", rs, rs.dual_coxeter, rs.normalization)
    return rs


def bar_map_A(rs: RootSystemData, weight: AmbientVector) -> AmbientVector:
    """lambda -> lambda - <lambda, e_{n+1}> lambda_0, killing the last coordinate"""
    if rs.type_tag != "A":
        raise UnsupportedRootSystemError(f"the bar map is defined for type A only, not {rs.type_tag}")
    if len(weight) != rs.ambient_dim:
        raise ValueError(f"expected a vector of R^{rs.ambient_dim}")
    last = weight[-1]
    return AmbientVector(c - last for c in weight)


@dataclass(frozen=True)
class WeightInterval:
    """Half-open interval (lower, upper] of q with C_q meeting P only in rho.

    ``lower``/``upper`` are Killing-scale values of q; the ``*_standard`` pair is
    the same interval for the standard modulus M = q c.
    """

    lower: Fraction
    upper: Fraction
    lower_standard: Fraction
    upper_standard: Fraction

    def contains(self, q) -> bool:
        q = to_rational(q)
        return self.lower < q <= self.upper

    def contains_modulus(self, modulus) -> bool:
        m = to_rational(modulus)
        return self.lower_standard < m <= self.upper_standard

    def integer_moduli(self) -> List[int]:
        first = math.floor(self.lower_standard) + 1
        return list(range(first, math.floor(self.upper_standard) + 1))


def unique_weight_interval(rs: RootSystemData) -> WeightInterval:
    theta_sq = Fraction(1, rs.dual_coxeter)
    smallest_mark = min(rs.marks)
    lower = theta_sq * (rs.dual_coxeter - 1) / 2
    upper = theta_sq * (rs.dual_coxeter + smallest_mark - 1) / 2
    c = rs.normalization
    return WeightInterval(lower, upper, lower * c, upper * c)


def supported(type_tag: str, rank: int) -> bool:
    try:
        build(type_tag, rank)
    except UnsupportedRootSystemError:
        return False
    return True


def all_builds(max_rank: int) -> Dict[str, RootSystemData]:
    """Every supported Bourbaki build up to max_rank, keyed by label"""
    result = {}
    for type_tag in SUPPORTED_TYPES:
        for rank in range(MIN_RANK[type_tag], max_rank + 1):
            if supported(type_tag, rank):
                rs = build(type_tag, rank)
                result[rs.label] = rs
    return result
