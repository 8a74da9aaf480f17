"""Kostant's expansion of the dim(g)-th power of the Euler product.

A dominant weight lam contributes to the expansion exactly when lam + rho is
regular for the modulus M = c/2, that is when lam + rho = t_tau v(rho) for an
affine Weyl element of that modulus. The contribution is
sign * dim V_lam * x^{(lam + 2 rho, lam)} with sign = (-1)^{l(v)}.

The per-type routines below recover (tau, v) by division with remainder and
read the sign off a permutation of the remainders. They work in Bourbaki
coordinates; reversed inputs are converted first.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from tqdm import tqdm

from src.algebra.affine_weyl import (
    FiniteWeylElement,
    element_mapping,
    permutation_sign,
)
from src.algebra.errors import (
    NormalizationError,
    NotDominantError,
    NotInOrbitError,
    NotInPalcError,
    UnsupportedRootSystemError,
)
from src.algebra.geometry import (
    AmbientVector,
    LatticeId,
    dot_standard,
    is_integral,
    lattice_contains,
)
from src.algebra.root_data import BOURBAKI, RootSystemData, bar_map_A, build
from src.algebra.series import SeriesCoefficients, euler_power

logger = logging.getLogger(__name__)


def half_modulus(rs: RootSystemData) -> int:
    """M = c/2, the standard modulus of the group acting on rho"""
    m = rs.normalization / 2
    if not is_integral(m):
        raise NormalizationError(f"c/2 = {m} is not an integer for {rs.label}")
    return int(m)


def half_coroot_lattice(rs: RootSystemData) -> LatticeId:
    """1/2 Q^vee in standard coordinates, i.e. M Q* with M = c/2"""
    return LatticeId.coroot_star(half_modulus(rs))


def _bourbaki(rs: RootSystemData, weight: AmbientVector) -> Tuple[RootSystemData, AmbientVector]:
    if rs.ordering == BOURBAKI:
        return rs, weight
    return build(rs.type_tag, rs.rank, BOURBAKI), rs.to_bourbaki(weight)


def _require_dominant(rs: RootSystemData, lam: AmbientVector) -> None:
    if len(lam) != rs.ambient_dim:
        raise NotDominantError(f"weight of dimension {len(lam)} is not in R^{rs.ambient_dim}")
    if not rs.is_dominant(lam):
        raise NotDominantError(f"{lam.to_strings()} is not a dominant weight of {rs.label}")


def is_in_palc(rs: RootSystemData, lam: AmbientVector) -> bool:
    """<lam + rho, alpha> not in (c/2)Z for every positive root"""
    _require_dominant(rs, lam)
    mu = lam + rs.rho
    m = half_modulus(rs)
    return all(dot_standard(mu, alpha) % m != 0 for alpha in rs.positive_roots)


def _pairwise_distinct_mod(values: List[Fraction], modulus: int, signed: bool) -> bool:
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if (values[i] - values[j]) % modulus == 0:
                return False
            if signed and (values[i] + values[j]) % modulus == 0:
                return False
    return True


def _palc_typed_A(rs: RootSystemData, lam: AmbientVector) -> bool:
    n = rs.rank
    if not lattice_contains(rs, LatticeId.root(), lam):
        return False
    bar = bar_map_A(rs, lam)
    values = [bar[i] + n - i for i in range(n + 1)]
    return _pairwise_distinct_mod(values, n + 1, signed=False)


def _palc_typed_C(rs: RootSystemData, lam: AmbientVector) -> bool:
    n = rs.rank
    values = [lam[i] + n - i for i in range(n)]
    if any(v % (n + 1) == 0 for v in values):
        return False
    return _pairwise_distinct_mod(values, 2 * (n + 1), signed=True)


def _palc_typed_B(rs: RootSystemData, lam: AmbientVector) -> bool:
    n = rs.rank
    if not lam.is_integral():
        return False
    values = [2 * (lam[i] + n - i - 1) + 1 for i in range(n)]
    return _pairwise_distinct_mod(values, 2 * (2 * n - 1), signed=True)


def _palc_typed_D(rs: RootSystemData, lam: AmbientVector) -> bool:
    n = rs.rank
    if not lam.is_integral() or lam.coordinate_sum() % 2 != 0:
        return False
    values = [lam[i] + n - i - 1 for i in range(n)]
    return _pairwise_distinct_mod(values, 2 * n - 2, signed=True)


def _palc_typed_G(rs: RootSystemData, lam: AmbientVector) -> bool:
    mu = [lam[i] + rs.epsilon[i] * (i + 1) for i in range(3)]
    if not _pairwise_distinct_mod(mu, 12, signed=False):
        return False
    for i in range(3):
        j, k = [x for x in range(3) if x != i]
        if (2 * mu[i] - mu[j] - mu[k]) % 12 == 0:
            return False
    return True


_TYPED_TESTS = {
    "A": _palc_typed_A,
    "B": _palc_typed_B,
    "C": _palc_typed_C,
    "D": _palc_typed_D,
    "G": _palc_typed_G,
}


def is_in_palc_typed(rs: RootSystemData, lam: AmbientVector) -> bool:
    """The closed-form congruences of each type, evaluated in Bourbaki coordinates"""
    _require_dominant(rs, lam)
    rs_b, lam_b = _bourbaki(rs, lam)
    test = _TYPED_TESTS.get(rs_b.type_tag)
    if test is None:
        raise UnsupportedRootSystemError(f"no closed-form test for type {rs_b.type_tag}")
    return test(rs_b, lam_b)


@dataclass(frozen=True)
class Decomposition:
    """mu = tau + v(rho) together with the sign read off the remainders"""

    tau: AmbientVector
    v: FiniteWeylElement
    remainders: Tuple[Fraction, ...]
    sign: int


def _decompose_A(rs: RootSystemData, mu: AmbientVector) -> Decomposition:
    n = rs.rank
    # x_i = lam_bar_i + (n - i + 1) - sum(lam_bar)/(n+1), which is mu_i + n/2
    x = [c + Fraction(n, 2) for c in mu]
    if not all(is_integral(c) for c in x):
        raise NotInOrbitError(f"{mu.to_strings()} is not lam + rho for an integral lam")
    r = [int(-c) % (n + 1) or (n + 1) for c in x]
    if len(set(r)) != n + 1:
        raise NotInOrbitError(f"remainders {r} of {mu.to_strings()} are not distinct")
    q = [(int(c) - (n - ri + 1)) // (n + 1) for c, ri in zip(x, r)]
    tau = AmbientVector([(n + 1) * qi for qi in q])
    target = AmbientVector([Fraction(n - 2 * ri + 2, 2) for ri in r])
    v = element_mapping(rs, rs.rho, target)
    return Decomposition(tau, v, tuple(Fraction(ri) for ri in r), permutation_sign(r))


def _signed_permutation_sign(remainders: List[Fraction]) -> int:
    # i -> |remainder_{n-i+1}| together with the count of negative remainders
    sign = permutation_sign([abs(c) for c in reversed(remainders)])
    negatives = sum(1 for c in remainders if c < 0)
    return -sign if negatives % 2 else sign


def _decompose_C(rs: RootSystemData, mu: AmbientVector) -> Decomposition:
    n = rs.rank
    period = 2 * (n + 1)
    if not mu.is_integral():
        raise NotInOrbitError(f"{mu.to_strings()} is not integral")
    bars = []
    for c in mu:
        residue = int(c) % period
        if residue in (0, n + 1):
            raise NotInOrbitError(f"coordinate {c} of {mu.to_strings()} lies on a wall")
        bars.append(Fraction(residue if residue <= n else residue - period))
    if len({abs(b) for b in bars}) != n:
        raise NotInOrbitError(f"remainders {bars} of {mu.to_strings()} are not distinct")
    bar = AmbientVector(bars)
    tau = mu - bar
    v = element_mapping(rs, rs.rho, bar)
    return Decomposition(tau, v, tuple(bars), _signed_permutation_sign(bars))


def _flip_remainder(
    rs: RootSystemData, mu: AmbientVector, bars: List[Fraction], wall: Fraction
) -> List[Fraction]:
    """Replace the remainder `wall` by its negative when mu - bar misses 1/2 Q^vee"""
    if lattice_contains(rs, half_coroot_lattice(rs), mu - AmbientVector(bars)):
        return bars
    hits = [i for i, b in enumerate(bars) if b == wall]
    if len(hits) != 1:
        raise NotInOrbitError(f"{mu.to_strings()}: no unique remainder {wall} to flip")
    flipped = list(bars)
    flipped[hits[0]] = -wall
    return flipped


def _decompose_B(rs: RootSystemData, mu: AmbientVector) -> Decomposition:
    n = rs.rank
    period = 2 * (2 * n - 1)
    doubled = [2 * c for c in mu]
    if not all(is_integral(c) and int(c) % 2 == 1 for c in doubled):
        raise NotInOrbitError(f"{mu.to_strings()} does not have half-odd coordinates")
    bars = []
    for c in doubled:
        residue = int(c) % period
        bars.append(Fraction(residue if residue <= 2 * n - 1 else residue - period, 2))
    bars = _flip_remainder(rs, mu, bars, Fraction(2 * n - 1, 2))
    if len({abs(b) for b in bars}) != n:
        raise NotInOrbitError(f"remainders of {mu.to_strings()} are not distinct")
    bar = AmbientVector(bars)
    tau = mu - bar
    v = element_mapping(rs, rs.rho, bar)
    doubled_bars = [2 * b for b in bars]
    return Decomposition(tau, v, tuple(doubled_bars), _signed_permutation_sign(doubled_bars))


def _decompose_D(rs: RootSystemData, mu: AmbientVector) -> Decomposition:
    n = rs.rank
    period = 2 * n - 2
    if not mu.is_integral():
        raise NotInOrbitError(f"{mu.to_strings()} is not integral")
    bars = []
    for c in mu:
        residue = int(c) % period
        bars.append(Fraction(residue if residue <= n - 1 else residue - period))
    bars = _flip_remainder(rs, mu, bars, Fraction(n - 1))
    if len({abs(b) for b in bars}) != n:
        raise NotInOrbitError(f"remainders {bars} of {mu.to_strings()} are not distinct")
    bar = AmbientVector(bars)
    tau = mu - bar
    v = element_mapping(rs, rs.rho, bar)
    # permutation of {0, ..., n-1}: i -> |bar_{n-i}|
    sign = permutation_sign([abs(b) for b in reversed(bars)])
    return Decomposition(tau, v, tuple(bars), sign)


# (residue mod 4 of the repeated pair, a - b mod 3) -> remainders at (i*, j*, k*)
_G2_REMAINDERS = {
    (1, 1): (1, -3, 2),
    (1, 2): (-3, 1, 2),
    (3, 1): (3, -1, -2),
    (3, 2): (-1, 3, -2),
}


def _decompose_G(rs: RootSystemData, mu: AmbientVector) -> Decomposition:
    if not mu.is_integral() or mu.coordinate_sum() != 0:
        raise NotInOrbitError(f"{mu.to_strings()} is not an integral point of the plane")
    values = [int(c) for c in mu]
    mod4 = [c % 4 for c in values]
    twos = [i for i in range(3) if mod4[i] == 2]
    if len(twos) != 1:
        raise NotInOrbitError(f"residues mod 4 {mod4} of {mu.to_strings()} match no pattern")
    k_star = twos[0]
    i_star, j_star = [i for i in range(3) if i != k_star]
    x = mod4[i_star]
    if x not in (1, 3) or mod4[j_star] != x:
        raise NotInOrbitError(f"residues mod 4 {mod4} of {mu.to_strings()} match no pattern")
    difference = (values[i_star] - values[j_star]) % 3
    if difference == 0:
        raise NotInOrbitError(f"{mu.to_strings()} repeats a residue mod 12")
    r = [0, 0, 0]
    for index, remainder in zip((i_star, j_star, k_star), _G2_REMAINDERS[(x, difference)]):
        r[index] = remainder
    tau = AmbientVector([values[i] - r[i] for i in range(3)])
    if not lattice_contains(rs, half_coroot_lattice(rs), tau):
        raise NotInOrbitError(f"quotients of {mu.to_strings()} are not congruent mod 3")
    target = AmbientVector(r)
    v = element_mapping(rs, rs.rho, target)
    return Decomposition(tau, v, tuple(Fraction(c) for c in r), permutation_sign([abs(c) for c in r]))


_DECOMPOSERS = {
    "A": _decompose_A,
    "B": _decompose_B,
    "C": _decompose_C,
    "D": _decompose_D,
    "G": _decompose_G,
}


def decomposition(rs: RootSystemData, mu: AmbientVector) -> Decomposition:
    """Euclidean decomposition in Bourbaki coordinates, lattice-checked"""
    if rs.ordering != BOURBAKI:
        raise UnsupportedRootSystemError("the Euclidean decomposition works in Bourbaki coordinates")
    decomposer = _DECOMPOSERS.get(rs.type_tag)
    if decomposer is None:
        raise UnsupportedRootSystemError(f"no Euclidean decomposition for type {rs.type_tag}")
    result = decomposer(rs, mu)
    if not lattice_contains(rs, half_coroot_lattice(rs), result.tau):
        raise NotInOrbitError(f"translation part of {mu.to_strings()} is outside 1/2 Q^vee")
    if result.tau + result.v.apply(rs.rho) != mu:
        raise NotInOrbitError(f"{mu.to_strings()} does not reconstruct from its decomposition")
    return result


def decompose_mu(rs: RootSystemData, mu: AmbientVector) -> Tuple[AmbientVector, FiniteWeylElement]:
    """(tau, v) with mu = tau + v(rho), in the coordinates of rs"""
    rs_b, mu_b = _bourbaki(rs, mu)
    result = decomposition(rs_b, mu_b)
    if rs_b is rs:
        return result.tau, result.v
    tau = rs.to_reversed(result.tau)
    v = element_mapping(rs, rs.rho, rs.to_reversed(result.v.apply(rs_b.rho)))
    return tau, v


def typed_sign(rs: RootSystemData, mu: AmbientVector) -> int:
    rs_b, mu_b = _bourbaki(rs, mu)
    return decomposition(rs_b, mu_b).sign


def generic_sign(rs: RootSystemData, lam: AmbientVector) -> int:
    """(-1) ** sum_alpha floor(<lam + rho, alpha> / (c/2))"""
    mu = lam + rs.rho
    m = half_modulus(rs)
    total = sum(math.floor(dot_standard(mu, alpha) / m) for alpha in rs.positive_roots)
    return -1 if total % 2 else 1


def kostant_sign(rs: RootSystemData, lam: AmbientVector) -> int:
    if not is_in_palc(rs, lam):
        raise NotInPalcError(f"{lam.to_strings()} is not in P_alc for {rs.label}")
    return typed_sign(rs, lam + rs.rho)


def weyl_dim(rs: RootSystemData, lam: AmbientVector) -> int:
    _require_dominant(rs, lam)
    mu = lam + rs.rho
    value = Fraction(1)
    for alpha in rs.positive_roots:
        value *= dot_standard(mu, alpha) / dot_standard(rs.rho, alpha)
    if not is_integral(value):
        raise NormalizationError(f"Weyl dimension {value} of {lam.to_strings()} is not an integer")
    return int(value)


def _raw_exponent(rs: RootSystemData, lam: AmbientVector) -> Fraction:
    return dot_standard(lam + 2 * rs.rho, lam) / rs.normalization


def exponent(rs: RootSystemData, lam: AmbientVector) -> int:
    """(lam + 2 rho, lam) in the Killing normalization"""
    if not is_in_palc(rs, lam):
        raise NotInPalcError(f"{lam.to_strings()} is not in P_alc for {rs.label}")
    value = _raw_exponent(rs, lam)
    if not is_integral(value) or value < 0:
        raise NormalizationError(f"exponent {value} of {lam.to_strings()} is not a nonnegative integer")
    return int(value)


@dataclass(frozen=True)
class PalcRecord:
    lam: AmbientVector
    mu: AmbientVector
    tau: AmbientVector
    v: FiniteWeylElement
    sign: int
    exponent: int
    dim: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lambda": self.lam.to_strings(),
            "mu": self.mu.to_strings(),
            "tau": self.tau.to_strings(),
            "finite_part": list(self.v.images),
            "sign": self.sign,
            "exponent": self.exponent,
            "dim": self.dim,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "PalcRecord":
        return cls(
            lam=AmbientVector.from_strings(data["lambda"]),
            mu=AmbientVector.from_strings(data["mu"]),
            tau=AmbientVector.from_strings(data["tau"]),
            v=FiniteWeylElement(tuple(int(t) for t in data["finite_part"])),
            sign=int(data["sign"]),
            exponent=int(data["exponent"]),
            dim=int(data["dim"]),
        )


def palc_record(rs: RootSystemData, lam: AmbientVector) -> PalcRecord:
    if not is_in_palc(rs, lam):
        raise NotInPalcError(f"{lam.to_strings()} is not in P_alc for {rs.label}")
    if not lattice_contains(rs, LatticeId.root(), lam):
        raise NormalizationError(f"{lam.to_strings()} lies in P_alc but not in the root lattice")
    mu = lam + rs.rho
    tau, v = decompose_mu(rs, mu)
    return PalcRecord(
        lam=lam,
        mu=mu,
        tau=tau,
        v=v,
        sign=typed_sign(rs, mu),
        exponent=exponent(rs, lam),
        dim=weyl_dim(rs, lam),
    )


def enumerate_palc(rs: RootSystemData, max_exponent: int, progress: bool = False) -> List[PalcRecord]:
    """Every lam in P_alc with exponent <= max_exponent, ordered by exponent.

    The exponent grows strictly along each fundamental weight, so a depth-first
    scan over nondecreasing coefficient increments can stop at the bound.
    """
    if max_exponent < 0:
        raise ValueError(f"max_exponent must be nonnegative, got {max_exponent}")
    records = []
    stack: List[Tuple[Tuple[int, ...], int]] = [(tuple([0] * rs.rank), 0)]
    bar: Optional[tqdm] = tqdm(desc=f"P_alc {rs.label}", unit="weight") if progress else None
    visited = 0
    while stack:
        coefficients, start = stack.pop()
        lam = rs.weight_from_fundamental(coefficients)
        if _raw_exponent(rs, lam) > max_exponent:
            continue
        visited += 1
        if bar is not None:
            bar.update(1)
        if is_in_palc(rs, lam):
            records.append(palc_record(rs, lam))
        for j in range(start, rs.rank):
            child = list(coefficients)
            child[j] += 1
            stack.append((tuple(child), j))
    if bar is not None:
        bar.close()
    records.sort(key=lambda r: (r.exponent, r.lam.coords))
    logger.info(
        "%s: %d dominant weights scanned, %d in P_alc up to exponent %d",
        rs.label, visited, len(records), max_exponent,
    )
    return records


def kostant_series(rs: RootSystemData, degree: int, progress: bool = False) -> SeriesCoefficients:
    """sum over P_alc of sign * dim * x^exponent, truncated at `degree`"""
    coeffs = [0] * (degree + 1)
    for record in enumerate_palc(rs, degree, progress=progress):
        coeffs[record.exponent] += record.sign * record.dim
    return SeriesCoefficients(tuple(coeffs))


@dataclass(frozen=True)
class IdentityReport:
    label: str
    degree: int
    dimension: int
    euler: SeriesCoefficients
    kostant: SeriesCoefficients
    mismatch: Optional[int]

    @property
    def equal(self) -> bool:
        return self.mismatch is None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "root_system": self.label,
            "degree": self.degree,
            "dimension": self.dimension,
            "equal": self.equal,
            "euler": self.euler.to_list(),
            "kostant": self.kostant.to_list(),
        }
        if self.mismatch is not None:
            data["first_mismatch"] = {
                "degree": self.mismatch,
                "euler": self.euler[self.mismatch],
                "kostant": self.kostant[self.mismatch],
            }
        return data


def verify_identity(rs: RootSystemData, degree: int, progress: bool = False) -> IdentityReport:
    """Compare the Euler power of exponent dim g with Kostant's sum, coefficient by coefficient"""
    dimension = rs.lie_algebra_dimension
    left = euler_power(dimension, degree)
    right = kostant_series(rs, degree, progress=progress)
    mismatch = left.first_mismatch(right)
    if mismatch is None:
        logger.info("%s: identity holds to degree %d", rs.label, degree)
    else:
        logger.warning(
            "%s: coefficient of x^%d differs (%d vs %d)",
            rs.label, mismatch, left[mismatch], right[mismatch],
        )
    return IdentityReport(rs.label, degree, dimension, left, right, mismatch)
