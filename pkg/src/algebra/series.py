"""Truncated integer power series."""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeriesCoefficients:
    """Coefficients c_0..c_N of a power series truncated at degree N"""

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series has at least the constant coefficient")

    @classmethod
    def zero(cls, degree: int) -> "SeriesCoefficients":
        return cls(tuple([0] * (degree + 1)))

    @classmethod
    def one(cls, degree: int) -> "SeriesCoefficients":
        return cls(tuple([1] + [0] * degree))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, index: int) -> int:
        return self.coeffs[index]

    def __len__(self) -> int:
        return len(self.coeffs)

    def first_mismatch(self, other: "SeriesCoefficients") -> Optional[int]:
        """Lowest degree where the two series differ (None when equal)"""
        for k, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return k
        if len(self) != len(other):
            return min(len(self), len(other))
        return None

    def support(self) -> List[int]:
        return [k for k, c in enumerate(self.coeffs) if c != 0]

    def to_list(self) -> List[int]:
        return list(self.coeffs)


def multiply_truncated(a: Sequence[int], b: Sequence[int], degree: int) -> List[int]:
    """Schoolbook product of two coefficient lists, dropping degrees above `degree`"""
    out = [0] * (degree + 1)
    for i, x in enumerate(a[: degree + 1]):
        if x == 0:
            continue
        for j, y in enumerate(b[: degree + 1 - i]):
            if y:
                out[i + j] += x * y
    return out


def power_truncated(base: Sequence[int], exponent: int, degree: int) -> List[int]:
    """base ** exponent mod x^(degree+1) by repeated squaring"""
    if exponent < 0:
        raise ValueError(f"exponent must be nonnegative, got {exponent}")
    result = [1] + [0] * degree
    square = list(base[: degree + 1]) + [0] * max(0, degree + 1 - len(base))
    while exponent:
        if exponent & 1:
            result = multiply_truncated(result, square, degree)
        exponent >>= 1
        if exponent:
            square = multiply_truncated(square, square, degree)
    return result


def euler_product(degree: int) -> SeriesCoefficients:
    """prod_{m=1}^{degree} (1 - x^m) truncated at `degree`"""
    if degree < 0:
        raise ValueError(f"degree must be nonnegative, got {degree}")
    coeffs = [1] + [0] * degree
    for m in range(1, degree + 1):
        # multiply in place by (1 - x^m), high degrees first
        for k in range(degree, m - 1, -1):
            coeffs[k] -= coeffs[k - m]
    return SeriesCoefficients(tuple(coeffs))


def euler_power(d: int, degree: int) -> SeriesCoefficients:
    """(prod (1 - x^m))^d truncated at `degree`"""
    if d < 0:
        raise ValueError(f"power must be nonnegative, got {d}")
    coeffs = power_truncated(euler_product(degree).coeffs, d, degree)
    logger.debug("euler power %d computed to degree %d", d, degree)
    return SeriesCoefficients(tuple(coeffs))


def jacobi_cube_coefficients(degree: int) -> SeriesCoefficients:
    """sum_k (-1)^k (2k+1) x^{k(k+1)/2}, the closed form of the cube of the Euler product"""
    coeffs = [0] * (degree + 1)
    k = 0
    while k * (k + 1) // 2 <= degree:
        coeffs[k * (k + 1) // 2] = (-1) ** k * (2 * k + 1)
        k += 1
    return SeriesCoefficients(tuple(coeffs))
