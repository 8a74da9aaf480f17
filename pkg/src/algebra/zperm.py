"""Affine Weyl groups as permutations of Z.

A permutation is stored by its window: the values on a fixed set I of
representatives of Z/pZ, extended by (i + kp)^f = i^f + kp. Composition is a
right action, f then g: (f . g)(i) = g(f(i)). This makes w -> w_* a
homomorphism, but it is the opposite of the usual function-composition order.

Representative sets and periods, for size n:

    A      [1, n]          p = n        (A_{n-1} in R^n)
    B C D  [-n, n]         p = 2n + 1
    C-alt  [-n, n + 1]     p = 2n + 2
    G      [-3, 4]         p = 8
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from src.algebra.affine_weyl import (
    AffineContext,
    AffineElement,
    act,
    alt_permutation_context,
    element_from_point,
    permutation_context,
)
from src.algebra.errors import (
    ContextError,
    InvalidWindowError,
    MembershipError,
    UnsupportedRootSystemError,
)
from src.algebra.geometry import AmbientVector

logger = logging.getLogger(__name__)

KINDS = ("A", "B", "C", "D", "G", "C-alt")
G2_EPSILON = {1: -1, 2: -1, 3: 1}


def period_for(kind: str, n: int) -> int:
    if kind == "A":
        return n
    if kind in ("B", "C", "D"):
        return 2 * n + 1
    if kind == "C-alt":
        return 2 * n + 2
    if kind == "G":
        return 8
    raise UnsupportedRootSystemError(f"no permutation representation of kind {kind!r}")


def representatives(kind: str, n: int) -> List[int]:
    if kind == "A":
        return list(range(1, n + 1))
    if kind in ("B", "C", "D"):
        return list(range(-n, n + 1))
    if kind == "C-alt":
        return list(range(-n, n + 2))
    if kind == "G":
        return list(range(-3, 5))
    raise UnsupportedRootSystemError(f"no permutation representation of kind {kind!r}")


def _check_size(kind: str, n: int) -> None:
    minimum = {"A": 2, "B": 2, "C": 2, "D": 3, "C-alt": 2}
    if kind == "G" and n != 2:
        raise UnsupportedRootSystemError(f"G2 windows have size 2, got {n}")
    if kind in minimum and n < minimum[kind]:
        raise UnsupportedRootSystemError(f"{kind} windows need n >= {minimum[kind]}, got {n}")


@dataclass(frozen=True)
class PeriodicPermutation:
    """Window values listed in the order of representatives(kind, size)"""

    kind: str
    size: int
    window: Tuple[int, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UnsupportedRootSystemError(f"no permutation representation of kind {self.kind!r}")
        _check_size(self.kind, self.size)
        reps = representatives(self.kind, self.size)
        if len(self.window) != len(reps):
            raise InvalidWindowError(
                f"{self.kind}{self.size} windows have {len(reps)} values, got {len(self.window)}"
            )
        residues = {value % self.period for value in self.window}
        if len(residues) != self.period:
            raise InvalidWindowError(
                f"window {list(self.window)} does not hit every residue mod {self.period}"
            )

    @property
    def period(self) -> int:
        return period_for(self.kind, self.size)

    @property
    def representatives(self) -> List[int]:
        return representatives(self.kind, self.size)

    @property
    def lowest(self) -> int:
        return self.representatives[0]

    def value(self, i: int) -> int:
        """Window value at a representative"""
        return self.window[i - self.lowest]

    def as_dict(self) -> Dict[int, int]:
        return dict(zip(self.representatives, self.window))

    @classmethod
    def from_mapping(cls, kind: str, n: int, mapping: Dict[int, int]) -> "PeriodicPermutation":
        reps = representatives(kind, n)
        missing = [i for i in reps if i not in mapping]
        if missing:
            raise InvalidWindowError(f"window has no value for {missing}")
        extra = [i for i in mapping if i not in reps]
        if extra:
            raise InvalidWindowError(f"{extra} are not representatives for {kind}{n}")
        return cls(kind, n, tuple(mapping[i] for i in reps))

    def __str__(self) -> str:
        return format_window_inline(self)


def identity(kind: str, n: int) -> PeriodicPermutation:
    return PeriodicPermutation(kind, n, tuple(representatives(kind, n)))


def apply(f: PeriodicPermutation, z: int) -> int:
    """f(z) via (i + kp)^f = i^f + kp"""
    k = (z - f.lowest) // f.period
    return f.value(z - k * f.period) + k * f.period


def _same_group(f: PeriodicPermutation, g: PeriodicPermutation) -> None:
    if (f.kind, f.size) != (g.kind, g.size):
        raise ContextError(f"cannot combine {f.kind}{f.size} and {g.kind}{g.size} windows")


def compose(f: PeriodicPermutation, g: PeriodicPermutation) -> PeriodicPermutation:
    """f then g"""
    _same_group(f, g)
    return PeriodicPermutation(f.kind, f.size, tuple(apply(g, apply(f, i)) for i in f.representatives))


def inverse(f: PeriodicPermutation) -> PeriodicPermutation:
    p = f.period
    mapping = {}
    for i in f.representatives:
        y = f.value(i)
        k = (y - f.lowest) // p
        mapping[y - k * p] = i - k * p
    return PeriodicPermutation.from_mapping(f.kind, f.size, mapping)


def context_for(kind: str, n: int) -> AffineContext:
    if kind == "C-alt":
        return alt_permutation_context(n)
    return permutation_context(kind, n)


def star(ctx: AffineContext, w: AffineElement) -> PeriodicPermutation:
    """Window i -> <w(base), e_i>, with the epsilon twist for G2"""
    kind = ctx.representation
    if kind is None:
        raise ContextError(f"{ctx} carries no permutation representation")
    mu = act(ctx, w, ctx.base)
    if not mu.is_integral():
        raise ContextError(f"{mu.to_strings()} is not integral")
    n = ctx.rs.ambient_dim if kind == "A" else ctx.rs.rank
    mapping: Dict[int, int] = {}
    if kind == "G":
        mapping[0], mapping[4] = 0, 4
        for i in (1, 2, 3):
            value = G2_EPSILON[i] * int(mu[i - 1])
            mapping[i], mapping[-i] = value, -value
    else:
        for i in range(1, n + 1):
            mapping[i] = int(mu[i - 1])
            if kind != "A":
                mapping[-i] = -mapping[i]
        if kind != "A":
            mapping[0] = 0
        if kind == "C-alt":
            mapping[n + 1] = n + 1
    return PeriodicPermutation.from_mapping(kind, n, mapping)


def star_alt_C(n: int, w: AffineElement) -> PeriodicPermutation:
    """w -> w_** for C_n with modulus 2n+2, fixing n+1"""
    return star(alt_permutation_context(n), w)


@dataclass(frozen=True)
class MembershipVerdict:
    accepted: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.accepted


def _residue(value: int, kind: str, n: int) -> int:
    """Representative of value mod p inside the window range"""
    p = period_for(kind, n)
    lowest = representatives(kind, n)[0]
    return value - ((value - lowest) // p) * p


def _antisymmetric(f: PeriodicPermutation) -> bool:
    return all(apply(f, -i) == -apply(f, i) for i in f.representatives)


def _positive_values(f: PeriodicPermutation) -> List[int]:
    return [f.value(i) for i in range(1, f.size + 1)]


def _parity_condition(f: PeriodicPermutation) -> bool:
    n = f.size
    return (sum(_positive_values(f)) - n * (n + 1) // 2) % 2 == 0


def check_membership_B_alt(n: int, f: PeriodicPermutation, variant: str = "3") -> bool:
    """The third B_n condition in one of its equivalent forms: "3", "3'" or "3''" """
    if f.kind != "B" or f.size != n:
        raise ContextError(f"expected a B{n} window, got {f.kind}{f.size}")
    p = f.period
    if variant == "3":
        return _parity_condition(f)
    if variant == "3'":
        total = sum(v - _residue(v, "B", n) for v in _positive_values(f))
        return total % (2 * p) == 0
    if variant == "3''":
        # j <= n with j^f > n; each representative i contributes max(0, -floor((n - i^f)/p)) such j
        count = sum(max(0, -math.floor((n - f.value(i)) / p)) for i in f.representatives)
        return count % 2 == 0
    raise ValueError(f"unknown variant {variant!r}")


def _check_A(f: PeriodicPermutation) -> MembershipVerdict:
    n = f.size
    if sum(f.window) != n * (n + 1) // 2:
        return MembershipVerdict(False, f"condition (2): sum of i^f is {sum(f.window)}, expected {n * (n + 1) // 2}")
    return MembershipVerdict(True)


def _check_symmetric(f: PeriodicPermutation) -> Optional[MembershipVerdict]:
    if not _antisymmetric(f):
        return MembershipVerdict(False, "condition (1): (-z)^f != -z^f")
    return None


def _check_C(f: PeriodicPermutation) -> MembershipVerdict:
    failed = _check_symmetric(f)
    return failed if failed is not None else MembershipVerdict(True)


def _check_B(f: PeriodicPermutation) -> MembershipVerdict:
    failed = _check_symmetric(f)
    if failed is not None:
        return failed
    if not _parity_condition(f):
        return MembershipVerdict(False, "condition (3): sum of i^f has the wrong parity")
    return MembershipVerdict(True)


def _check_D(f: PeriodicPermutation) -> MembershipVerdict:
    verdict = _check_B(f)
    if not verdict:
        return verdict
    negatives = sum(1 for v in _positive_values(f) if _residue(v, "D", f.size) < 0)
    if negatives % 2:
        return MembershipVerdict(False, "condition (3): odd number of negative residues")
    return MembershipVerdict(True)


def _check_C_alt(f: PeriodicPermutation) -> MembershipVerdict:
    failed = _check_symmetric(f)
    if failed is not None:
        return failed
    if f.value(f.size + 1) != f.size + 1:
        return MembershipVerdict(False, f"{f.size + 1} is not fixed")
    return MembershipVerdict(True)


def _check_G(f: PeriodicPermutation) -> MembershipVerdict:
    failed = _check_symmetric(f)
    if failed is not None:
        return failed
    if f.value(4) != 4:
        return MembershipVerdict(False, "condition (2): 4Z is not fixed")
    a, b, c = f.value(1), f.value(2), f.value(3)
    if -a - b + c != 0:
        return MembershipVerdict(False, "condition (3): -1^f - 2^f + 3^f != 0")
    bars = {_residue(-a, "G", 2), _residue(-b, "G", 2), _residue(c, "G", 2)}
    if bars not in ({-1, -2, 3}, {1, 2, -3}):
        return MembershipVerdict(False, "condition (3): residues are not +-{-1, -2, 3}")
    shifts = [-(a - _residue(a, "G", 2)), -(b - _residue(b, "G", 2)), c - _residue(c, "G", 2)]
    if len({s % 3 for s in shifts}) != 1:
        return MembershipVerdict(False, "condition (3): translation parts differ mod 3")
    return MembershipVerdict(True)


_CHECKS = {
    "A": _check_A,
    "B": _check_B,
    "C": _check_C,
    "D": _check_D,
    "G": _check_G,
    "C-alt": _check_C_alt,
}


def check_membership(kind: str, n: int, f: PeriodicPermutation) -> MembershipVerdict:
    """Whether f is the image of an affine Weyl group element; the reason names the first failed condition"""
    if (f.kind, f.size) != (kind, n):
        return MembershipVerdict(False, f"window belongs to {f.kind}{f.size}, not {kind}{n}")
    return _CHECKS[kind](f)


def window_point(f: PeriodicPermutation) -> AmbientVector:
    """The ambient point w(base) encoded by the window"""
    if f.kind == "G":
        return AmbientVector(G2_EPSILON[i] * f.value(i) for i in (1, 2, 3))
    return AmbientVector(f.value(i) for i in range(1, f.size + 1))


def unstar(kind: str, n: int, f: PeriodicPermutation) -> AffineElement:
    """The element w with w_* = f"""
    verdict = check_membership(kind, n, f)
    if not verdict:
        raise MembershipError(f"window is not in the {kind}{n} group: {verdict.reason}")
    return element_from_point(context_for(kind, n), window_point(f))


def length_from_zperm_A(n: int, f: PeriodicPermutation) -> int:
    """sum_{i<j} |floor((j^f - i^f) / n)|"""
    verdict = check_membership("A", n, f)
    if not verdict:
        raise MembershipError(f"window is not in the A group of size {n}: {verdict.reason}")
    values = f.window
    return sum(
        abs(math.floor((values[j] - values[i]) / n))
        for i in range(n)
        for j in range(i + 1, n)
    )


def format_window(f: PeriodicPermutation) -> str:
    """Header "kind size period" then one "i -> i^f" line per representative"""
    lines = [f"{f.kind} {f.size} {f.period}"]
    lines.extend(f"{i} -> {f.value(i)}" for i in f.representatives)
    return "\n".join(lines) + "\n"


def format_window_inline(f: PeriodicPermutation) -> str:
    return ", ".join(f"{i} -> {f.value(i)}" for i in f.representatives)


def parse_window(text: str) -> PeriodicPermutation:
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if not lines:
        raise InvalidWindowError("empty window text")
    header = lines[0].split()
    if len(header) != 3:
        raise InvalidWindowError(f"malformed header {lines[0]!r}")
    kind = header[0]
    try:
        n, period = int(header[1]), int(header[2])
    except ValueError:
        raise InvalidWindowError(f"malformed header {lines[0]!r}")
    if kind not in KINDS:
        raise InvalidWindowError(f"unknown kind {kind!r}")
    if period != period_for(kind, n):
        raise InvalidWindowError(f"period {period} does not match {kind}{n}")
    mapping: Dict[int, int] = {}
    for line in lines[1:]:
        parts = line.split("->")
        if len(parts) != 2:
            raise InvalidWindowError(f"malformed window line {line!r}")
        try:
            i, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise InvalidWindowError(f"malformed window line {line!r}")
        if i in mapping:
            raise InvalidWindowError(f"representative {i} listed twice")
        mapping[i] = value
    return PeriodicPermutation.from_mapping(kind, n, mapping)
