"""Affine Weyl groups acting on the ambient space.

An element is stored as a pair (tau, v) meaning x -> tau + v(x), with v a
finite Weyl element kept as a signed permutation of the canonical basis. All
hyperplane arithmetic uses the standard product and an integer modulus M, so
the reflecting hyperplanes are <x, alpha> = k M.
"""

import logging
import math
import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from tqdm import tqdm

from src.algebra.errors import (
    ContextError,
    LatticeViolationError,
    NonRegularPointError,
    NotInOrbitError,
    UnsupportedRootSystemError,
)
from src.algebra.geometry import (
    AmbientVector,
    LatticeId,
    dot_standard,
    integer_gcd,
    is_integral,
    lattice_contains,
    to_rational,
)
from src.algebra.root_data import REVERSED, RootSystemData, build

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


def permutation_sign(values: Sequence) -> int:
    """Sign of the rearrangement taking sorted(values) to values"""
    items = list(values)
    if len(set(items)) != len(items):
        raise ValueError(f"values are not distinct: {items}")
    inversions = 0
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                inversions += 1
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class FiniteWeylElement:
    """Signed permutation: images[i] = s (j + 1) means v(e_{i+1}) = s e_{j+1}.

    For G2 the table describes the action on the plane sum(x) = 0, where each
    reflection agrees with a signed permutation of uniform sign.
    """

    images: Tuple[int, ...]

    @classmethod
    def identity(cls, dim: int) -> "FiniteWeylElement":
        return cls(tuple(range(1, dim + 1)))

    @property
    def dim(self) -> int:
        return len(self.images)

    def is_identity(self) -> bool:
        return all(t == i + 1 for i, t in enumerate(self.images))

    def apply(self, x: AmbientVector) -> AmbientVector:
        if len(x) != self.dim:
            raise ValueError(f"expected a vector of R^{self.dim}, got R^{len(x)}")
        out = [Fraction(0)] * self.dim
        for i, target in enumerate(self.images):
            out[abs(target) - 1] += x[i] if target > 0 else -x[i]
        return AmbientVector(out)

    def compose(self, other: "FiniteWeylElement") -> "FiniteWeylElement":
        """self after other"""
        result = []
        for target in other.images:
            image = self.images[abs(target) - 1]
            result.append(image if target > 0 else -image)
        return FiniteWeylElement(tuple(result))

    def inverse(self) -> "FiniteWeylElement":
        result = [0] * self.dim
        for i, target in enumerate(self.images):
            result[abs(target) - 1] = (i + 1) if target > 0 else -(i + 1)
        return FiniteWeylElement(tuple(result))

    def length(self, rs: RootSystemData) -> int:
        """Number of positive roots sent to negative roots"""
        return sum(1 for alpha in rs.positive_roots if rs.is_positive_root(-self.apply(alpha)))

    def parity(self, rs: RootSystemData) -> int:
        return self.length(rs) % 2

    def one_line(self) -> str:
        return "[" + ", ".join(str(t) for t in self.images) + "]"

    def __str__(self) -> str:
        return self.one_line()


def _signed_index(rs: RootSystemData, image: AmbientVector) -> int:
    coords = list(image)
    if rs.type_tag == "G":
        # image = +-e_j + k (1,1,1); k is the value occurring at least twice
        shift = max(set(coords), key=coords.count)
        coords = [c - shift for c in coords]
    nonzero = [(j, c) for j, c in enumerate(coords) if c != 0]
    if len(nonzero) != 1 or abs(nonzero[0][1]) != 1:
        raise UnsupportedRootSystemError(
            f"{rs.label} reflection does not act on the basis by a signed permutation"
        )
    j, c = nonzero[0]
    return (j + 1) if c > 0 else -(j + 1)


def reflection(rs: RootSystemData, alpha: AmbientVector) -> FiniteWeylElement:
    """s_alpha as a signed permutation"""
    images = []
    for i in range(rs.ambient_dim):
        images.append(_signed_index(rs, rs.reflect(alpha, AmbientVector.basis(rs.ambient_dim, i))))
    return FiniteWeylElement(tuple(images))


def is_weyl_element(rs: RootSystemData, v: FiniteWeylElement) -> bool:
    """True when v permutes the roots"""
    if v.dim != rs.ambient_dim:
        return False
    return all(rs.is_root(v.apply(alpha)) for alpha in rs.positive_roots)


def element_mapping(rs: RootSystemData, source: AmbientVector, target: AmbientVector) -> FiniteWeylElement:
    """The v in W with v(source) = target.

    Type A elements are plain permutations and are matched on exact values, so
    source needs distinct coordinates. Other types are matched on absolute
    values, so source needs distinct absolute coordinates (at most one zero, as
    for rho in type D).
    """
    key = (lambda c: c) if rs.type_tag == "A" else abs
    keys = [key(c) for c in source]
    if len(set(keys)) != len(keys):
        raise ValueError("source coordinates are not distinct enough to determine v")
    images = [0] * rs.ambient_dim
    zero_index = None
    for i, s in enumerate(source):
        matches = [j for j, t in enumerate(target) if key(t) == key(s)]
        if len(matches) != 1:
            raise NotInOrbitError(f"{target.to_strings()} is not a W-image of {source.to_strings()}")
        j = matches[0]
        if s == 0:
            zero_index = i
            images[i] = j + 1
        else:
            images[i] = (j + 1) if target[j] == s else -(j + 1)
    if zero_index is not None and rs.type_tag == "D":
        negatives = sum(1 for t in images if t < 0)
        if negatives % 2:
            images[zero_index] = -images[zero_index]
    v = FiniteWeylElement(tuple(images))
    if not is_weyl_element(rs, v) or v.apply(source) != target:
        raise NotInOrbitError(f"{target.to_strings()} is not a W-image of {source.to_strings()}")
    return v


def finite_weyl_group(rs: RootSystemData) -> List[FiniteWeylElement]:
    """All elements of W, generated from the simple reflections"""
    simple = [reflection(rs, alpha) for alpha in rs.simple_roots]
    start = FiniteWeylElement.identity(rs.ambient_dim)
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for s in simple:
            u = s.compose(v)
            if u not in seen:
                seen.add(u)
                order.append(u)
                queue.append(u)
    return order


@dataclass(frozen=True)
class AffineElement:
    """t_tau v, acting by x -> tau + v(x)"""

    tau: AmbientVector
    v: FiniteWeylElement

    def __str__(self) -> str:
        return f"t_({', '.join(self.tau.to_strings())}) {self.v}"


@dataclass(frozen=True)
class AffineContext:
    """A root system with a standard modulus M, a regular base point in the
    fundamental alcove and the window period p of the translations M Q*."""

    rs: RootSystemData
    modulus: int
    base: AmbientVector
    period: int
    orbit_lattice: Optional[LatticeId] = None
    label: str = ""
    representation: Optional[str] = None

    @property
    def translation_lattice(self) -> LatticeId:
        return LatticeId.coroot_star(self.modulus)

    @property
    def rank(self) -> int:
        return self.rs.rank

    def __str__(self) -> str:
        return self.label or f"{self.rs.label} M={self.modulus}"


def translation_period(rs: RootSystemData, modulus: int) -> int:
    values = []
    for alpha in rs.simple_roots:
        values.extend((rs.coroot_star(alpha) * modulus).coords)
    if not all(is_integral(c) for c in values):
        raise ContextError(f"translations {modulus}Q* of {rs.label} are not integral")
    return integer_gcd(values)


def make_context(
    rs: RootSystemData,
    modulus,
    base: AmbientVector,
    orbit_lattice: Optional[LatticeId] = None,
    label: str = "",
    representation: Optional[str] = None,
) -> AffineContext:
    """Validate and build a context; the base must be regular and lie in the fundamental alcove"""
    m = to_rational(modulus)
    if not is_integral(m) or m <= 0:
        raise ContextError(f"standard modulus must be a positive integer, got {m}")
    m = int(m)
    if len(base) != rs.ambient_dim:
        raise ContextError(f"base point must lie in R^{rs.ambient_dim}")
    if any(dot_standard(base, alpha) % m == 0 for alpha in rs.positive_roots):
        raise ContextError(f"base point {base.to_strings()} is not {m}-regular")
    if any(dot_standard(base, alpha) <= 0 for alpha in rs.positive_roots) or dot_standard(base, rs.theta) >= m:
        raise ContextError(f"base point {base.to_strings()} is not in the fundamental alcove")
    ctx = AffineContext(
        rs=rs,
        modulus=m,
        base=base,
        period=translation_period(rs, m),
        orbit_lattice=orbit_lattice,
        label=label,
        representation=representation,
    )
    logger.debug("context %s: M=%s p=%s", ctx, ctx.modulus, ctx.period)
    return ctx


def kostant_context(rs: RootSystemData) -> AffineContext:
    """M = c/2 with base rho; the orbit of rho is the set of regular points of rho + P"""
    return make_context(
        rs,
        rs.normalization / 2,
        rs.rho,
        orbit_lattice=LatticeId.weight(),
        label=f"{rs.label} kostant",
    )


def permutation_context(type_tag: str, n: int) -> AffineContext:
    """Context of the permutation representation of size n.

    Type A uses A_{n-1} in R^n; B, C and D use rank n; G2 needs n = 2. Classical
    types use the reversed ordering with base (1, 2, ..., n).
    """
    type_tag = type_tag.upper()
    if type_tag == "G":
        if n != 2:
            raise UnsupportedRootSystemError(f"G2 has rank 2, got {n}")
        rs = build("G", 2)
        return make_context(rs, 24, rs.rho, label="G2 permutations", representation="G")
    if type_tag == "A":
        if n < 2:
            raise UnsupportedRootSystemError(f"type A windows need n >= 2, got {n}")
        rs = build("A", n - 1, REVERSED)
        modulus, lattice = n, LatticeId.weight()
    elif type_tag in ("B", "C", "D"):
        rs = build(type_tag, n, REVERSED)
        modulus, lattice = 2 * n + 1, LatticeId.coroot_star()
        if type_tag == "D":
            # the alcove holds several points of base + Q*, so regularity does not decide the orbit
            lattice = None
    else:
        raise UnsupportedRootSystemError(f"no permutation representation for type {type_tag!r}")
    base = AmbientVector(range(1, rs.ambient_dim + 1))
    return make_context(
        rs, modulus, base, orbit_lattice=lattice, label=f"{type_tag}{n} permutations", representation=type_tag
    )


def alt_permutation_context(n: int) -> AffineContext:
    """C_n with M = 2n+2, the representation fixing n+1"""
    rs = build("C", n, REVERSED)
    base = AmbientVector(range(1, n + 1))
    return make_context(
        rs, 2 * n + 2, base, orbit_lattice=LatticeId.coroot_star(),
        label=f"C{n} alternative permutations", representation="C-alt",
    )


def identity(ctx: AffineContext) -> AffineElement:
    return AffineElement(AmbientVector.zero(ctx.rs.ambient_dim), FiniteWeylElement.identity(ctx.rs.ambient_dim))


def act(ctx: AffineContext, w: AffineElement, x: AmbientVector) -> AmbientVector:
    return w.tau + w.v.apply(x)


def _check_translation(ctx: AffineContext, tau: AmbientVector) -> None:
    if not lattice_contains(ctx.rs, ctx.translation_lattice, tau):
        raise LatticeViolationError(
            f"translation {tau.to_strings()} is not in {ctx.translation_lattice} for {ctx.rs.label}"
        )


def compose(ctx: AffineContext, w: AffineElement, u: AffineElement) -> AffineElement:
    """w after u: (tau_w + v_w(tau_u), v_w v_u)"""
    tau = w.tau + w.v.apply(u.tau)
    _check_translation(ctx, tau)
    return AffineElement(tau, w.v.compose(u.v))


def inverse(ctx: AffineContext, w: AffineElement) -> AffineElement:
    v_inv = w.v.inverse()
    tau = -v_inv.apply(w.tau)
    _check_translation(ctx, tau)
    return AffineElement(tau, v_inv)


def translation(ctx: AffineContext, tau: AmbientVector) -> AffineElement:
    _check_translation(ctx, tau)
    return AffineElement(tau, FiniteWeylElement.identity(ctx.rs.ambient_dim))


def generators(ctx: AffineContext) -> List[AffineElement]:
    """[s_0, s_1, ..., s_n] with s_0 = t_{M theta*} s_theta"""
    rs = ctx.rs
    zero = AmbientVector.zero(rs.ambient_dim)
    s0 = AffineElement(rs.coroot_star(rs.theta) * ctx.modulus, reflection(rs, rs.theta))
    return [s0] + [AffineElement(zero, reflection(rs, alpha)) for alpha in rs.simple_roots]


def is_regular(ctx: AffineContext, x: AmbientVector) -> bool:
    return all(dot_standard(x, alpha) % ctx.modulus != 0 for alpha in ctx.rs.positive_roots)


def _require_regular(ctx: AffineContext, mu: AmbientVector) -> None:
    if not is_regular(ctx, mu):
        raise NonRegularPointError(f"{mu.to_strings()} lies on a hyperplane of {ctx}")


def alcove_form(ctx: AffineContext, mu: AmbientVector) -> Dict[AmbientVector, int]:
    """alpha -> floor(<mu, alpha> / M) over the positive roots"""
    _require_regular(ctx, mu)
    return {
        alpha: math.floor(dot_standard(mu, alpha) / ctx.modulus) for alpha in ctx.rs.positive_roots
    }


def length_from_point(ctx: AffineContext, mu: AmbientVector) -> int:
    return sum(abs(k) for k in alcove_form(ctx, mu).values())


def parity(ctx: AffineContext, w: AffineElement) -> int:
    """Length parity, read off the finite part"""
    return w.v.parity(ctx.rs)


def orbit_contains(ctx: AffineContext, lam: AmbientVector, lattice: LatticeId, mu: AmbientVector) -> bool:
    """mu in lam + L and mu regular; valid when (lam + L) meets the open alcove only in lam"""
    if not lattice_contains(ctx.rs, lattice, mu - lam):
        return False
    return is_regular(ctx, mu)


def _descent(ctx: AffineContext, mu: AmbientVector) -> Optional[int]:
    if dot_standard(mu, ctx.rs.theta) > ctx.modulus:
        return 0
    for i, alpha in enumerate(ctx.rs.simple_roots, start=1):
        if dot_standard(mu, alpha) < 0:
            return i
    return None


def reduced_word(ctx: AffineContext, mu: AmbientVector) -> Word:
    """Word (i_1, ..., i_k) with mu = s_{i_1} ... s_{i_k}(base), by descent toward the fundamental alcove"""
    _require_regular(ctx, mu)
    if ctx.orbit_lattice is not None and not orbit_contains(ctx, ctx.base, ctx.orbit_lattice, mu):
        raise NotInOrbitError(f"{mu.to_strings()} is not in the orbit of the base of {ctx}")
    gens = generators(ctx)
    bound = length_from_point(ctx, mu)
    word: List[int] = []
    point = mu
    while True:
        i = _descent(ctx, point)
        if i is None:
            break
        if len(word) >= bound:
            raise NotInOrbitError(f"descent from {mu.to_strings()} did not terminate")
        point = act(ctx, gens[i], point)
        word.append(i)
    if point != ctx.base:
        raise NotInOrbitError(
            f"descent from {mu.to_strings()} ends at {point.to_strings()}, not at the base"
        )
    return tuple(word)


def element_from_word(ctx: AffineContext, word: Iterable[int]) -> AffineElement:
    """s_{i_1} o s_{i_2} o ... o s_{i_k}"""
    gens = generators(ctx)
    element = identity(ctx)
    for i in word:
        if not 0 <= i < len(gens):
            raise ValueError(f"generator index {i} out of range 0..{len(gens) - 1}")
        element = compose(ctx, element, gens[i])
    return element


def element_from_point(ctx: AffineContext, mu: AmbientVector) -> AffineElement:
    """The unique w with w(base) = mu"""
    return element_from_word(ctx, reduced_word(ctx, mu))


def random_word(ctx: AffineContext, length: int, rng: random.Random) -> Word:
    """Random generator word without immediate repetitions"""
    word: List[int] = []
    n = ctx.rs.rank
    while len(word) < length:
        i = rng.randint(0, n)
        if word and word[-1] == i:
            continue
        word.append(i)
    return tuple(word)


def gallery(ctx: AffineContext, word: Sequence[int]) -> List[AmbientVector]:
    """Points s_{i_1}...s_{i_j}(base) for j = 0..k"""
    gens = generators(ctx)
    points = [ctx.base]
    element = identity(ctx)
    for i in word:
        element = compose(ctx, element, gens[i])
        points.append(act(ctx, element, ctx.base))
    return points


def hyperplane_crossings(ctx: AffineContext, x: AmbientVector, y: AmbientVector) -> Dict[AmbientVector, int]:
    """Per positive root, the number of hyperplanes <z, alpha> = k M strictly between x and y"""
    counts = {}
    for alpha in ctx.rs.positive_roots:
        a = dot_standard(x, alpha) / ctx.modulus
        b = dot_standard(y, alpha) / ctx.modulus
        lo, hi = min(a, b), max(a, b)
        counts[alpha] = max(0, math.ceil(hi) - math.floor(lo) - 1)
    return counts


def bfs_enumerate(
    ctx: AffineContext, max_len: int, progress: bool = False
) -> Dict[AmbientVector, Tuple[int, Word]]:
    """Orbit points within max_len generator steps, with BFS depth and one reduced word"""
    if max_len < 0:
        raise ValueError(f"max_len must be nonnegative, got {max_len}")
    gens = generators(ctx)
    found: Dict[AmbientVector, Tuple[int, Word]] = {ctx.base: (0, ())}
    frontier = [ctx.base]
    depths = range(1, max_len + 1)
    if progress:
        depths = tqdm(depths, desc=f"BFS {ctx}", unit="level")
    for depth in depths:
        next_frontier = []
        for point in frontier:
            word = found[point][1]
            for i, gen in enumerate(gens):
                image = act(ctx, gen, point)
                if image not in found:
                    found[image] = (depth, (i,) + word)
                    next_frontier.append(image)
        frontier = next_frontier
        if not frontier:
            break
    logger.info("BFS over %s reached %d points within length %d", ctx, len(found), max_len)
    return found
