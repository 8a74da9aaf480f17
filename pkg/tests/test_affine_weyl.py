import random

import pytest

from src.algebra.affine_weyl import (
    AffineElement,
    FiniteWeylElement,
    act,
    alcove_form,
    alt_permutation_context,
    bfs_enumerate,
    compose,
    element_from_point,
    element_from_word,
    element_mapping,
    finite_weyl_group,
    gallery,
    generators,
    hyperplane_crossings,
    identity,
    inverse,
    is_regular,
    kostant_context,
    length_from_point,
    make_context,
    orbit_contains,
    parity,
    permutation_context,
    permutation_sign,
    random_word,
    reduced_word,
    reflection,
    translation,
)
from src.algebra.errors import (
    ContextError,
    LatticeViolationError,
    NonRegularPointError,
    NotInOrbitError,
)
from src.algebra.geometry import AmbientVector
from src.algebra.root_data import build


def contexts():
    return [
        kostant_context(build("A", 2)),
        kostant_context(build("B", 3)),
        kostant_context(build("C", 2)),
        kostant_context(build("D", 4)),
        kostant_context(build("G", 2)),
        permutation_context("A", 4),
        permutation_context("B", 3),
        permutation_context("C", 3),
        permutation_context("D", 4),
        permutation_context("G", 2),
        alt_permutation_context(3),
    ]


@pytest.fixture(params=contexts(), ids=str)
def ctx(request):
    return request.param


def test_permutation_sign():
    assert permutation_sign([1, 2, 3]) == 1
    assert permutation_sign([2, 1, 3]) == -1
    assert permutation_sign([3, 1, 2]) == 1
    with pytest.raises(ValueError):
        permutation_sign([1, 1])


@pytest.mark.parametrize("label,order", [("A2", 6), ("A3", 24), ("B2", 8), ("C3", 48), ("D4", 192), ("G2", 12)])
def test_finite_weyl_group_order(label, order):
    assert len(finite_weyl_group(build(label[0], int(label[1:])))) == order


def test_finite_lengths_and_inverses(root_system):
    group = finite_weyl_group(root_system)
    lengths = [v.length(root_system) for v in group]
    assert lengths.count(0) == 1
    assert max(lengths) == len(root_system.positive_roots)
    for v in group:
        assert v.compose(v.inverse()).is_identity()
        assert v.inverse().length(root_system) == v.length(root_system)


def test_simple_reflections_have_length_one(root_system):
    for alpha in root_system.simple_roots:
        s = reflection(root_system, alpha)
        assert s.length(root_system) == 1
        assert s.compose(s).is_identity()
        assert s.apply(alpha) == -alpha


def test_element_mapping_recovers_every_element(root_system):
    rho = root_system.rho
    for v in finite_weyl_group(root_system):
        assert element_mapping(root_system, rho, v.apply(rho)) == v


def test_element_mapping_rejects_points_outside_the_orbit():
    rs = build("B", 2)
    with pytest.raises(NotInOrbitError):
        element_mapping(rs, rs.rho, AmbientVector(["3/2", "3/2"]))


def test_generators_are_involutions(ctx):
    e = identity(ctx)
    for s in generators(ctx):
        assert compose(ctx, s, s) == e
        assert inverse(ctx, s) == s


def test_base_is_regular_and_fixed_by_nothing(ctx):
    assert is_regular(ctx, ctx.base)
    assert length_from_point(ctx, ctx.base) == 0
    assert reduced_word(ctx, ctx.base) == ()
    for s in generators(ctx):
        assert act(ctx, s, ctx.base) != ctx.base
        assert length_from_point(ctx, act(ctx, s, ctx.base)) == 1


@pytest.mark.parametrize("type_tag,n,expected", [
    ("A", 3, [0, 2, 4]),
    ("B", 2, [3, 4]),
    ("C", 2, [1, 3]),
    ("D", 3, [1, 4, 5]),
    ("G", 2, [-6, -7, 13]),
])
def test_affine_generator_on_base(type_tag, n, expected):
    ctx = permutation_context(type_tag, n)
    s0 = generators(ctx)[0]
    assert act(ctx, s0, ctx.base) == AmbientVector(expected)


def test_alternative_c_generator():
    ctx = alt_permutation_context(2)
    assert act(ctx, generators(ctx)[0], ctx.base) == AmbientVector([1, 4])


@pytest.mark.parametrize("type_tag,n,modulus,period", [
    ("A", 4, 4, 4),
    ("B", 3, 7, 7),
    ("C", 3, 7, 7),
    ("D", 4, 9, 9),
    ("G", 2, 24, 8),
])
def test_context_modulus_and_period(type_tag, n, modulus, period):
    ctx = permutation_context(type_tag, n)
    assert (ctx.modulus, ctx.period) == (modulus, period)


def test_kostant_modulus_is_half_normalization(root_system):
    ctx = kostant_context(root_system)
    assert 2 * ctx.modulus == root_system.normalization
    assert ctx.base == root_system.rho


def test_make_context_validates_base():
    rs = build("A", 2)
    with pytest.raises(ContextError):
        make_context(rs, 3, AmbientVector([0, 0, 0]))
    with pytest.raises(ContextError):
        make_context(rs, 2, rs.rho)
    with pytest.raises(ContextError):
        make_context(rs, "3/2", rs.rho)


def test_translations_stay_in_lattice():
    ctx = permutation_context("B", 2)
    assert act(ctx, translation(ctx, AmbientVector([10, 0])), ctx.base) == AmbientVector([11, 2])
    with pytest.raises(LatticeViolationError):
        translation(ctx, AmbientVector([5, 0]))


def test_word_round_trip(ctx, rng):
    for _ in range(25):
        word = random_word(ctx, rng.randint(0, 10), rng)
        w = element_from_word(ctx, word)
        mu = act(ctx, w, ctx.base)
        reduced = reduced_word(ctx, mu)
        assert len(reduced) == length_from_point(ctx, mu)
        assert len(reduced) <= len(word)
        assert (len(word) - len(reduced)) % 2 == 0
        assert element_from_word(ctx, reduced) == w
        assert element_from_point(ctx, mu) == w
        assert parity(ctx, w) == len(word) % 2


def test_random_word_has_no_repeats():
    ctx = kostant_context(build("C", 3))
    word = random_word(ctx, 200, random.Random(7))
    assert len(word) == 200
    assert all(a != b for a, b in zip(word, word[1:]))


def test_gallery_crosses_one_hyperplane_per_step(ctx, rng):
    word = reduced_word(ctx, act(ctx, element_from_word(ctx, random_word(ctx, 8, rng)), ctx.base))
    path = gallery(ctx, word)
    assert path[0] == ctx.base
    assert len(path) == len(word) + 1
    for x, y in zip(path, path[1:]):
        assert sum(hyperplane_crossings(ctx, x, y).values()) == 1


def test_alcove_form_requires_regular_point():
    ctx = kostant_context(build("A", 2))
    with pytest.raises(NonRegularPointError):
        alcove_form(ctx, AmbientVector([1, 1, -2]))
    with pytest.raises(NonRegularPointError):
        reduced_word(ctx, AmbientVector([3, 0, -3]))


def test_reduced_word_rejects_other_orbits():
    ctx = kostant_context(build("A", 2))
    # regular but not in rho + P
    with pytest.raises(NotInOrbitError):
        reduced_word(ctx, AmbientVector(["1/2", 0, "-1/2"]))


def test_bfs_matches_closed_form_length(ctx):
    found = bfs_enumerate(ctx, 4)
    assert found[ctx.base] == (0, ())
    for point, (depth, word) in found.items():
        assert length_from_point(ctx, point) == depth
        assert len(word) == depth
        assert act(ctx, element_from_word(ctx, word), ctx.base) == point
        if ctx.orbit_lattice is not None:
            assert orbit_contains(ctx, ctx.base, ctx.orbit_lattice, point)


def test_bfs_level_sizes_a1():
    # the orbit of rho for A1 is a line; each length has two points except 0
    ctx = kostant_context(build("A", 1))
    found = bfs_enumerate(ctx, 5)
    depths = sorted(depth for depth, _ in found.values())
    assert depths == [0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5]


def test_finite_element_apply_and_compose():
    v = FiniteWeylElement((2, -1))
    x = AmbientVector([1, 2])
    assert v.apply(x) == AmbientVector([-2, 1])
    assert v.compose(v).apply(x) == -x
    assert v.one_line() == "[2, -1]"


def test_g2_parity_on_the_finite_group():
    ctx = kostant_context(build("G", 2))
    zero = AmbientVector.zero(3)
    lengths = []
    for v in finite_weyl_group(ctx.rs):
        w = AffineElement(zero, v)
        length = length_from_point(ctx, act(ctx, w, ctx.base))
        assert length == v.length(ctx.rs)
        assert parity(ctx, w) == length % 2
        lengths.append(length)
    assert sorted(lengths) == [0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6]
