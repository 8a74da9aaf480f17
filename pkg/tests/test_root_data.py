from fractions import Fraction

import pytest

from src.algebra.errors import UnsupportedRootSystemError
from src.algebra.geometry import AmbientVector, dot_standard
from src.algebra.root_data import (
    REVERSED,
    all_builds,
    bar_map_A,
    build,
    supported,
    unique_weight_interval,
)

# (type, rank) -> (positive roots, dual Coxeter number, c = <theta,theta> h^vee)
TABLES = {
    ("A", 1): (1, 2, 4),
    ("A", 3): (6, 4, 8),
    ("B", 2): (4, 3, 6),
    ("B", 4): (16, 7, 14),
    ("C", 3): (9, 4, 16),
    ("D", 4): (12, 6, 12),
    ("D", 5): (20, 8, 16),
    ("G", 2): (6, 4, 24),
}


@pytest.mark.parametrize("key", sorted(TABLES), ids=lambda k: f"{k[0]}{k[1]}")
def test_tables(key):
    rs = build(*key)
    positive, h_vee, c = TABLES[key]
    assert len(rs.positive_roots) == positive
    assert rs.dual_coxeter == h_vee
    assert rs.normalization == c


@pytest.mark.parametrize("label,dimension", [("A2", 8), ("B2", 10), ("G2", 14), ("D4", 28), ("C3", 21)])
def test_lie_algebra_dimension(label, dimension):
    assert build(label[0], int(label[1:])).lie_algebra_dimension == dimension


def test_rho_is_sum_of_fundamental_weights(root_system):
    assert root_system.weight_from_fundamental([1] * root_system.rank) == root_system.rho
    for omega, alpha in zip(root_system.fundamental_weights, root_system.simple_roots):
        assert dot_standard(omega, root_system.coroot_star(alpha)) == 1


def test_simple_roots_are_positive_and_theta_is_highest(root_system):
    for alpha in root_system.simple_roots:
        assert root_system.is_positive_root(alpha)
        assert root_system.is_root(-alpha)
        assert not root_system.is_positive_root(-alpha)
    assert root_system.is_dominant(root_system.theta)
    assert root_system.is_dominant(root_system.rho)
    assert not root_system.is_dominant(-root_system.rho)


def test_g2_data():
    rs = build("G", 2)
    assert rs.rho == AmbientVector([-1, -2, 3])
    assert rs.theta == AmbientVector([-1, -1, 2])
    assert rs.marks == (1, 2)
    assert rs.cartan_matrix() == [[2, -1], [-3, 2]]


def test_reversed_ordering():
    rs = build("B", 2, REVERSED)
    assert rs.simple_roots == (AmbientVector([1, 0]), AmbientVector([-1, 1]))
    assert rs.rho == AmbientVector(["1/2", "3/2"])
    assert rs.to_bourbaki(rs.rho) == build("B", 2).rho
    assert rs.normalization == build("B", 2).normalization


@pytest.mark.parametrize("type_tag,rank,ordering", [
    ("E", 6, "bourbaki"),
    ("D", 2, "bourbaki"),
    ("G", 3, "bourbaki"),
    ("G", 2, REVERSED),
    ("A", 2, "sideways"),
])
def test_unsupported(type_tag, rank, ordering):
    with pytest.raises(UnsupportedRootSystemError):
        build(type_tag, rank, ordering)


def test_supported():
    assert supported("c", 2)
    assert not supported("B", 1)


def test_bar_map():
    rs = build("A", 2)
    assert bar_map_A(rs, AmbientVector([1, 0, -1])) == AmbientVector([2, 1, 0])
    with pytest.raises(UnsupportedRootSystemError):
        bar_map_A(build("B", 2), AmbientVector([1, 0]))


def test_weight_interval_a1():
    interval = unique_weight_interval(build("A", 1))
    assert (interval.lower, interval.upper) == (Fraction(1, 4), Fraction(1, 2))
    assert interval.contains("1/2")
    assert not interval.contains("1/4")
    assert interval.integer_moduli() == [2]


def test_half_normalization_is_admissible():
    for rs in all_builds(4).values():
        interval = unique_weight_interval(rs)
        assert interval.contains_modulus(rs.normalization / 2)
        assert int(rs.normalization / 2) in interval.integer_moduli()


def test_admissible_moduli_for_c():
    assert unique_weight_interval(build("C", 3)).integer_moduli() == [7, 8]


POSITIVE_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "G": lambda n: 6,
}


UP_TO_RANK_EIGHT = all_builds(8)


@pytest.mark.parametrize("label", sorted(UP_TO_RANK_EIGHT))
def test_roots_are_closed_under_simple_reflections(label):
    rs = UP_TO_RANK_EIGHT[label]
    assert len(rs.positive_roots) == POSITIVE_COUNTS[rs.type_tag](rs.rank)
    assert len(set(rs.roots)) == 2 * len(rs.positive_roots)
    for alpha in rs.simple_roots:
        for beta in rs.roots:
            assert rs.is_root(rs.reflect(alpha, beta)), (alpha, beta)
