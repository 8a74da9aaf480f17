import itertools

import pytest

from src.algebra.affine_weyl import bfs_enumerate, kostant_context
from src.algebra.errors import NotDominantError, NotInPalcError
from src.algebra.geometry import AmbientVector, dot_standard
from src.algebra.kostant import (
    PalcRecord,
    decompose_mu,
    decomposition,
    enumerate_palc,
    exponent,
    generic_sign,
    half_modulus,
    is_in_palc,
    is_in_palc_typed,
    kostant_series,
    kostant_sign,
    palc_record,
    typed_sign,
    verify_identity,
    weyl_dim,
)
from src.algebra.root_data import REVERSED, build
from src.algebra.series import euler_power, jacobi_cube_coefficients
from tests.conftest import RANK_AT_MOST_FOUR, label


def dominant_box(rs, bound):
    """Dominant weights sum a_i omega_i with 0 <= a_i <= bound"""
    for coefficients in itertools.product(range(bound + 1), repeat=rs.rank):
        yield rs.weight_from_fundamental(coefficients)


BOX = {"A": 5, "B": 4, "C": 4, "D": 3, "G": 6}


def test_half_modulus(root_system):
    assert 2 * half_modulus(root_system) == root_system.normalization


def test_closed_form_membership_agrees_with_regularity(root_system):
    for lam in dominant_box(root_system, BOX[root_system.type_tag]):
        assert is_in_palc_typed(root_system, lam) == is_in_palc(root_system, lam), lam


def test_typed_sign_agrees_with_generic_sign(root_system):
    for lam in dominant_box(root_system, BOX[root_system.type_tag]):
        if is_in_palc(root_system, lam):
            assert typed_sign(root_system, lam + root_system.rho) == generic_sign(root_system, lam), lam


def test_decomposition_reconstructs(root_system):
    for lam in dominant_box(root_system, 3):
        if not is_in_palc(root_system, lam):
            continue
        mu = lam + root_system.rho
        result = decomposition(root_system, mu)
        assert result.tau + result.v.apply(root_system.rho) == mu
        assert (-1) ** result.v.length(root_system) == result.sign


@pytest.mark.parametrize("type_tag,rank", [("A", 3), ("B", 3), ("C", 3), ("D", 4)])
def test_reversed_coordinates(type_tag, rank):
    rs = build(type_tag, rank, REVERSED)
    for lam in dominant_box(rs, 2):
        if not is_in_palc(rs, lam):
            continue
        mu = lam + rs.rho
        tau, v = decompose_mu(rs, mu)
        assert tau + v.apply(rs.rho) == mu
        assert is_in_palc_typed(rs, lam)
        assert typed_sign(rs, mu) == generic_sign(rs, lam)


def test_a1_terms():
    rs = build("A", 1)
    records = enumerate_palc(rs, 15)
    # lam = j alpha contributes (-1)^j (2j + 1) x^{j(j+1)/2}
    assert [(r.exponent, r.sign, r.dim) for r in records] == [
        (j * (j + 1) // 2, (-1) ** j, 2 * j + 1) for j in range(6)
    ]


def test_a2_first_terms():
    rs = build("A", 2)
    records = enumerate_palc(rs, 1)
    assert [(r.lam, r.sign, r.dim, r.exponent) for r in records] == [
        (AmbientVector([0, 0, 0]), 1, 1, 0),
        (AmbientVector([1, 0, -1]), -1, 8, 1),
    ]
    assert kostant_series(rs, 2).to_list() == [1, -8, 20]


def test_exponent_and_sign_errors():
    rs = build("A", 1)
    omega = AmbientVector(["1/2", "-1/2"])
    assert not is_in_palc(rs, omega)
    with pytest.raises(NotInPalcError):
        exponent(rs, omega)
    with pytest.raises(NotInPalcError):
        kostant_sign(rs, omega)
    with pytest.raises(NotInPalcError):
        palc_record(rs, omega)
    with pytest.raises(NotDominantError):
        is_in_palc(rs, -rs.rho)
    with pytest.raises(NotDominantError):
        weyl_dim(rs, AmbientVector([1, 0, 0]))


@pytest.mark.parametrize("type_tag,rank,lam,dim", [
    ("A", 2, [1, 0, -1], 8),
    ("B", 2, [1, 0], 5),
    ("C", 3, [1, 1, 0], 14),
    ("D", 4, [1, 1, 0, 0], 28),
    ("G", 2, [-1, -1, 2], 14),
    ("G", 2, [0, -1, 1], 7),
])
def test_weyl_dim(type_tag, rank, lam, dim):
    assert weyl_dim(build(type_tag, rank), AmbientVector(lam)) == dim


def test_record_serialization(root_system):
    for record in enumerate_palc(root_system, 4):
        data = record.to_dict()
        assert set(data) == {"lambda", "mu", "tau", "finite_part", "sign", "exponent", "dim"}
        assert PalcRecord.from_dict(data) == record


def test_records_are_sorted_and_unique(root_system):
    records = enumerate_palc(root_system, 8)
    keys = [(r.exponent, r.lam.coords) for r in records]
    assert keys == sorted(keys)
    assert len({r.lam for r in records}) == len(records)
    assert records[0].lam.is_zero() and records[0].sign == 1


def test_a1_is_the_jacobi_identity():
    assert kostant_series(build("A", 1), 100) == jacobi_cube_coefficients(100)


@pytest.mark.slow
def test_a1_matches_the_jacobi_identity_to_degree_200():
    assert kostant_series(build("A", 1), 200) == euler_power(3, 200)


@pytest.mark.parametrize("type_tag,rank,degree", [
    ("A", 2, 12),
    ("B", 2, 12),
    ("C", 3, 6),
    ("G", 2, 12),
    ("A", 3, 6),
])
def test_identity(type_tag, rank, degree):
    report = verify_identity(build(type_tag, rank), degree)
    assert report.equal, report.to_dict()
    assert report.kostant == euler_power(report.dimension, degree)


@pytest.mark.slow
@pytest.mark.parametrize("type_tag,rank,dimension,degree", [
    ("A", 1, 3, 100),
    ("A", 2, 8, 60),
    ("A", 3, 15, 40),
    ("C", 2, 10, 40),
    ("B", 3, 21, 30),
    ("C", 3, 21, 30),
    ("D", 4, 28, 30),
    ("G", 2, 14, 40),
])
def test_identity_at_full_degree(type_tag, rank, dimension, degree):
    report = verify_identity(build(type_tag, rank), degree)
    assert report.dimension == dimension
    assert report.equal, report.to_dict().get("first_mismatch")
    assert report.kostant == euler_power(dimension, degree)


def test_identity_report_payload():
    report = verify_identity(build("A", 1), 5)
    data = report.to_dict()
    assert data["equal"] is True
    assert "first_mismatch" not in data
    assert data["dimension"] == 3


def exponent_box(rs, bound):
    """Dominant weights with (lam + 2 rho, lam) <= bound in the Killing normalization"""
    stack = [(tuple([0] * rs.rank), 0)]
    while stack:
        coefficients, start = stack.pop()
        lam = rs.weight_from_fundamental(coefficients)
        if dot_standard(lam + 2 * rs.rho, lam) / rs.normalization > bound:
            continue
        yield lam
        for j in range(start, rs.rank):
            child = list(coefficients)
            child[j] += 1
            stack.append((tuple(child), j))


@pytest.mark.slow
@pytest.mark.parametrize("type_tag,rank", RANK_AT_MOST_FOUR, ids=[label(p) for p in RANK_AT_MOST_FOUR])
def test_membership_tests_agree_on_exponent_box(type_tag, rank):
    rs = build(type_tag, rank)
    scanned = 0
    for lam in exponent_box(rs, 20):
        scanned += 1
        assert is_in_palc_typed(rs, lam) == is_in_palc(rs, lam), lam
    assert scanned > rank


@pytest.mark.slow
@pytest.mark.parametrize("type_tag,rank", RANK_AT_MOST_FOUR, ids=[label(p) for p in RANK_AT_MOST_FOUR])
def test_signs_agree_with_bfs_length(type_tag, rank):
    rs = build(type_tag, rank)
    found = bfs_enumerate(kostant_context(rs), 12)
    records = enumerate_palc(rs, 20)
    reached = 0
    for record in records:
        assert record.sign == generic_sign(rs, record.lam), record.lam
        assert record.sign == typed_sign(rs, record.mu), record.lam
        if record.mu in found:
            reached += 1
            depth = found[record.mu][0]
            assert record.sign == (-1) ** depth, record.lam
    assert reached >= 1
