import pytest

from src.algebra.series import (
    SeriesCoefficients,
    euler_power,
    euler_product,
    jacobi_cube_coefficients,
    multiply_truncated,
    power_truncated,
)


def test_euler_product_pentagonal_numbers():
    # 1 - x - x^2 + x^5 + x^7 - x^12 - x^15 + ...
    coeffs = euler_product(15).to_list()
    expected = [0] * 16
    for k, sign in [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1), (15, -1)]:
        expected[k] = sign
    assert coeffs == expected


def test_euler_cube():
    assert euler_power(3, 10).to_list() == [1, -3, 0, 5, 0, 0, -7, 0, 0, 0, 9]
    assert euler_power(3, 60) == jacobi_cube_coefficients(60)


@pytest.mark.parametrize("d", [0, 1, 2, 8, 14])
def test_powers_multiply(d):
    degree = 20
    left = euler_power(d + 1, degree).to_list()
    right = multiply_truncated(euler_power(d, degree).to_list(), euler_product(degree).to_list(), degree)
    assert left == right


def test_power_truncated():
    assert power_truncated([1, 1], 4, 6) == [1, 4, 6, 4, 1, 0, 0]
    assert power_truncated([1, 1], 4, 2) == [1, 4, 6]
    assert power_truncated([2], 0, 3) == [1, 0, 0, 0]
    with pytest.raises(ValueError):
        power_truncated([1], -1, 3)


def test_first_mismatch():
    a = SeriesCoefficients((1, 2, 3))
    assert a.first_mismatch(SeriesCoefficients((1, 2, 3))) is None
    assert a.first_mismatch(SeriesCoefficients((1, 0, 3))) == 1
    assert a.first_mismatch(SeriesCoefficients((1, 2))) == 2


def test_series_helpers():
    assert SeriesCoefficients.one(3).to_list() == [1, 0, 0, 0]
    assert SeriesCoefficients.zero(2).degree == 2
    assert jacobi_cube_coefficients(10).support() == [0, 1, 3, 6, 10]
    with pytest.raises(ValueError):
        SeriesCoefficients(())
    with pytest.raises(ValueError):
        euler_product(-1)


@pytest.mark.slow
def test_cube_is_supported_on_triangular_numbers():
    coeffs = euler_power(3, 200).to_list()
    expected = [0] * 201
    k = 0
    while k * (k + 1) // 2 <= 200:
        expected[k * (k + 1) // 2] = (-1) ** k * (2 * k + 1)
        k += 1
    assert coeffs == expected
    assert jacobi_cube_coefficients(200).to_list() == expected
