import random
from fractions import Fraction

import pytest

from ellk3.qseries import QSeries, borcherds_input, eisenstein, series_arithmetic, sigma

# 1728 E4 / (E4^3 - E6^2) = q^-1 + 264 + 8244 q + 139520 q^2 + ... (frozen)
BORCHERDS_HEAD = [1, 264, 8244, 139520, 1672290, 15872256]


def test_sigma_divisor_sums():
    assert [sigma(n, 1) for n in range(1, 7)] == [1, 3, 4, 7, 6, 12]
    assert sigma(6, 3) == 1 + 8 + 27 + 216
    assert sigma(12, 5) == sum(d**5 for d in (1, 2, 3, 4, 6, 12))


def test_eisenstein_heads():
    e4 = eisenstein(4, 4)
    assert [e4[k] for k in range(5)] == [1, 240, 2160, 6720, 17520]
    e6 = eisenstein(6, 4)
    assert [e6[k] for k in range(5)] == [1, -504, -16632, -122976, -532728]


def test_eisenstein_rejects_other_weights():
    with pytest.raises(ValueError):
        eisenstein(8, 4)


def test_qseries_indexing_and_truncation_guard():
    f = QSeries(-1, [1, 2, 3], 1)
    assert f[-1] == 1 and f[0] == 2 and f[1] == 3
    assert f[-5] == 0  # below the window: genuinely zero
    with pytest.raises(IndexError):
        f[2]  # beyond the truncation: unknown, not zero


def test_leading_zero_normalization():
    f = QSeries(-2, [0, 0, 5, 7], 1)
    assert f.e0 == 0 and f.coeffs == [5, 7]


def test_window_consistency_enforced():
    with pytest.raises(ValueError):
        QSeries(0, [1, 2], 5)


def test_arithmetic_mod_high_terms():
    # (1 + q)(1 - q) = 1 - q^2
    one_p = QSeries(0, [1, 1] + [0] * 9, 10)
    one_m = QSeries(0, [1, -1] + [0] * 9, 10)
    prod = one_p * one_m
    assert [prod[k] for k in range(4)] == [1, 0, -1, 0]


def test_multiplication_truncation_is_conservative():
    # a Laurent factor shrinks the reliable window: the q^N coefficient of
    # the product would need the unknown q^(N+1) term of the other factor
    f = QSeries(-1, [1] + [0] * 5, 4)
    g = QSeries(0, [1] * 5, 4)
    assert (f * g).N == 3


def test_reciprocal_roundtrip():
    rng = random.Random(0)
    coeffs = [1] + [rng.randint(-9, 9) for _ in range(10)]
    f = QSeries(0, coeffs, 10)
    prod = f * f.reciprocal()
    assert prod.e0 == 0 and prod.coeffs[0] == 1
    assert all(c == 0 for c in prod.coeffs[1:])


def test_reciprocal_of_laurent_leader():
    f = QSeries(-1, [1, 2, 3], 1)
    g = f.reciprocal()
    assert g.e0 == 1
    prod = f * g
    assert prod[0] == 1


def test_zero_reciprocal_raises():
    with pytest.raises(ZeroDivisionError):
        QSeries.zero(5).reciprocal()


def test_pow_matches_repeated_mul():
    f = QSeries(0, [1, 1, 0, 2, 0, 0], 5)
    assert f**3 == f * f * f
    assert f**0 == QSeries.one(5)
    with pytest.raises(ValueError):
        f ** (-1)


def test_series_arithmetic_dispatch():
    f = QSeries(0, [1, 1, 1], 2)
    assert series_arithmetic(f, f, "mul") == f * f
    assert series_arithmetic(f, 2, "pow") == f * f
    assert series_arithmetic(f, None, "reciprocal") == f.reciprocal()
    with pytest.raises(ValueError):
        series_arithmetic(f, f, "compose")


def test_borcherds_input_head_frozen():
    b = borcherds_input(4)
    assert b.e0 == -1
    assert [b[k] for k in range(-1, 5)] == BORCHERDS_HEAD
    assert all(Fraction(c).denominator == 1 for c in b.coeffs)


def test_borcherds_input_truncation_consistency():
    assert borcherds_input(2) == borcherds_input(10).truncate(2)


def test_borcherds_input_satisfies_defining_equation():
    N = 12
    b = borcherds_input(N)
    e4 = eisenstein(4, N + 2)
    e6 = eisenstein(6, N + 2)
    lhs = b * (e4**3 - e6**2)
    rhs = 1728 * e4
    upto = lhs.N
    assert all(lhs[k] == rhs[k] for k in range(0, upto + 1))
