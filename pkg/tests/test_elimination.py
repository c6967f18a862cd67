import itertools
import random
from fractions import Fraction

import pytest

from ellk3.binforms import BinaryForm, binary_substitute
from ellk3.elimination import (
    CONVENTION_TAG,
    binary_gcd,
    det_bareiss,
    det_mod,
    discriminant_binary,
    exact_divide,
    factor_multiplicity,
    gcd_and_squarefree,
    resultant,
    squarefree_decomposition,
    sylvester_matrix,
)
from ellk3.multipoly import MultiPoly
from ellk3.scalars import InexactDivision, ModP


def rand_form(rng, n, bound=9):
    return BinaryForm(n, [rng.randint(-bound, bound) for _ in range(n + 1)])


def split_form(roots):
    # monic product of (x - r w) over the given roots
    f = BinaryForm(0, [1])
    for r in roots:
        f = f * BinaryForm(1, [1, -r])
    return f


def det_cofactor(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = rows[0][j] * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def test_convention_tag_frozen():
    assert CONVENTION_TAG == "sylv=f-rows-then-g-rows;disc=res(df/dx,df/dw)"


def test_sylvester_shape():
    rng = random.Random(0)
    f, g = rand_form(rng, 8), rand_form(rng, 12)
    m = sylvester_matrix(f, g)
    assert m.size == 20 and len(m.rows) == 20
    assert all(len(r) == 20 for r in m.rows)


def test_bareiss_matches_cofactor_expansion():
    rng = random.Random(1)
    for n in range(1, 7):
        for _ in range(6):
            rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            assert det_bareiss(rows) == det_cofactor(rows)
    # rational entries
    rows = [[Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(4)] for _ in range(4)]
    assert det_bareiss(rows) == det_cofactor(rows)


def test_det_mod_matches_exact():
    rng = random.Random(2)
    p = 10007
    for n in (3, 5, 8):
        rows = [[rng.randint(-50, 50) for _ in range(n)] for _ in range(n)]
        exact = det_bareiss(rows)
        assert det_mod(rows, p) == exact % p


def test_det_multivariate_entries():
    x = MultiPoly.variable("x", ("x",))
    rows = [[x, 1], [1, x]]
    assert det_bareiss(rows) == x * x - 1


def test_resultant_root_product():
    # monic split forms: Res(f, g) = prod (alpha_i - beta_j)
    rng = random.Random(3)
    for _ in range(15):
        alphas = [rng.randint(-6, 6) for _ in range(rng.randint(1, 4))]
        betas = [rng.randint(-6, 6) for _ in range(rng.randint(1, 4))]
        f, g = split_form(alphas), split_form(betas)
        expected = 1
        for a in alphas:
            for b in betas:
                expected *= a - b
        assert resultant(f, g) == expected


def test_resultant_swap_sign():
    rng = random.Random(4)
    for _ in range(15):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        f, g = rand_form(rng, m), rand_form(rng, n)
        assert resultant(f, g) == (-1) ** (m * n) * resultant(g, f)


def test_resultant_multiplicativity():
    rng = random.Random(5)
    for _ in range(10):
        f1, f2, g = rand_form(rng, 2), rand_form(rng, 3), rand_form(rng, 3)
        assert resultant(f1 * f2, g) == resultant(f1, g) * resultant(f2, g)


def test_resultant_coprime_powers():
    assert resultant(BinaryForm.monomial(8, 0), BinaryForm.monomial(12, 12)) == 1


def test_resultant_vanishes_iff_common_root():
    f = split_form([1, 2])
    g = split_form([2, 5])
    assert resultant(f, g) == 0
    assert resultant(split_form([1, 3]), g) != 0


def test_discriminant_cubic_scalar_frozen():
    # disc(x^3 + p x w^2 + q w^3) = 3 * (4 p^3 + 27 q^2) under this convention
    for p, q in [(2, 3), (1, 1), (-4, 5), (0, 1), (7, -2)]:
        f = BinaryForm(3, [1, 0, p, q])
        assert discriminant_binary(f) == 3 * (4 * p**3 + 27 * q**2)


def test_discriminant_vanishes_iff_repeated_root():
    assert discriminant_binary(split_form([1, 1, 2])) == 0
    assert discriminant_binary(split_form([0, 1, 2])) != 0


def test_discriminant_substitution_covariance():
    # disc(gamma . f) = det(gamma)^{n(n-1)} disc(f); check with SL2 (det 1)
    rng = random.Random(6)
    for _ in range(10):
        f = rand_form(rng, 4)
        mat = [[1, rng.randint(-3, 3)], [0, 1]]
        assert discriminant_binary(binary_substitute(f, mat)) == discriminant_binary(f)


def test_discriminant_scaling_weight():
    rng = random.Random(7)
    for n in (3, 4, 5):
        f = rand_form(rng, n)
        lam = 5
        assert discriminant_binary(lam * f) == lam ** (2 * (n - 1)) * discriminant_binary(f)


def test_exact_divide_and_inexact_error():
    # univariate dense lists, low-to-high
    f = [2, -1, 3]
    g = [1, 4]
    from ellk3.elimination import poly_mul

    assert exact_divide(poly_mul(f, g), g) == f
    with pytest.raises(InexactDivision):
        exact_divide([1, 1], [0, 1])
    with pytest.raises(InexactDivision):
        exact_divide(3, 2)


def test_binary_gcd():
    f = split_form([1, 2, 3])
    g = split_form([2, 3, 5])
    d = binary_gcd(f, g)
    assert d == split_form([2, 3])
    assert binary_gcd(split_form([1]), split_form([2])).n == 0
    # common power of w is part of the gcd
    w2 = BinaryForm.monomial(2, 2)
    assert binary_gcd(f * w2, g * w2 * BinaryForm.monomial(1, 1)) == split_form([2, 3]) * w2


def test_squarefree_decomposition_univariate():
    # (x-1)^2 (x-3) as dense low-to-high coefficients
    a = [-3, 7, -5, 1]
    parts = squarefree_decomposition(a)
    got = {m: tuple(f) for f, m in parts}
    assert got == {1: (-3, 1), 2: (-1, 1)}


def test_gcd_and_squarefree_structure():
    f = split_form([1, 1, 2]) * BinaryForm.monomial(2, 2)  # (x-w)^2 (x-2w) w^2
    unit, factors = gcd_and_squarefree(f)
    rebuilt = BinaryForm(0, [unit])
    for fac, mult in factors:
        rebuilt = rebuilt * fac**mult
    assert rebuilt == f
    mults = sorted(m for _, m in factors)
    assert mults == [1, 2, 2]


def test_factor_multiplicity():
    w = BinaryForm(1, [0, 1])
    x = BinaryForm(1, [1, 0])
    f = x**3 * w**2 * BinaryForm(1, [1, -5])
    assert factor_multiplicity(f, x) == 3
    assert factor_multiplicity(f, w) == 2
    assert factor_multiplicity(f, BinaryForm(1, [1, -7])) == 0


def test_resultant_sl2_invariance():
    rng = random.Random(9)
    for _ in range(8):
        f, g = rand_form(rng, 3, 4), rand_form(rng, 4, 4)
        s = rng.randint(-3, 3)
        mat = [[1, s], [0, 1]] if rng.random() < 0.5 else [[1, 0], [s, 1]]
        assert resultant(binary_substitute(f, mat), binary_substitute(g, mat)) == resultant(f, g)
