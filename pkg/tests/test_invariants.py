import random
from fractions import Fraction

import pytest

from ellk3.invariants import (
    DEFAULTS,
    InvariantValue,
    SliceWitness,
    VerifyDefaults,
    delta264,
    gm_act,
    grading_constants,
    k552,
    r96,
    random_sl2,
    random_surface,
    sl2_act,
    slice_divisibility,
    verify_bulk,
)
from ellk3.elimination import CONVENTION_TAG
from ellk3.weierstrass import SurfaceParams

# smallest interesting surface: g2 = x^8 + w^8, g3 = x^12 + w^12
BASE = SurfaceParams.make([1] + [0] * 7 + [1], [1] + [0] * 11 + [1])


def test_invariant_value_weight_table_enforced():
    v = r96(BASE)
    assert v.name == "r96" and v.declared_weight == 96
    assert v.convention_tag == CONVENTION_TAG
    with pytest.raises(ValueError):
        InvariantValue("r96", 1, 95)


def test_r96_zero_iff_common_root():
    # shared root at x = 0
    u = SurfaceParams.make([1] + [0] * 8, [1, 0] + [0] * 11)
    assert r96(u).value == 0
    assert r96(BASE).value != 0


def test_k552_zero_iff_repeated_h_root():
    rng = random.Random(0)
    u = random_surface(rng)
    assert k552(u).value != 0  # generic: 24 distinct roots
    # g2 = x w^7, g3 = x w^11: h = x^2 w^21 (4 x + 27 w) has repeated roots
    uII = SurfaceParams.make([0] * 7 + [1, 0], [0] * 11 + [1, 0])
    assert k552(uII).value == 0


def test_k552_errors_on_identically_zero_h():
    u = SurfaceParams.make([0] * 8 + [-3], [0] * 12 + [2])
    with pytest.raises(ValueError):
        k552(u)


def test_delta264_exact_integrality():
    rng = random.Random(1)
    for _ in range(10):
        u = random_surface(rng)
        r, k, d = r96(u).value, k552(u).value, delta264(u).value
        assert k == d * r**3
        assert isinstance(d, int)


def test_delta264_rational_inputs():
    u = SurfaceParams.make(
        [Fraction(1, 2)] + [0] * 7 + [1], [1] + [0] * 11 + [Fraction(1, 3)]
    )
    r, k, d = r96(u).value, k552(u).value, delta264(u).value
    assert k == d * r**3


def test_delta264_division_by_zero():
    u = SurfaceParams.make([1] + [0] * 8, [1, 0] + [0] * 11)  # r96 = 0
    with pytest.raises(ZeroDivisionError):
        delta264(u)


def test_weighted_homogeneity_exact():
    rng = random.Random(2)
    for _ in range(3):
        u = random_surface(rng, 4)
        lam = Fraction(rng.choice([2, 3, -2]), rng.choice([1, 3]))
        ul = gm_act(lam, u)
        assert r96(ul).value == lam**96 * r96(u).value
        assert k552(ul).value == lam**552 * k552(u).value
        assert delta264(ul).value == lam**264 * delta264(u).value


def test_sl2_invariance_exact():
    rng = random.Random(3)
    for _ in range(3):
        u = random_surface(rng, 4)
        g = random_sl2(rng)
        v = sl2_act(g, u)
        assert r96(v).value == r96(u).value
        assert k552(v).value == k552(u).value


def test_sl2_act_rejects_wrong_determinant():
    with pytest.raises(ValueError):
        sl2_act(((2, 0), (0, 1)), BASE)


def test_sl2_action_composition():
    rng = random.Random(4)
    from ellk3.invariants import _matmul

    u = random_surface(rng, 3)
    g1, g2m = random_sl2(rng), random_sl2(rng)
    assert sl2_act(g2m, sl2_act(g1, u)) == sl2_act(_matmul(g1, g2m), u)


def test_gm_act_rejects_zero():
    with pytest.raises(ValueError):
        gm_act(0, BASE)


def test_grading_constants():
    g = grading_constants()
    assert g["canonical_weight"] == -114
    assert g["relation_weight"] == 264
    assert g["borcherds_weight"] == 132
    assert g["modular_dim"] == 18
    assert g["ambient_variable_count"] == 22
    assert g["variable_weights"] == (4,) * 9 + (6,) * 13
    # internal consistency, not just frozen numbers
    assert g["canonical_weight"] == -sum(g["variable_weights"])
    assert g["modular_dim"] == g["canonical_weight"] + g["borcherds_weight"]
    assert g["relation_weight"] == 2 * g["borcherds_weight"]


def test_slice_divisibility_mod_p():
    rng = random.Random(5)
    u0, u1 = random_surface(rng), random_surface(rng)
    wit = slice_divisibility(u0, u1, modulus=DEFAULTS.homogeneity_prime)
    assert isinstance(wit, SliceWitness) and wit.success
    assert wit.r3_degree == 60
    assert wit.k_degree <= 138
    assert wit.quotient_degree == wit.k_degree - 60


def test_slice_divisibility_two_primes_agree():
    """The quotient's degree structure is modulus-independent; two different
    62-bit primes must tell the same story."""
    rng = random.Random(6)
    u0, u1 = random_surface(rng), random_surface(rng)
    p1 = DEFAULTS.homogeneity_prime
    p2 = 4611686018427387847  # previous 62-bit prime
    w1 = slice_divisibility(u0, u1, modulus=p1)
    w2 = slice_divisibility(u0, u1, modulus=p2)
    assert w1.success and w2.success
    assert (w1.k_degree, w1.quotient_degree) == (w2.k_degree, w2.quotient_degree)


def test_slice_divisibility_rejects_composite_modulus():
    rng = random.Random(7)
    u0, u1 = random_surface(rng), random_surface(rng)
    with pytest.raises(ValueError):
        slice_divisibility(u0, u1, modulus=91)


def test_verify_bulk_deterministic_and_clean():
    opts = VerifyDefaults(pointwise_trials=5, homogeneity_trials=3, sl2_trials=3,
                          slice_lines=0)
    rep1 = verify_bulk(seed=123, defaults=opts)
    rep2 = verify_bulk(seed=123, defaults=opts)
    assert rep1 == rep2
    assert rep1["failures"] == []
    assert rep1["seed"] == 123 and rep1["convention_tag"] == CONVENTION_TAG


def test_verify_bulk_catches_corrupted_invariant():
    """A deliberately wrong k552 must be flagged by the bulk checks."""

    def bad_k552(u):
        good = k552(u)
        return InvariantValue("k552", good.value + 1, 552)

    opts = VerifyDefaults(pointwise_trials=10, homogeneity_trials=0, sl2_trials=0,
                          slice_lines=0)
    rep = verify_bulk(seed=9, defaults=opts, k552_fn=bad_k552)
    assert rep["failures"] != []
    assert all(kind == "pointwise" for kind, _ in rep["failures"])
