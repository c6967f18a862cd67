"""The SL2 x Gm action on the 22-dimensional parameter space and the three
weighted invariants: the resultant r96 of (g2, g3), the discriminant k552
of h, and their exact quotient Delta264 = k552 / r96^3.

k552 and Delta264 are never expanded symbolically in all 22 variables;
the degree and divisibility claims are certified by exact pointwise
integer factorization in bulk and by exact polynomial division on random
one-parameter slices.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .binforms import BinaryForm
from .elimination import CONVENTION_TAG, discriminant_binary, resultant
from .scalars import InexactDivision, ModP, exact_scalar_div, is_prime
from .weierstrass import SurfaceParams, assemble

DECLARED_WEIGHTS = {"r96": 96, "k552": 552, "delta264": 264}

# weights of the 22 ambient variables under the Gm-action
G2_WEIGHT = 4
G3_WEIGHT = 6


@dataclass(frozen=True)
class InvariantValue:
    name: str
    value: object
    declared_weight: int
    convention_tag: str = CONVENTION_TAG

    def __post_init__(self):
        if DECLARED_WEIGHTS[self.name] != self.declared_weight:
            raise ValueError("weight table violation for %s" % self.name)


# -- group actions ---------------------------------------------------


def sl2_act(gamma, u):
    """gamma . u via substitution on g2 and g3; requires det gamma = 1."""
    (a, b), (c, d) = gamma
    if a * d - b * c != 1:
        raise ValueError("matrix is not in SL2: det = %s" % (a * d - b * c,))
    g2 = BinaryForm(8, list(u.g2_coeffs)).substitute(gamma)
    g3 = BinaryForm(12, list(u.g3_coeffs)).substitute(gamma)
    return SurfaceParams.make(g2.coeffs, g3.coeffs)


def gm_act(lam, u):
    """Rescaling: g2-coefficients pick up lambda^4, g3's lambda^6."""
    if not lam:
        raise ValueError("lambda must be nonzero")
    l4 = lam ** G2_WEIGHT
    l6 = lam ** G3_WEIGHT
    return SurfaceParams.make(
        [c * l4 for c in u.g2_coeffs], [c * l6 for c in u.g3_coeffs]
    )


# -- invariants ------------------------------------------------------


def r96(u):
    """Resultant of (g2, g3): the 20 x 20 Sylvester determinant, weighted
    homogeneous of degree 12*4 + 8*6 = 96 and SL2-invariant."""
    g2, g3, _ = assemble(u)
    if g2.is_zero() or g3.is_zero():
        return InvariantValue("r96", 0, 96)
    return InvariantValue("r96", resultant(g2, g3), 96)


def k552(u):
    """Discriminant of the degree-24 form h, a 46 x 46 determinant;
    weighted homogeneous of degree 2*23*12 = 552, SL2-invariant, and zero
    iff h has a repeated root."""
    _, _, h = assemble(u)
    if h.is_zero():
        raise ValueError("degenerate family: h vanishes identically")
    return InvariantValue("k552", discriminant_binary(h), 552)


def delta264(u):
    """k552(u) / r96(u)^3, exact; weighted degree 552 - 3*96 = 264.

    Integer inputs divide exactly in Z (polynomial divisibility plus
    Gauss's lemma); inexactness is a hard error, as is r96(u) = 0.
    """
    r = r96(u).value
    if not r:
        raise ZeroDivisionError("delta264 undefined: r96(u) = 0")
    k = k552(u).value
    q = exact_scalar_div(k, r ** 3)
    return InvariantValue("delta264", q, 264)


def grading_constants():
    """The numerical grading data, recomputed from the weight table."""
    variable_weights = (G2_WEIGHT,) * 9 + (G3_WEIGHT,) * 13
    canonical_weight = -sum(variable_weights)
    relation_weight = DECLARED_WEIGHTS["k552"] - 3 * DECLARED_WEIGHTS["r96"]
    borcherds_weight = relation_weight // 2
    return {
        "canonical_weight": canonical_weight,
        "modular_dim": canonical_weight + borcherds_weight,
        "borcherds_weight": borcherds_weight,
        "relation_weight": relation_weight,
        "ambient_variable_count": len(variable_weights),
        "variable_weights": variable_weights,
    }


# -- slice divisibility ---------------------------------------------


@dataclass
class SliceWitness:
    success: bool
    quotient_degree: int
    k_degree: int
    r3_degree: int
    modulus: object
    quotient: list = field(repr=False, default_factory=list)


# plain degree bounds in u: r96 is a 20 x 20 determinant with entries
# linear in u, h-coefficients are cubic in u, k552 a 46 x 46 determinant
R96_U_DEGREE = 20
K552_U_DEGREE = 138


def _eval_on_line(u0, u1, s, p=None):
    g2 = [a + s * b for a, b in zip(u0.g2_coeffs, u1.g2_coeffs)]
    g3 = [a + s * b for a, b in zip(u0.g3_coeffs, u1.g3_coeffs)]
    u = SurfaceParams.make(g2, g3)
    if p is not None:
        u = u.reduce_mod(p)
    return u


def slice_divisibility(u0, u1, modulus=None):
    """Polynomial-level divisibility witness on the line u(s) = u0 + s u1:
    interpolates K(s) = k552(u(s)) and R3(s) = r96(u(s))^3 from evaluations
    and divides exactly (mod a prime when given, else over Q)."""
    if modulus is not None and not is_prime(modulus):
        raise ValueError("modulus must be prime")
    npts = K552_U_DEGREE + 1
    kvals, r3vals = [], []
    r_all_zero = True
    for s in range(npts):
        u = _eval_on_line(u0, u1, s, modulus)
        rv = r96(u).value
        rv = rv.v if isinstance(rv, ModP) else rv
        if rv:
            r_all_zero = False
        kv = k552(u).value
        kvals.append(kv.v if isinstance(kv, ModP) else kv)
        r3vals.append(rv ** 3 if modulus is None else pow(rv, 3, modulus))
    if r_all_zero:
        raise ValueError("r96 vanishes identically on this line")
    xs = list(range(npts))
    if modulus is not None:
        K = _interp_mod(xs, kvals, modulus)
        R3 = _interp_mod(xs[: 3 * R96_U_DEGREE + 1], r3vals[: 3 * R96_U_DEGREE + 1], modulus)
        q, rem = _poly_divmod_mod(K, R3, modulus)
        ok = not rem
    else:
        K = _interp_q(xs, kvals)
        R3 = _interp_q(xs[: 3 * R96_U_DEGREE + 1], r3vals[: 3 * R96_U_DEGREE + 1])
        from .elimination import poly_divmod

        q, rem = poly_divmod(K, R3)
        ok = not rem
    return SliceWitness(
        success=ok,
        quotient_degree=len(q) - 1 if q else -1,
        k_degree=len(K) - 1 if K else -1,
        r3_degree=len(R3) - 1 if R3 else -1,
        modulus=modulus,
        quotient=q,
    )


def _interp_mod(xs, ys, p):
    """Newton interpolation mod p; coefficients low-to-high."""
    n = len(xs)
    coeffs = [y % p for y in ys]
    # divided differences
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            inv = pow((xs[i] - xs[i - j]) % p, -1, p)
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) * inv % p
    # expand the Newton form
    poly = [0]
    for i in range(n - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coeffs[i]
        shifted = [0] + poly
        poly = [(b - xs[i] * a) % p for a, b in zip(poly + [0], shifted)]
        poly[0] = (poly[0] + coeffs[i]) % p
    while poly and not poly[-1]:
        poly.pop()
    return poly


def _interp_q(xs, ys):
    n = len(xs)
    coeffs = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)]
    for i in range(n - 1, -1, -1):
        shifted = [Fraction(0)] + poly
        poly = [b - xs[i] * a for a, b in zip(poly + [Fraction(0)], shifted)]
        poly[0] = poly[0] + coeffs[i]
    while poly and not poly[-1]:
        poly.pop()
    return poly


def _poly_divmod_mod(a, b, p):
    a = [c % p for c in a]
    b = [c % p for c in b]
    while b and not b[-1]:
        b.pop()
    if not b:
        raise ZeroDivisionError
    inv = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    r = list(a)
    while len(r) >= len(b):
        while r and not r[-1]:
            r.pop()
        if len(r) < len(b):
            break
        c = r[-1] * inv % p
        k = len(r) - len(b)
        q[k] = c
        for i in range(len(b)):
            r[k + i] = (r[k + i] - c * b[i]) % p
        r.pop()
    while r and not r[-1]:
        r.pop()
    return q, r


# -- reproducible verification harness -------------------------------


@dataclass(frozen=True)
class VerifyDefaults:
    pointwise_trials: int = 200
    homogeneity_trials: int = 50
    sl2_trials: int = 50
    slice_lines: int = 1
    entry_bound: int = 9
    homogeneity_prime: int = 4611686018427388039  # 62-bit


DEFAULTS = VerifyDefaults()


def random_surface(rng, bound=9):
    return SurfaceParams.make(
        [rng.randint(-bound, bound) for _ in range(9)],
        [rng.randint(-bound, bound) for _ in range(13)],
    )


def random_sl2(rng, entry_bound=3):
    """Random integer SL2 matrix with entries bounded in absolute value,
    built from elementary shears."""
    while True:
        m = ((1, 0), (0, 1))
        for _ in range(rng.randint(1, 4)):
            t = rng.randint(-2, 2)
            if rng.random() < 0.5:
                e = ((1, t), (0, 1))
            else:
                e = ((1, 0), (t, 1))
            m = _matmul(m, e)
        if max(abs(x) for row in m for x in row) <= entry_bound and m != ((1, 0), (0, 1)):
            return m


def _matmul(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def verify_bulk(seed, trials=None, modulus=None, defaults=DEFAULTS,
                k552_fn=k552, progress=None):
    """Run the bulk identity checks behind the divisibility and invariance
    claims; returns a deterministic report dict.  ``k552_fn`` is injectable
    so the harness's sensitivity can itself be tested."""
    rng = random.Random(seed)
    trials = defaults.pointwise_trials if trials is None else trials
    p = defaults.homogeneity_prime if modulus is None else modulus
    failures = []

    # (a) pointwise integer factorization k552 = r96^3 * delta264
    done = 0
    while done < trials:
        u = random_surface(rng, defaults.entry_bound)
        rv = r96(u).value
        if rv == 0:
            continue
        done += 1
        kv = k552_fn(u).value
        try:
            exact_scalar_div(kv, rv ** 3)
        except InexactDivision:
            failures.append(("pointwise", u.to_json_dict()))
        if progress:
            progress("pointwise", done)

    # (b) weighted homogeneity mod p
    for _ in range(defaults.homogeneity_trials):
        u = random_surface(rng, defaults.entry_bound)
        lam = rng.choice([2, 3, 5])
        up = u.reduce_mod(p)
        lamp = ModP(lam, p)
        if r96(gm_act(lamp, up)).value != lamp ** 96 * r96(up).value:
            failures.append(("homogeneity-r96", u.to_json_dict()))
        try:
            lhs = k552_fn(gm_act(lamp, up)).value
            rhs = lamp ** 552 * k552_fn(up).value
            if lhs != rhs:
                failures.append(("homogeneity-k552", u.to_json_dict()))
        except ValueError:
            pass

    # (c) SL2-invariance mod p (exactness of the mod-p check is enough to
    # kill any wrong implementation; the acceptance suite also runs it
    # over Z)
    for _ in range(defaults.sl2_trials):
        u = random_surface(rng, defaults.entry_bound)
        g = random_sl2(rng)
        up, vp = u.reduce_mod(p), sl2_act(g, u).reduce_mod(p)
        if r96(up).value != r96(vp).value:
            failures.append(("sl2-r96", u.to_json_dict()))
        if k552_fn(up).value != k552_fn(vp).value:
            failures.append(("sl2-k552", u.to_json_dict()))

    # (d) one slice division
    for _ in range(defaults.slice_lines):
        u0 = random_surface(rng, defaults.entry_bound)
        u1 = random_surface(rng, defaults.entry_bound)
        try:
            wit = slice_divisibility(u0, u1, modulus=p)
            if not wit.success:
                failures.append(("slice", {"u0": u0.to_json_dict(), "u1": u1.to_json_dict()}))
        except ValueError:
            failures.append(("slice-degenerate", {"u0": u0.to_json_dict(), "u1": u1.to_json_dict()}))

    return {
        "seed": seed,
        "trials": trials,
        "modulus": p,
        "convention_tag": CONVENTION_TAG,
        "failures": [list(f) for f in sorted(failures, key=repr)],
    }
