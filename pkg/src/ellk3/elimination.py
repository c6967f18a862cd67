"""Sylvester matrices, resultants, discriminants, gcds and exact division.

Determinants of integer or symbolic matrices use fraction-free Bareiss
elimination; residue-field matrices use plain Gaussian elimination.  The
row convention follows the displayed r96 matrix: for f of degree m and g
of degree n, the matrix carries n shifted rows of f's coefficients and
then m shifted rows of g's.
"""

from fractions import Fraction

from .binforms import BinaryForm
from .multipoly import MultiPoly
from .scalars import InexactDivision, ModP, exact_scalar_div

# sign/normalization conventions, fixed once and reported with Delta_264
# values so cross-implementation comparisons can reconcile scale
CONVENTION_TAG = "sylv=f-rows-then-g-rows;disc=res(df/dx,df/dw)"


class SylvesterMatrix:
    __slots__ = ("m", "n", "rows")

    def __init__(self, m, n, rows):
        self.m = m
        self.n = n
        self.rows = rows

    @property
    def size(self):
        return self.m + self.n


def sylvester_matrix(f, g):
    """(m+n) x (m+n) Sylvester matrix of f (degree m) and g (degree n):
    n shifted copies of f's coefficient row, then m shifted copies of g's."""
    m, n = f.n, g.n
    if m < 1 or n < 1:
        raise ValueError("Sylvester matrix needs degrees >= 1")
    size = m + n
    rows = []
    for k in range(n):
        rows.append([0] * k + list(f.coeffs) + [0] * (n - 1 - k))
    for k in range(m):
        rows.append([0] * k + list(g.coeffs) + [0] * (m - 1 - k))
    assert all(len(r) == size for r in rows)
    return SylvesterMatrix(m, n, rows)


# -- determinants ----------------------------------------------------


def det_bareiss(rows):
    """Fraction-free determinant; entries in any integral domain with
    exact division (int, Fraction, MultiPoly, ModP)."""
    n = len(rows)
    if n == 0:
        return 1
    M = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0 * M[0][0] if isinstance(M[0][0], (MultiPoly, ModP)) else 0
        pk = M[k][k]
        for i in range(k + 1, n):
            ri = M[i]
            rk = M[k]
            mik = ri[k]
            for j in range(k + 1, n):
                num = pk * ri[j] - mik * rk[j]
                ri[j] = num if prev == 1 else _exact_div(num, prev)
            ri[k] = 0
        prev = pk
    d = M[n - 1][n - 1]
    return d if sign == 1 else -d


def _exact_div(a, b):
    if isinstance(a, MultiPoly):
        return multipoly_exact_divide(a, b if isinstance(b, MultiPoly) else MultiPoly.constant(b, a.vars, a.weights))
    if isinstance(b, MultiPoly):
        if b.is_constant():
            return exact_scalar_div(a, b.constant_term())
        raise InexactDivision("scalar %r not divisible by %r" % (a, b))
    return exact_scalar_div(a, b)


def det_bareiss_int(rows):
    """Bareiss specialized to Python ints (no dispatch in the inner loop)."""
    n = len(rows)
    M = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = M[k][k]
        for i in range(k + 1, n):
            ri = M[i]
            rk = M[k]
            mik = ri[k]
            if mik:
                ri[k + 1:] = [(pk * a - mik * b) // prev for a, b in zip(ri[k + 1:], rk[k + 1:])]
            elif prev != 1 or pk != 1:
                ri[k + 1:] = [pk * a // prev for a in ri[k + 1:]]
        prev = pk
    return sign * M[n - 1][n - 1]


def det_mod(rows, p):
    """Determinant of an integer matrix mod p (Gaussian elimination)."""
    n = len(rows)
    M = [[a % p for a in r] for r in rows]
    det = 1
    for k in range(n):
        piv = None
        for i in range(k, n):
            if M[i][k]:
                piv = i
                break
        if piv is None:
            return 0
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            det = p - det if det else 0
        pk = M[k][k]
        det = det * pk % p
        inv = pow(pk, -1, p)
        row = [a * inv % p for a in M[k]]
        M[k] = row
        for i in range(k + 1, n):
            f = M[i][k]
            if f:
                M[i] = [(a - f * b) % p for a, b in zip(M[i], row)]
    return det


def _det_dispatch(rows):
    flat = [a for r in rows for a in r]
    mod = next((a for a in flat if isinstance(a, ModP)), None)
    if mod is not None:
        p = mod.p
        int_rows = [[a.v if isinstance(a, ModP) else int(a) for a in r] for r in rows]
        return ModP(det_mod(int_rows, p), p)
    if all(isinstance(a, int) for a in flat):
        return det_bareiss_int(rows)
    return det_bareiss(rows)


# -- resultants and discriminants -----------------------------------


def resultant(f, g):
    """Res(f, g) as the Sylvester determinant.  Zero forms give 0."""
    if f.is_zero() or g.is_zero():
        return 0
    return _det_dispatch(sylvester_matrix(f, g).rows)


def discriminant_binary(f):
    """disc(f) := Res(df/dx, df/dw); homogeneous of coefficient-degree
    2(n-1), vanishing iff f has a repeated root."""
    if f.n < 2:
        raise ValueError("discriminant needs degree >= 2")
    fx, fw = f.partials()
    return resultant(fx, fw)


# -- exact division --------------------------------------------------


def multipoly_exact_divide(f, g):
    """Quotient f/g when the division is exact; InexactDivision otherwise."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    f._compat(g)
    q = MultiPoly.zero(f.vars, f.weights)
    r = f
    glt_exp, glt_c = g.sorted_terms()[0]
    while r:
        rlt_exp, rlt_c = r.sorted_terms()[0]
        diff = tuple(a - b for a, b in zip(rlt_exp, glt_exp))
        if any(e < 0 for e in diff):
            raise InexactDivision("leading term %r not divisible" % (rlt_exp,))
        c = exact_scalar_div(rlt_c, glt_c)
        t = MultiPoly(f.vars, {diff: c}, f.weights)
        q = q + t
        r = r - t * g
    return q


def exact_divide(f, g):
    """Exact division for MultiPoly, scalars, or univariate coefficient
    lists (low-to-high)."""
    if isinstance(f, MultiPoly) or isinstance(g, MultiPoly):
        if not isinstance(f, MultiPoly):
            f = MultiPoly.constant(f, g.vars, g.weights)
        if not isinstance(g, MultiPoly):
            g = MultiPoly.constant(g, f.vars, f.weights)
        return multipoly_exact_divide(f, g)
    if isinstance(f, list) or isinstance(g, list):
        q, r = poly_divmod(f, g)
        if any(c for c in r):
            raise InexactDivision("univariate division leaves a nonzero remainder")
        return q
    return exact_scalar_div(f, g)


# -- univariate helpers (dense low-to-high lists) --------------------


def poly_trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return out


def poly_add(a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = out[i] + x
    for i, x in enumerate(b):
        out[i] = out[i] + x
    return poly_trim(out)


def poly_divmod(a, b):
    """Division over a field (Fraction or ModP coefficients; ints are
    promoted to Fraction)."""
    b = poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    a = poly_trim(list(a))
    if _all_int(a) and _all_int(b):
        a = [Fraction(c) for c in a]
        b = [Fraction(c) for c in b]
    db = len(b) - 1
    lb = b[-1]
    q = [0] * max(0, len(a) - db)
    r = list(a)
    while len(r) - 1 >= db and poly_trim(r):
        dr = len(r) - 1
        c = r[-1] / lb if not isinstance(r[-1], ModP) else r[-1] / lb
        q[dr - db] = c
        for i in range(db + 1):
            r[dr - db + i] = r[dr - db + i] - c * b[i]
        r.pop()
        poly_trim(r)
    return poly_trim(q), poly_trim(r)


def _all_int(a):
    return all(isinstance(c, int) for c in a)


def poly_content(a):
    from math import gcd

    g = 0
    for c in a:
        g = gcd(g, c if isinstance(c, int) else 0)
    return g or 1


def poly_primitive(a):
    """Primitive integer polynomial proportional to a (a over Q or Z),
    with positive leading coefficient."""
    a = poly_trim(list(a))
    if not a:
        return []
    if not _all_int(a):
        from math import lcm

        den = 1
        for c in a:
            den = lcm(den, Fraction(c).denominator)
        a = [int(Fraction(c) * den) for c in a]
    g = poly_content(a)
    a = [c // g for c in a]
    if a[-1] < 0:
        a = [-c for c in a]
    return a


def poly_gcd_subresultant(a, b):
    """gcd of integer univariate polynomials via the subresultant PRS
    (primitive-part/content splitting keeps coefficients small)."""
    a = poly_primitive(a)
    b = poly_primitive(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    g, h = 1, 1
    while True:
        d = len(a) - len(b)
        r = _prem(a, b)
        if not r:
            return poly_primitive(b)
        if len(r) == 1:
            return [1]
        divisor = g * h ** d
        a, b = b, [c // divisor for c in r]
        g = a[-1]
        if d == 1:
            h = g
        elif d > 1:
            h = g ** d // h ** (d - 1)


def _prem(a, b):
    """Pseudo-remainder: lc(b)^(da-db+1) * a mod b, over Z."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    da = len(a) - 1
    e = da - db + 1
    while len(a) - 1 >= db and poly_trim(a):
        da = len(a) - 1
        la = a[-1]
        a = [lb * c for c in a]
        for i in range(db + 1):
            a[da - db + i] -= la * b[i]
        a.pop()
        poly_trim(a)
        e -= 1
    if e > 0:
        a = [c * lb ** e for c in a]
    return poly_trim(a)


def poly_deriv(a):
    return poly_trim([i * c for i, c in enumerate(a)][1:])


def _gcd_monic_q(u, v):
    """Monic gcd over Q; gcd(u, 0) is monic u."""
    u = poly_trim(list(u))
    v = poly_trim(list(v))
    if not v:
        g = u
    elif not u:
        g = v
    else:
        g = poly_gcd_subresultant(poly_primitive(u), poly_primitive(v))
    lc = Fraction(g[-1])
    return [Fraction(c) / lc for c in g]


def squarefree_decomposition(a):
    """Yun's algorithm over Q: returns [(primitive integer factor,
    multiplicity)]; gcds go through the subresultant PRS."""
    a = poly_primitive(a)
    if len(a) <= 1:
        return []
    aq = [Fraction(c) for c in a]
    ap = poly_deriv(aq)
    g = _gcd_monic_q(aq, ap)
    if len(g) == 1:
        return [(a, 1)]
    w, _ = poly_divmod(aq, g)
    y, _ = poly_divmod(ap, g)
    out = []
    i = 1
    while len(w) > 1:
        z = poly_add(y, [-c for c in poly_deriv(w)])
        fac = _gcd_monic_q(w, z)
        if len(fac) > 1:
            out.append((poly_primitive(fac), i))
        w, _ = poly_divmod(w, fac)
        y, _ = poly_divmod(z, fac)
        i += 1
    return out


# -- gcd and factor bookkeeping for binary forms ---------------------


def binary_gcd(f, g):
    """Monic-primitive gcd over Q of two binary forms, including any common
    power of w (the infinity place)."""
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    pf, wf = f.dehomogenize()
    pg, wg = g.dehomogenize()
    d = poly_gcd_subresultant(poly_primitive(pf), poly_primitive(pg))
    wcom = min(wf, wg)
    return BinaryForm.homogenize(d, len(d) - 1 + wcom, wcom)


def gcd_and_squarefree(f):
    """Factor a nonzero binary form over Q:

        f = unit * w^e_inf * prod p_i(x, w)^(e_i)

    with p_i monic irreducible in the dehomogenized variable.  Returns
    (unit, [(BinaryForm factor, multiplicity)]); the place at infinity
    [1:0] appears as the factor w like any other.  Squarefree structure
    comes from Yun's algorithm; each squarefree part is split into
    irreducibles over Q.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero form")
    dense, winf = f.dehomogenize()
    factors = []
    if winf:
        factors.append((BinaryForm.homogenize([1], 1, 1), winf))
    prim = poly_primitive(dense)
    if len(prim) > 1:
        for part, mult in squarefree_decomposition(prim):
            for irr in _irreducible_split(part):
                k = len(irr) - 1
                lc = Fraction(irr[-1])
                monic = [Fraction(c) / lc for c in irr]
                factors.append((BinaryForm.homogenize(monic, k), mult))
    # monic factors absorb everything but the leading coefficient of f(x, 1)
    unit = Fraction(dense[-1])
    total = sum(form.n * mult for form, mult in factors)
    if total != f.n:
        raise AssertionError("factor degrees sum to %d, expected %d" % (total, f.n))
    return unit, factors


def _irreducible_split(prim):
    """Split a squarefree primitive integer polynomial into irreducible
    integer factors over Q (delegated to sympy's univariate factoriser)."""
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(prim)), x, domain="QQ")
    _, parts = poly.factor_list()
    out = []
    for fac, mult in parts:
        assert mult == 1, "input was squarefree"
        coeffs = [Fraction(c.p, c.q) for c in reversed(fac.all_coeffs())]
        out.append(poly_primitive(coeffs))
    return out


def factor_multiplicity(f, factor):
    """Multiplicity of an irreducible factor (a BinaryForm) in the form f;
    the zero form contains every factor infinitely often (returns None)."""
    if f.is_zero():
        return None
    dense, winf = f.dehomogenize()
    fd, fw = factor.dehomogenize()
    if fw:
        # the factor is w itself (times a unit)
        return winf
    mult = 0
    cur = [Fraction(c) for c in dense]
    fd = [Fraction(c) for c in fd]
    while True:
        q, r = poly_divmod(cur, fd)
        if r:
            return mult
        mult += 1
        cur = q
