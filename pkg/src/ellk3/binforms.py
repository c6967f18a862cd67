"""Homogeneous bivariate forms of declared degree in (x, w).

Coefficient entry i is the coefficient of x^(n-i) w^i; entries may be
exact scalars or MultiPoly values (e.g. the generic octic with symbolic
u-coefficients).  The zero form keeps its declared degree.
"""

from fractions import Fraction

from .multipoly import MultiPoly
from .scalars import reduce_scalar_mod, scalar_to_str


class BinaryForm:
    __slots__ = ("n", "coeffs")
    __hash__ = None

    def __init__(self, n, coeffs):
        coeffs = list(coeffs)
        if n < 0:
            raise ValueError("degree must be nonnegative")
        if len(coeffs) != n + 1:
            raise ValueError("degree-%d form needs %d coefficients, got %d" % (n, n + 1, len(coeffs)))
        self.n = n
        self.coeffs = coeffs

    @classmethod
    def zero(cls, n):
        return cls(n, [0] * (n + 1))

    @classmethod
    def monomial(cls, n, i, c=1):
        """c * x^(n-i) w^i."""
        coeffs = [0] * (n + 1)
        coeffs[i] = c
        return cls(n, coeffs)

    def is_zero(self):
        return all(not c for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.n == other.n and all(
            a == b or (not a and not b) for a, b in zip(self.coeffs, other.coeffs)
        )

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("cannot add forms of degrees %d and %d" % (self.n, other.n))
        return BinaryForm(self.n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if self.n != other.n:
            raise ValueError("cannot subtract forms of degrees %d and %d" % (self.n, other.n))
        return BinaryForm(self.n, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BinaryForm(self.n, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            out = [0] * (self.n + other.n + 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
            return BinaryForm(self.n + other.n, out)
        return BinaryForm(self.n, [c * other for c in self.coeffs])

    def __rmul__(self, other):
        return BinaryForm(self.n, [other * c for c in self.coeffs])

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a form")
        out = BinaryForm(0, [1])
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def scale_x(self, c):
        """f(c*x, w) -- coefficient i picks up c^(n-i)."""
        return BinaryForm(self.n, [a * c ** (self.n - i) for i, a in enumerate(self.coeffs)])

    def partials(self):
        """(df/dx, df/dw), both of degree n-1; Euler identity
        x f_x + w f_w = n f holds exactly."""
        if self.n < 1:
            raise ValueError("partials of a degree-0 form")
        n = self.n
        fx = [self.coeffs[i] * (n - i) for i in range(n)]
        fw = [self.coeffs[i + 1] * (i + 1) for i in range(n)]
        return BinaryForm(n - 1, fx), BinaryForm(n - 1, fw)

    def substitute(self, mat):
        """(gamma . f)(x, w) = f(a x + b w, c x + d w) for
        gamma = [[a, b], [c, d]].  Right action: (gamma delta) . f =
        gamma . (delta . f)."""
        (a, b), (c, d) = mat
        n = self.n
        # powers of the two linear forms as coefficient arrays
        pow1 = [[1]]
        pow2 = [[1]]
        for _ in range(n):
            pow1.append(_lin_mul(pow1[-1], a, b))
            pow2.append(_lin_mul(pow2[-1], c, d))
        out = [0] * (n + 1)
        for i, coeff in enumerate(self.coeffs):
            if not coeff:
                continue
            prod = _convolve(pow1[n - i], pow2[i])
            for j, t in enumerate(prod):
                if t:
                    out[j] = out[j] + coeff * t
        return BinaryForm(n, out)

    def evaluate(self, x0, w0):
        acc = 0
        for i, c in enumerate(self.coeffs):
            if c:
                acc = acc + c * x0 ** (self.n - i) * w0 ** i
        return acc

    def dehomogenize(self):
        """(P(x) = f(x, 1) as a low-to-high coefficient list, mult of w).

        The w-multiplicity is the order of vanishing at the infinity place
        [1:0]; for the zero form it is reported as None.
        """
        if self.is_zero():
            return [], None
        first = next(i for i, c in enumerate(self.coeffs) if c)
        # f = w^first * (c_first x^(n-first) + ... + c_n w^(n-first))
        dense = self.coeffs[first:]
        return list(reversed(dense)), first

    @classmethod
    def homogenize(cls, coeffs_low_to_high, n, wmult=0):
        """Inverse of dehomogenize: w^wmult * sum c_k x^k w^(n-wmult-k)."""
        d = len(coeffs_low_to_high) - 1
        if coeffs_low_to_high and not coeffs_low_to_high[-1]:
            raise ValueError("dense coefficient list has zero leading entry")
        if wmult + d != n:
            raise ValueError("dense degree %d plus w-multiplicity %d must equal %d" % (d, wmult, n))
        # term c_k x^k w^(n-wmult-d... ) * w^wmult; with d = n - wmult the
        # x-exponent of c_k is k, so it lands in entry n - k
        out = [0] * (n + 1)
        for k, c in enumerate(coeffs_low_to_high):
            out[n - k] = c
        return cls(n, out)

    def reduce_mod(self, p):
        return BinaryForm(self.n, [reduce_scalar_mod(c, p) if not isinstance(c, MultiPoly) else c.reduce_mod(p) for c in self.coeffs])

    def map_coeffs(self, fn):
        return BinaryForm(self.n, [fn(c) for c in self.coeffs])

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return "BinaryForm(%d, %s)" % (self.n, self.to_str())

    def to_str(self, xname="x", wname="w"):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            factors = []
            if isinstance(c, MultiPoly):
                factors.append("(%s)" % c.to_str())
            else:
                factors.append(scalar_to_str(c))
            if self.n - i == 1:
                factors.append(xname)
            elif self.n - i > 1:
                factors.append("%s^%d" % (xname, self.n - i))
            if i == 1:
                factors.append(wname)
            elif i > 1:
                factors.append("%s^%d" % (wname, i))
            parts.append(" * ".join(factors))
        return " + ".join(parts)


def _lin_mul(coeffs, a, b):
    """Multiply a binary-form coefficient array by the linear form a*x + b*w."""
    out = [0] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        if not c:
            continue
        if a:
            out[i] = out[i] + c * a
        if b:
            out[i + 1] = out[i + 1] + c * b
    return out


def _convolve(u, v):
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if not a:
            continue
        for j, b in enumerate(v):
            if b:
                out[i + j] = out[i + j] + a * b
    return out


def binary_substitute(f, mat):
    """Module-level alias for BinaryForm.substitute."""
    return f.substitute(mat)


def binary_partials(f):
    return f.partials()
