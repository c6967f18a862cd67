"""Truncated Laurent series in q with exact rational coefficients, the
Eisenstein series E4 and E6 from their divisor-sum expansions, and the
nearly holomorphic form 1728 E4 / (E4^3 - E6^2) = 1/q + 264 + 8244 q +
139520 q^2 + ... whose Borcherds lift is the weight-132 cusp form.

Note: the divisor-sum formula gives E6 = 1 - 504 q - 16632 q^2 - ...
(-504 * sigma_5(2) = -16632); see the README for the known misprint in
one published display of this coefficient.
"""

from fractions import Fraction


class QSeries:
    """coeffs[k] is the coefficient of q^(e0 + k); truncation order N is
    the largest retained exponent."""

    __slots__ = ("e0", "coeffs", "N")

    def __init__(self, e0, coeffs, N):
        coeffs = list(coeffs)
        if e0 + len(coeffs) - 1 != N:
            raise ValueError("coefficient window does not end at the truncation order")
        # normalize the leading exponent
        while coeffs and not coeffs[0]:
            coeffs.pop(0)
            e0 += 1
        self.e0 = e0
        self.coeffs = coeffs
        self.N = N

    @classmethod
    def zero(cls, N):
        return cls(N + 1, [], N)

    @classmethod
    def one(cls, N):
        return cls(0, [1] + [0] * N, N)

    def is_zero(self):
        return not self.coeffs

    def __getitem__(self, e):
        """Coefficient of q^e; reading beyond the truncation is an error."""
        if e > self.N:
            raise IndexError("coefficient q^%d is beyond the truncation order %d" % (e, self.N))
        if e < self.e0:
            return 0
        return self.coeffs[e - self.e0]

    def truncate(self, N):
        if N > self.N:
            raise ValueError("cannot extend a truncated series")
        return QSeries(self.e0, self.coeffs[: max(0, N - self.e0 + 1)], N)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.N == other.N and self.e0 == other.e0 and [Fraction(c) for c in self.coeffs] == [Fraction(c) for c in other.coeffs]

    def __add__(self, other):
        N = min(self.N, other.N)
        e0 = min(self.e0 if self.coeffs else N + 1, other.e0 if other.coeffs else N + 1)
        if e0 > N:
            return QSeries.zero(N)
        out = [0] * (N - e0 + 1)
        for series in (self, other):
            for k, c in enumerate(series.coeffs):
                e = series.e0 + k
                if e <= N:
                    out[e - e0] += c
        return QSeries(e0, out, N)

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            if not other:
                return QSeries.zero(self.N)
            return QSeries(self.e0, [c * other for c in self.coeffs], self.N)
        # truncation: a term q^(e0_a + i) * q^(e0_b + j) is reliable only
        # while the partner sums are complete, i.e. up to min over the
        # windows
        N = min(self.N + other.e0, other.N + self.e0) if not (self.is_zero() or other.is_zero()) else min(self.N, other.N)
        if self.is_zero() or other.is_zero():
            return QSeries.zero(min(self.N, other.N))
        e0 = self.e0 + other.e0
        out = [0] * (N - e0 + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                e = e0 + i + j
                if e > N:
                    break
                if b:
                    out[i + j] += a * b
        return QSeries(e0, out, N)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("use reciprocal for negative powers")
        result = None
        for _ in range(k):
            result = self if result is None else result * self
        if result is None:
            return QSeries(0, [1] + [0] * self.N, self.N)
        return result

    def reciprocal(self):
        """1/f for f with nonzero leading coefficient; the result is
        truncated so that f * (1/f) = 1 holds up to its order."""
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of the zero series")
        c0 = self.coeffs[0]
        n = self.N - self.e0  # number of known terms past the leading one
        inv = [Fraction(1, 1) / c0]
        for k in range(1, n + 1):
            s = 0
            for j in range(1, min(k, len(self.coeffs) - 1) + 1):
                s += self.coeffs[j] * inv[k - j]
            inv.append(-s / c0)
        e0 = -self.e0
        return QSeries(e0, inv, e0 + n)

    def __truediv__(self, other):
        return self * other.reciprocal()

    def __repr__(self):
        return "QSeries(%s)" % self.to_str()

    def to_str(self, terms=6):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs[:terms]):
            if not c:
                continue
            e = self.e0 + k
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append("%s*q" % c)
            else:
                parts.append("%s*q^%d" % (c, e))
        return " + ".join(parts) + " + O(q^%d)" % (self.N + 1)


def sigma(n, k):
    """Divisor power sum sigma_k(n) by direct enumeration."""
    s = 0
    i = 1
    while i * i <= n:
        if n % i == 0:
            s += i ** k
            j = n // i
            if j != i:
                s += j ** k
        i += 1
    return s


def eisenstein(k, N):
    """E4 or E6 from the divisor-sum expansion: coefficient of q^n is
    240 sigma_3(n) resp. -504 sigma_5(n)."""
    if k == 4:
        c, power = 240, 3
    elif k == 6:
        c, power = -504, 5
    else:
        raise ValueError("only E4 and E6 are provided, got k=%d" % k)
    coeffs = [1] + [c * sigma(n, power) for n in range(1, N + 1)]
    return QSeries(0, coeffs, N)


def series_arithmetic(a, b, op):
    """Thin named dispatcher over the QSeries operators."""
    if op == "mul":
        return a * b
    if op == "pow":
        return a ** b
    if op == "reciprocal":
        return a.reciprocal()
    if op == "divide":
        return a / b
    raise ValueError("unknown series operation %r" % op)


def borcherds_input(N):
    """1728 E4 / (E4^3 - E6^2), a Laurent series with leading term 1/q,
    truncated at q^N."""
    if N < 0:
        raise ValueError("truncation order must be nonnegative")
    M = N + 2
    e4 = eisenstein(4, M)
    e6 = eisenstein(6, M)
    den = e4 ** 3 - e6 ** 2  # = 1728 q - 41472 q^2 + ...
    num = 1728 * e4
    out = num / den
    return out.truncate(N)
