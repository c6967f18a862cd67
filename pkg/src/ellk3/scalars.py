"""Exact coefficient domains: arbitrary-precision integers, normalized
rationals, and odd-prime residue fields.

Integers and ``fractions.Fraction`` are used as-is (the integers embed in
the rationals, so they may mix freely).  Mod-p residues are wrapped in
:class:`ModP`; mixing a residue with a rational, or residues of different
characteristic, is a :class:`DomainError` rather than a silent coercion.
"""

from fractions import Fraction


class DomainError(TypeError):
    """Raised when coefficient domains are mixed illegally."""


class InexactDivision(ArithmeticError):
    """Raised when an exact division leaves a remainder."""


class ModP:
    """Canonical residue in [0, p) for an odd prime p < 2**62."""

    __slots__ = ("p", "v")

    def __init__(self, v, p):
        if p < 3 or p % 2 == 0:
            raise ValueError("modulus must be an odd prime, got %r" % (p,))
        self.p = p
        self.v = v % p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise DomainError("mixing residues mod %d and mod %d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return ModP(other, self.p)
        raise DomainError("cannot mix %r with mod-%d residue" % (type(other).__name__, self.p))

    def __add__(self, other):
        other = self._coerce(other)
        return ModP(self.v + other.v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return ModP(self.v - other.v, self.p)

    def __rsub__(self, other):
        other = self._coerce(other)
        return ModP(other.v - self.v, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        return ModP(self.v * other.v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pow__(self, e):
        if e < 0:
            return ModP(pow(self.v, e, self.p), self.p)
        return ModP(pow(self.v, e, self.p), self.p)

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError("inverse of 0 mod %d" % self.p)
        return ModP(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return other * self.inverse()

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "ModP(%d, %d)" % (self.v, self.p)

    def __str__(self):
        return str(self.v)


def exact_scalar_div(a, b):
    """a / b in the common domain; exact or InexactDivision."""
    if isinstance(a, ModP) or isinstance(b, ModP):
        if isinstance(b, ModP):
            return b._coerce(a) * b.inverse()
        return a * a._coerce(b).inverse()  # pragma: no cover - b int handled above
    if isinstance(a, Fraction) or isinstance(b, Fraction):
        return Fraction(a) / Fraction(b)
    q, r = divmod(a, b)
    if r:
        raise InexactDivision("%r not divisible by %r" % (a, b))
    return q


def reduce_scalar_mod(c, p):
    """Image of an integer or rational under the reduction map to F_p."""
    if isinstance(c, ModP):
        if c.p != p:
            raise DomainError("residue already lives mod %d" % c.p)
        return c
    if isinstance(c, int):
        return ModP(c, p)
    if isinstance(c, Fraction):
        if c.denominator % p == 0:
            raise ZeroDivisionError("denominator of %s vanishes mod %d" % (c, p))
        return ModP(c.numerator, p) * ModP(c.denominator, p).inverse()
    raise DomainError("cannot reduce %r mod %d" % (type(c).__name__, p))


def scalar_to_str(c):
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return str(c.numerator)
        return "%d/%d" % (c.numerator, c.denominator)
    return str(c)


def scalar_from_str(s, p=None):
    s = s.strip()
    if "/" in s:
        num, den = s.split("/")
        c = Fraction(int(num), int(den))
    else:
        c = int(s)
    if p is not None:
        return reduce_scalar_mod(c, p)
    return c


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin, valid far beyond 2**64."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
