"""Weierstrass models z^2 = y^3 + g2(x,w) y + g3(x,w) of elliptic K3
surfaces: assembly of (g2, g3, h), Kodaira classification of singular
fibers from vanishing orders, and the at-worst-RDP membership flag.
"""

from dataclasses import dataclass
from fractions import Fraction

from .binforms import BinaryForm
from .elimination import factor_multiplicity, gcd_and_squarefree
from .scalars import ModP, reduce_scalar_mod, scalar_from_str, scalar_to_str

# order of vanishing of the zero form at any place
INFINITE_ORDER = 10 ** 9


@dataclass(frozen=True)
class SurfaceParams:
    """u = (9 octic coefficients, 13 duodecic coefficients)."""

    g2_coeffs: tuple
    g3_coeffs: tuple

    def __post_init__(self):
        if len(self.g2_coeffs) != 9:
            raise ValueError("g2 needs exactly 9 coefficients")
        if len(self.g3_coeffs) != 13:
            raise ValueError("g3 needs exactly 13 coefficients")

    @classmethod
    def make(cls, g2_coeffs, g3_coeffs):
        return cls(tuple(g2_coeffs), tuple(g3_coeffs))

    def reduce_mod(self, p):
        return SurfaceParams(
            tuple(reduce_scalar_mod(c, p) for c in self.g2_coeffs),
            tuple(reduce_scalar_mod(c, p) for c in self.g3_coeffs),
        )

    def to_json_dict(self):
        return {
            "g2": [scalar_to_str(c) for c in self.g2_coeffs],
            "g3": [scalar_to_str(c) for c in self.g3_coeffs],
        }

    @classmethod
    def from_json_dict(cls, d):
        if not isinstance(d, dict) or "g2" not in d or "g3" not in d:
            raise ValueError("surface parameters need 'g2' and 'g3' arrays")
        g2 = [scalar_from_str(str(c)) for c in d["g2"]]
        g3 = [scalar_from_str(str(c)) for c in d["g3"]]
        return cls.make(g2, g3)


def assemble(u):
    """(g2, g3, h) with h = 4 g2^3 + 27 g3^2, the discriminant of the
    Weierstrass cubic; h has degree 24 in (x, w) and may be the zero form."""
    g2 = BinaryForm(8, list(u.g2_coeffs))
    g3 = BinaryForm(12, list(u.g3_coeffs))
    h = 4 * (g2 ** 3) + 27 * (g3 ** 2)
    return g2, g3, h


def kodaira_type(m2, m3, d):
    """Kodaira tag from (ord g2, ord g3, ord h) at a place, following the
    standard minimal-Weierstrass table.  Triples matching no row raise
    ValueError (an arithmetic bug upstream, not a user error)."""
    if d == 0:
        return "I0"
    if m2 == 0 and m3 == 0:
        return "I%d" % d
    if m2 >= 4 and m3 >= 6:
        return "NON-MINIMAL"
    if m2 >= 1 and m3 == 1 and d == 2:
        return "II"
    if m2 == 1 and m3 >= 2 and d == 3:
        return "III"
    if m2 >= 2 and m3 == 2 and d == 4:
        return "IV"
    if m2 >= 2 and m3 >= 3 and d == 6:
        return "I0*"
    if m2 == 2 and m3 == 3 and d >= 7:
        return "I%d*" % (d - 6)
    if m2 >= 3 and m3 == 4 and d == 8:
        return "IV*"
    if m2 == 3 and m3 >= 5 and d == 9:
        return "III*"
    if m2 >= 4 and m3 == 5 and d == 10:
        return "II*"
    raise ValueError("inconsistent vanishing orders (m2, m3, d) = (%s, %s, %s)" % (m2, m3, d))


@dataclass
class PlaceRecord:
    place: BinaryForm
    residue_degree: int
    m2: int
    m3: int
    d: int
    kodaira: str

    def to_json_dict(self):
        return {
            "place": self.place.to_str(),
            "residue_degree": self.residue_degree,
            "m2": self.m2 if self.m2 < INFINITE_ORDER else "inf",
            "m3": self.m3 if self.m3 < INFINITE_ORDER else "inf",
            "d": self.d,
            "kodaira": self.kodaira,
        }


@dataclass
class FiberReport:
    places: list
    in_U: bool
    h_is_zero: bool
    euler_sum: int

    def to_json_dict(self):
        return {
            "places": [p.to_json_dict() for p in self.places],
            "in_U": self.in_U,
            "h_is_zero": self.h_is_zero,
            "euler_sum": self.euler_sum,
        }


def fiber_profile(u):
    """Classify every singular fiber of the model defined by u (over Q).

    Vanishing orders at a place come from the factorization of h over Q;
    the infinity place [1:0] is the factor w.  in_U is False iff some
    place has m2 >= 4 and m3 >= 6, or h vanishes identically.
    """
    g2, g3, h = assemble(u)
    if h.is_zero():
        return FiberReport([], False, True, 0)
    _, hfactors = gcd_and_squarefree(h)
    places = []
    in_U = True
    for factor, d in hfactors:
        m2 = factor_multiplicity(g2, factor)
        m3 = factor_multiplicity(g3, factor)
        if m2 is None:
            m2 = INFINITE_ORDER
        if m3 is None:
            m3 = INFINITE_ORDER
        tag = kodaira_type(m2, m3, d)
        if m2 >= 4 and m3 >= 6:
            in_U = False
        places.append(PlaceRecord(factor, factor.n, m2, m3, d, tag))
    places.sort(key=lambda r: (r.residue_degree, r.place.to_str()))
    euler_sum = sum(r.d * r.residue_degree for r in places)
    return FiberReport(places, in_U, False, euler_sum)


def degeneration_component(u, k552_value=None):
    """Locate u on the two-component degeneration divisor {k552 = 0}:

    * "A1-component": an I_n fiber with n >= 2 and g2, g3 nonzero there
      (two I_1 fibers collided; the surface gains an A_1 singularity);
    * "II-component": some place where both g2 and g3 vanish (type II
      fiber; equivalently r96 = 0);
    * "deeper": both or neither pattern, i.e. off the generic strata.
    """
    if k552_value is None:
        from .invariants import k552

        k552_value = k552(u).value
    if k552_value:
        raise ValueError("u is not on the divisor: k552(u) != 0")
    report = fiber_profile(u)
    # generic patterns on the two strata: an I_n (n >= 2) fiber where
    # neither g2 nor g3 vanishes, vs. a type II fiber where both do
    a1 = any(r.m2 == 0 and r.m3 == 0 and r.d >= 2 for r in report.places)
    ii = any(r.kodaira == "II" for r in report.places)
    if a1 and not ii:
        return "A1-component"
    if ii and not a1:
        return "II-component"
    return "deeper"
