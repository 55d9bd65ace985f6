"""Pairs of Albert elements and their binary cubic invariant.

A point x = (a, b) of V = J + J determines the binary cubic

    F_x(v1, v2) = det(a v1 + b v2)
               = det(a) v1^3 + 3D(a,a,b) v1^2 v2 + 3D(a,b,b) v1 v2^2 + det(b) v2^3,

whose discriminant delta(x) is a degree-12 form on V. Points with
delta(x) != 0 (equivalently: F_x has three distinct roots on the
projective line) are the semistable ones; every construction downstream
that divides by delta demands semistability. The reference semistable
point is w = (diag(1, -1, 0), diag(0, 1, -1)) with F_w = v1 v2 (v1 - v2)
and delta(w) = 1.
"""

from __future__ import annotations

from fractions import Fraction

from .albert import AlbertElem, det_j, diag_elem, trilinear_d


class VPoint:
    """A point of V = J + J."""

    __slots__ = ("a", "b")

    def __init__(self, a: AlbertElem, b: AlbertElem):
        self.a = a
        self.b = b

    def __eq__(self, other):
        if not isinstance(other, VPoint):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return "VPoint(%r, %r)" % (self.a, self.b)

    def scale(self, t) -> "VPoint":
        return VPoint(self.a.scale(t), self.b.scale(t))


class BinaryCubic:
    """c30 v1^3 + c21 v1^2 v2 + c12 v1 v2^2 + c03 v2^3."""

    __slots__ = ("c30", "c21", "c12", "c03")

    def __init__(self, c30, c21, c12, c03):
        self.c30 = Fraction(c30)
        self.c21 = Fraction(c21)
        self.c12 = Fraction(c12)
        self.c03 = Fraction(c03)

    def coeffs(self) -> tuple:
        return (self.c30, self.c21, self.c12, self.c03)

    def __eq__(self, other):
        if not isinstance(other, BinaryCubic):
            return NotImplemented
        return self.coeffs() == other.coeffs()

    def __hash__(self):
        return hash(self.coeffs())

    def __repr__(self):
        return "BinaryCubic(%s, %s, %s, %s)" % self.coeffs()

    def __str__(self):
        return "[%s, %s, %s, %s]" % self.coeffs()

    def evaluate(self, v1, v2) -> Fraction:
        v1 = Fraction(v1)
        v2 = Fraction(v2)
        return (
            self.c30 * v1**3
            + self.c21 * v1**2 * v2
            + self.c12 * v1 * v2**2
            + self.c03 * v2**3
        )

    def discriminant(self) -> Fraction:
        """Discriminant of the cubic a v^3 + b v^2 + c v + d:

        18abcd - 4 b^3 d + b^2 c^2 - 4 a c^3 - 27 a^2 d^2.

        Nonzero exactly when the three projective roots are distinct.
        """
        a, b, c, d = self.coeffs()
        return (
            18 * a * b * c * d
            - 4 * b**3 * d
            + b**2 * c**2
            - 4 * a * c**3
            - 27 * a**2 * d**2
        )


def cubic_of(x: VPoint) -> BinaryCubic:
    """The binary cubic v -> det(a v1 + b v2) of x = (a, b)."""
    a, b = x.a, x.b
    return BinaryCubic(
        det_j(a),
        3 * trilinear_d(a, a, b),
        3 * trilinear_d(a, b, b),
        det_j(b),
    )


def delta(x: VPoint) -> Fraction:
    """Degree-12 relative invariant: the discriminant of cubic_of(x)."""
    return cubic_of(x).discriminant()


def is_semistable(x: VPoint) -> bool:
    return delta(x) != 0


def w_point() -> VPoint:
    """The reference semistable point (diag(1,-1,0), diag(0,1,-1)); delta = 1."""
    return VPoint(diag_elem(1, -1, 0), diag_elem(0, 1, -1))
