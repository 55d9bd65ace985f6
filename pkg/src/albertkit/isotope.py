"""Isotopes of J indexed by elements a with det(a) != 0.

Two routes to the same product, built from the degree-6 trilinear form

    t_form(a; X, Y, Z) = 27 D(a,a,X) D(a,a,Y) D(a,a,Z)
                         - 24 det(a) D(a x X, a x Y, a x Z)

and the bilinear form

    q_a(a; X, Y) = -6 det(a) D(X, Y, a) + 9 D(X, a, a) D(Y, a, a):

 * circ_a_springer: det(a)^{-4} phi_a(X, Y), where
       phi_a = 4 det(a)^3 (X x a) x (Y x a)
               + (det(a)^2 q_a(X, Y) - q_a(X, a) q_a(Y, a)) / 2 * a
 * circ_a_tform: the unique U with
       q_a(U, Z) = det(a)^{-1} t_form(a; X, Y, Z)  for every Z,
   found by one exact 27x27 solve against the Gram matrix of q_a.

Both give the Jordan product at a = e, and they agree everywhere they
are defined (asserted exactly in tests). pairing_a = det(a)^{-2} q_a is
the matching trace form.
"""

from __future__ import annotations

from fractions import Fraction

from .albert import (
    AlbertElem,
    basis_crosses,
    cross,
    det_j,
    pair,
    pair_vec,
    trilinear_d,
)
from .errors import SingularPoint
from .linalg import solve_exact
from .octonion import oct_q, trace_prod3

Rat = Fraction


def t_form(a: AlbertElem, X: AlbertElem, Y: AlbertElem, Z: AlbertElem) -> Fraction:
    """Trilinear, symmetric, degree 6 in a; t_form(e; X, Y, Z) = Tr((X o Y) o Z)."""
    daa_x = trilinear_d(a, a, X)
    daa_y = trilinear_d(a, a, Y)
    daa_z = trilinear_d(a, a, Z)
    head = 27 * daa_x * daa_y * daa_z
    tail = 24 * det_j(a) * trilinear_d(cross(a, X), cross(a, Y), cross(a, Z))
    return head - tail


def te_expansion(X: AlbertElem, Y: AlbertElem, Z: AlbertElem) -> Fraction:
    """Explicit expansion of t_form at a = e:

    sum_i s_i t_i u_i + (1/2) sum over slot assignments of tr(x_i y_j z_k)
    + (1/2) sum_{i != j} [s_i tr(y_j conj(z_j)) + t_i tr(x_j conj(z_j))
                          + u_i tr(x_j conj(y_j))].

    The three-factor traces multiply in slot order (slot-1 factor first),
    the reading under which the sum is symmetric in (X, Y, Z) and agrees
    with the trace term of det. Kept separate from t_form as a
    cross-check target.
    """
    s, t, u = X.s, Y.s, Z.s
    x, y, z = X.x, Y.x, Z.x
    acc = s[0] * t[0] * u[0] + s[1] * t[1] * u[1] + s[2] * t[2] * u[2]
    tr_sum = Fraction(0)
    for A, B, C in ((x, y, z), (y, x, z), (y, z, x), (x, z, y), (z, x, y), (z, y, x)):
        tr_sum += trace_prod3(A[0], B[1], C[2])
    acc += tr_sum / 2
    ts, tt, tu = sum(s), sum(t), sum(u)
    for j in range(3):
        # (1/2) tr(p conj(q)) = Q(p, q)
        acc += (ts - s[j]) * oct_q(y[j], z[j])
        acc += (tt - t[j]) * oct_q(x[j], z[j])
        acc += (tu - u[j]) * oct_q(x[j], y[j])
    return acc


def q_a(a: AlbertElem, X: AlbertElem, Y: AlbertElem) -> Fraction:
    """-6 det(a) D(X, Y, a) + 9 D(X, a, a) D(Y, a, a); nondegenerate for det(a) != 0."""
    return -6 * det_j(a) * trilinear_d(X, Y, a) + 9 * trilinear_d(X, a, a) * trilinear_d(Y, a, a)


def gram_qa(a: AlbertElem) -> tuple:
    """27x27 Gram matrix of q_a over jbasis.

    Uses pair(b_i x b_j, a) = 3 D(b_i, b_j, a) against the precomputed
    basis crosses, so the whole table costs O(27^2) pairings instead of
    27^2 polarized determinants.
    """
    det_a = det_j(a)
    crosses = basis_crosses()
    # D(b_i, a, a) via the same duality: pair(a x a, b_i) = 3 D(a, a, b_i)
    third = Fraction(1, 3)
    dvec = [third * v for v in pair_vec(cross(a, a))]
    gram = []
    for i in range(27):
        row = []
        ci = crosses[i]
        for j in range(27):
            dij = third * pair(ci[j], a)
            row.append(-6 * det_a * dij + 9 * dvec[i] * dvec[j])
        gram.append(tuple(row))
    return tuple(gram)


def phi_a(a: AlbertElem, X: AlbertElem, Y: AlbertElem) -> AlbertElem:
    """4 det(a)^3 (X x a) x (Y x a) + (det(a)^2 q_a(X,Y) - q_a(X,a) q_a(Y,a))/2 * a.

    Bilinear symmetric; degree 11 in a. phi_a(e, X, Y) = X o Y.
    """
    det_a = det_j(a)
    head = cross(cross(X, a), cross(Y, a)).scale(4 * det_a**3)
    corr = det_a**2 * q_a(a, X, Y) - q_a(a, X, a) * q_a(a, Y, a)
    return head + a.scale(corr / 2)


def _require_invertible(a: AlbertElem) -> Fraction:
    d = det_j(a)
    if d == 0:
        raise SingularPoint("det(a) = 0: the isotope at a is undefined")
    return d


def circ_a_springer(a: AlbertElem, X: AlbertElem, Y: AlbertElem) -> AlbertElem:
    """det(a)^{-4} phi_a(X, Y); the isotope product in closed form."""
    d = _require_invertible(a)
    return phi_a(a, X, Y).scale(1 / d**4)


def pairing_a(a: AlbertElem, X: AlbertElem, Y: AlbertElem) -> Fraction:
    """det(a)^{-2} q_a(X, Y); the isotope's trace form."""
    d = _require_invertible(a)
    return q_a(a, X, Y) / d**2


def circ_a_tform(a: AlbertElem, X: AlbertElem, Y: AlbertElem) -> AlbertElem:
    """The product defined implicitly by q_a(X circ Y, Z) = det(a)^{-1} t_form(a; X, Y, Z).

    The right side over the basis Z = b_k collapses through duality:
    with P = a x X, Q = a x Y and U = P x Q,

        D(P, Q, a x b_k) = (1/3) pair(U, a x b_k)
                         = D(a, b_k, U) = (1/3) pair(a x U, b_k),

    so the 27 right-hand sides come from two pairing rows instead of 27
    polarized determinants. One exact solve finishes the job.
    """
    d = _require_invertible(a)
    dvec = pair_vec(cross(a, a))  # pair(a x a, b_k) = 3 D(a, a, b_k)
    dx = trilinear_d(a, a, X)
    dy = trilinear_d(a, a, Y)
    u = cross(cross(a, X), cross(a, Y))
    au_vec = pair_vec(cross(a, u))  # pair(a x U, b_k) = 3 D(P, Q, a x b_k)
    rhs = [(9 * dx * dy * dvec[k] - 8 * d * au_vec[k]) / d for k in range(27)]
    coords = solve_exact(gram_qa(a), rhs)
    return AlbertElem.from_coords(coords)
