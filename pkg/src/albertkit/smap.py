"""The degree-8 structure map S on pairs of Albert elements.

For x = (a, b) in V = J + J, expanding (a wedge b)^{tensor 4} gives 16
signed choices v_1, ..., v_8 from {a, b}: term k of SIGNED_TERMS swaps
(v_{2k-1}, v_{2k-2}) = (a, b) to (b, a) on a subset of the four pairs and
carries sign (-1)^{#swaps}. Two contractions of that tensor against
(X, Y) produce, per term with scalar dd = D(v2,v5,v7) D(v4,v6,v8):

    phi1(x, X, Y) = sum sign * dd * (v1 x v3) x (X x Y)
    phi2(x, X, Y) = 9 * sum sign * dd * (D(v1,v3,X) Y + D(v1,v3,Y) X)

(the factor 9 normalizes the D-scalar pair so that phi2(w, X, Y) =
(Tr(Y)X + Tr(X)Y)/3, which pins s_map(w) to the Jordan product; the
bare signed sum is smaller by exactly that factor). Then

    s_map = -18 phi1 + (3/2) phi2,       circ_x = delta(x)^{-1} s_map

so s_map(w, X, Y) = X o Y at the reference point w, and circ_x is the
product of a Jordan algebra whenever x is semistable.

Everything factors through the single element

    k_elem(x) = sum sign * dd * (v1 x v3)

via s_map = -18 k x (X x Y) + (9/2)(pair(k, X) Y + pair(k, Y) X), which
is what structure_tensor exploits when tabulating all 729 basis pairs.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .albert import (
    AlbertElem,
    basis_crosses,
    cross,
    det_j,
    pair,
    pair_vec,
    trilinear_d,
)
from .errors import NotSemistable
from .pvs import VPoint, delta


class SignedTerm(NamedTuple):
    """One of the 16 expansion terms: sign and the slot picks (0 = a, 1 = b)."""

    sign: int
    picks: tuple  # 8 entries


def _signed_terms() -> tuple:
    terms = []
    for bits in range(16):
        picks = []
        swaps = 0
        for pair_i in range(4):
            if (bits >> (3 - pair_i)) & 1:
                picks.extend((1, 0))
                swaps += 1
            else:
                picks.extend((0, 1))
        terms.append(SignedTerm(-1 if swaps & 1 else 1, tuple(picks)))
    return tuple(terms)


SIGNED_TERMS = _signed_terms()


def _term_scalar(a: AlbertElem, b: AlbertElem, picks) -> Fraction:
    """D(v2, v5, v7) * D(v4, v6, v8) for the picked slots."""
    ab = (a, b)
    v = [ab[p] for p in picks]
    return trilinear_d(v[1], v[4], v[6]) * trilinear_d(v[3], v[5], v[7])


def phi1(x: VPoint, X: AlbertElem, Y: AlbertElem) -> AlbertElem:
    a, b = x.a, x.b
    xy = cross(X, Y)
    acc = None
    ab = (a, b)
    for sign, picks in SIGNED_TERMS:
        dd = _term_scalar(a, b, picks)
        if dd == 0:
            continue
        piece = cross(cross(ab[picks[0]], ab[picks[2]]), xy).scale(sign * dd)
        acc = piece if acc is None else acc + piece
    return acc if acc is not None else X.scale(0)


def phi2(x: VPoint, X: AlbertElem, Y: AlbertElem) -> AlbertElem:
    a, b = x.a, x.b
    acc = None
    ab = (a, b)
    for sign, picks in SIGNED_TERMS:
        dd = _term_scalar(a, b, picks)
        if dd == 0:
            continue
        v1, v3 = ab[picks[0]], ab[picks[2]]
        piece = Y.scale(trilinear_d(v1, v3, X)) + X.scale(trilinear_d(v1, v3, Y))
        piece = piece.scale(sign * dd)
        acc = piece if acc is None else acc + piece
    return acc.scale(9) if acc is not None else X.scale(0)


def k_elem(x: VPoint) -> AlbertElem:
    """sum over terms of sign * dd * (v1 x v3); phi1 = k x (X x Y).

    D is symmetric, so each term's scalar only depends on how many of its
    three D-arguments are b: the 32 polarized determinants of the literal
    sum collapse to 4 values, and the v1 x v3 factors to 3 crosses. Tests
    pin this to the literal phi1/phi2 through the s_map recombination.
    """
    a, b = x.a, x.b
    dvals = (det_j(a), trilinear_d(a, a, b), trilinear_d(a, b, b), det_j(b))
    cr = {(0, 0): cross(a, a), (0, 1): cross(a, b), (1, 1): cross(b, b)}
    acc = AlbertElem((0, 0, 0))
    for sign, picks in SIGNED_TERMS:
        dd = dvals[picks[1] + picks[4] + picks[6]] * dvals[picks[3] + picks[5] + picks[7]]
        if dd == 0:
            continue
        key = (picks[0], picks[2]) if picks[0] <= picks[2] else (picks[2], picks[0])
        acc = acc + cr[key].scale(sign * dd)
    return acc


@lru_cache(maxsize=64)
def _s_context(x: VPoint):
    """(k_elem(x), pair_vec of it), cached per point."""
    k = k_elem(x)
    return k, pair_vec(k)


def s_map(x: VPoint, X: AlbertElem, Y: AlbertElem) -> AlbertElem:
    """-18 phi1 + (3/2) phi2, contracted through k_elem(x)."""
    k, _ = _s_context(x)
    kx = pair(k, X)
    ky = pair(k, Y)
    out = cross(k, cross(X, Y)).scale(-18)
    return out + (Y.scale(kx) + X.scale(ky)).scale(Fraction(9, 2))


class StructureTensor:
    """All 27^3 structure constants of s_map at a point, in jbasis coordinates.

    entry(i, j, k) is the k-th coordinate of s_map(x, basis_i, basis_j);
    flat storage is row-major in (i, j, k).
    """

    __slots__ = ("point", "flat")

    def __init__(self, point: VPoint, flat):
        if len(flat) != 19683:
            raise ValueError("structure tensor needs 27^3 entries")
        self.point = point
        self.flat = tuple(flat)

    def entry(self, i: int, j: int, k: int) -> Fraction:
        return self.flat[(i * 27 + j) * 27 + k]

    def product_coords(self, i: int, j: int) -> tuple:
        base = (i * 27 + j) * 27
        return self.flat[base : base + 27]

    def __eq__(self, other):
        if not isinstance(other, StructureTensor):
            return NotImplemented
        return self.point == other.point and self.flat == other.flat

    def __repr__(self):
        return "StructureTensor(point=%r, <19683 entries>)" % (self.point,)


def _tab_workers() -> int:
    raw = os.environ.get("ALBERTKIT_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def structure_tensor(x: VPoint) -> StructureTensor:
    """Tabulate s_map(x, b_i, b_j) over all basis pairs.

    The point-dependent work (k_elem and its pairing row) happens once;
    each pair then costs one cross product against a precomputed basis
    cross. Symmetry in (i, j) halves the work. ALBERTKIT_THREADS > 1
    spreads the pair loop over a thread pool; assembly is by index, so
    the result does not depend on scheduling.
    """
    k, kpv = _s_context(x)
    crosses = basis_crosses()
    pairs = [(i, j) for i in range(27) for j in range(i, 27)]
    half9 = Fraction(9, 2)

    def one(ij):
        i, j = ij
        out = cross(k, crosses[i][j]).scale(-18).coords()
        out = list(out)
        out[i] += half9 * kpv[j]
        out[j] += half9 * kpv[i]
        return out

    workers = _tab_workers()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(one, pairs))
    else:
        results = [one(ij) for ij in pairs]

    flat = [Fraction(0)] * 19683
    for (i, j), out in zip(pairs, results):
        base_ij = (i * 27 + j) * 27
        flat[base_ij : base_ij + 27] = out
        if i != j:
            base_ji = (j * 27 + i) * 27
            flat[base_ji : base_ji + 27] = out
    return StructureTensor(x, flat)


def circ_x(x: VPoint, X: AlbertElem, Y: AlbertElem) -> AlbertElem:
    """The isotope product delta(x)^{-1} s_map(x, X, Y); needs x semistable."""
    d = delta(x)
    if d == 0:
        raise NotSemistable("delta(x) = 0: no algebra is attached to x")
    return s_map(x, X, Y).scale(1 / d)
