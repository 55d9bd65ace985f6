"""Exact dense linear algebra over Q.

Matrices are tuples of tuples of Fraction. The solver clears denominators
row by row and then runs fraction-free (Bareiss) elimination over the
integers, which keeps intermediate entries at the size of minors instead of
letting rational numerators and denominators grow independently.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import SingularMatrix


def identity_matrix(n: int):
    one, zero = Fraction(1), Fraction(0)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def transpose(m):
    return tuple(zip(*m))


def mat_vec(m, v):
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def mat_mul(a, b):
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_scale(t, m):
    return tuple(tuple(t * x for x in row) for row in m)


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _integer_rows(aug):
    """Scale each augmented row by the lcm of its denominators (solution-preserving)."""
    rows = []
    for row in aug:
        mult = 1
        for x in row:
            mult = _lcm(mult, x.denominator)
        rows.append([int(x * mult) for x in row])
    return rows


def solve_exact(m, rhs):
    """Solve m @ u = rhs exactly. Raises SingularMatrix if rank < n."""
    n = len(m)
    if any(len(row) != n for row in m) or len(rhs) != n:
        raise ValueError("need a square system")
    a = _integer_rows(
        [tuple(m[i]) + (rhs[i],) for i in range(n)]
    )

    # Bareiss fraction-free forward elimination; all divisions below are exact.
    prev = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise SingularMatrix("rank < %d" % n)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            rowi, rowk = a[i], a[k]
            for j in range(k + 1, n + 1):
                rowi[j] = (akk * rowi[j] - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk

    u = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = a[i][n] - sum(a[i][j] * u[j] for j in range(i + 1, n))
        u[i] = Fraction(s, 1) / a[i][i]
    return tuple(u)


def inv_exact(m):
    """Exact inverse via Gauss-Jordan. Raises SingularMatrix if not invertible."""
    n = len(m)
    a = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(m)
    ]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise SingularMatrix("rank < %d" % n)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
        inv_p = 1 / a[k][k]
        a[k] = [x * inv_p for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return tuple(tuple(row[n:]) for row in a)
