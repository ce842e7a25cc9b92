"""Exact integer matrix helpers.

Matrices are lists of row lists of Python ints (or Fractions where noted).
Nothing here uses floating point.

>>> smith_normal_form([[2, 4], [6, 8]])[0]
[[2, 0], [0, 4]]
>>> determinant([[0, 1], [1, 0]])
-1
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col) if x) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v) if x) for row in a]


def gcd_list(values) -> int:
    g = 0
    for x in values:
        g = gcd(g, x)
    return g


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def bezout(values: Sequence[int]) -> tuple[int, list[int]]:
    """Return (g, c) with sum(c[i] * values[i]) == g == gcd(values)."""
    g, coeffs = 0, [0] * len(values)
    for i, x in enumerate(values):
        if x == 0:
            continue
        g2, s, t = xgcd(g, x)
        coeffs = [s * c for c in coeffs]
        coeffs[i] = t
        g = g2
    return g, coeffs


def determinant(a: Sequence[Sequence[int]]) -> int:
    """Fraction-free Bareiss elimination."""
    m = [list(row) for row in a]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def inverse_rational(a: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over Q. Raises ValueError if singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            raise ValueError("singular matrix")
        m[c], m[p] = m[p], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


def smith_normal_form(a: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form with unimodular transforms.

    Returns (D, U, V) with U * A * V == D, D diagonal with nonnegative
    entries d_1 | d_2 | ... and U, V unimodular.
    """
    m_rows = len(a)
    n_cols = len(a[0]) if m_rows else 0
    d = [list(row) for row in a]
    u = identity(m_rows)
    v = identity(n_cols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row dst += k * row src
        d[dst] = [x + k * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, k):  # col dst += k * col src
        for row in d:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    for t in range(min(m_rows, n_cols)):
        while True:
            nz = [(abs(d[i][j]), i, j) for i in range(t, m_rows)
                  for j in range(t, n_cols) if d[i][j]]
            if not nz:
                break
            _, pi, pj = min(nz)
            if pi != t:
                swap_rows(pi, t)
            if pj != t:
                swap_cols(pj, t)
            p = d[t][t]
            clean = True
            for i in range(t + 1, m_rows):
                if d[i][t]:
                    add_row(t, i, -(d[i][t] // p))
                    clean = clean and d[i][t] == 0
            for j in range(t + 1, n_cols):
                if d[t][j]:
                    add_col(t, j, -(d[t][j] // p))
                    clean = clean and d[t][j] == 0
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, m_rows)
                        for j in range(t + 1, n_cols) if d[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    return d, u, v


def invariant_factors(a: Sequence[Sequence[int]]) -> list[int]:
    d, _, _ = smith_normal_form(a)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def integer_kernel(a: Sequence[Sequence[int]], ncols: int | None = None) -> list[list[int]]:
    """Basis (as a list of vectors) of {x in Z^n : A x = 0}."""
    if not a:
        n = ncols or 0
        return identity(n)
    d, _, v = smith_normal_form(a)
    n = len(a[0])
    rank = sum(1 for i in range(min(len(d), n)) if d[i][i])
    return [[v[r][c] for r in range(n)] for c in range(rank, n)]
