"""Exact integer and rational matrix routines.

Matrices are plain lists of rows. Entries are Python ints or Fractions; nothing
here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

Matrix = List[List[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list:
    if not A:
        return []
    cols = len(B[0]) if B else 0
    return [[sum(a * B[k][j] for k, a in enumerate(row)) for j in range(cols)] for row in A]


def transpose(A: Sequence[Sequence]) -> list:
    return [list(col) for col in zip(*A)]


def det(A: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free Bareiss elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(r) for r in A]
    if any(len(r) != n for r in M):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q."""
    M = [[Fraction(x) for x in r] for r in rows]
    if not M:
        return 0
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, len(M)):
            if M[i][c] != 0:
                f = M[i][c] / M[r][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return r


def solve(A: Sequence[Sequence], b: Sequence) -> List[Fraction]:
    """Solve the square nonsingular system A x = b exactly."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        M[c], M[piv] = M[piv], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return [M[i][n] for i in range(n)]


def particular_solution(A: Sequence[Sequence], b: Sequence) -> List[Fraction]:
    """Some exact solution of a consistent (possibly underdetermined) system.

    Free variables are set to zero. Raises ValueError when inconsistent.
    """
    rows = len(A)
    ncols = len(A[0]) if rows else 0
    M = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    if any(M[i][ncols] != 0 for i in range(r, rows)):
        raise ValueError("inconsistent system")
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = M[i][ncols]
    return x


def smith_normal_form(M: Sequence[Sequence[int]]) -> Tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V) with U @ M @ V == D, U and V unimodular.

    D is diagonal (same shape as M) with nonnegative entries d_1 | d_2 | ...
    """
    m = len(M)
    n = len(M[0]) if m else 0
    D = [list(map(int, r)) for r in M]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    add_row(i, t, -q)
                    if D[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    add_col(j, t, -q)
                    if D[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # pivot must divide the rest of the block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % D[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return U, D, V


def hermite_rows(B: Sequence[Sequence[int]]) -> Matrix:
    """Row-style Hermite normal form of the lattice spanned by the rows of B.

    Zero rows are dropped; pivots are positive and entries above a pivot are
    reduced into [0, pivot).
    """
    H = [list(map(int, r)) for r in B]
    if not H:
        return []
    ncols = len(H[0])
    r = 0
    for c in range(ncols):
        rows = [i for i in range(r, len(H)) if H[i][c]]
        if not rows:
            continue
        while True:
            rows = [i for i in range(r, len(H)) if H[i][c]]
            piv = min(rows, key=lambda i: abs(H[i][c]))
            H[r], H[piv] = H[piv], H[r]
            others = [i for i in range(r + 1, len(H)) if H[i][c]]
            if not others:
                break
            for i in others:
                q = H[i][c] // H[r][c]
                H[i] = [a - q * b for a, b in zip(H[i], H[r])]
        if H[r][c] < 0:
            H[r] = [-a for a in H[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            H[i] = [a - q * b for a, b in zip(H[i], H[r])]
        r += 1
        if r == len(H):
            break
    return [row for row in H[:r]]


def integer_kernel(A: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Saturated integer basis (as rows) of {x in Z^ncols : A x = 0}."""
    if not A:
        return identity(ncols)
    _, D, V = smith_normal_form(A)
    r = sum(1 for i in range(min(len(D), ncols)) if D[i][i])
    return hermite_rows([[V[i][j] for i in range(ncols)] for j in range(r, ncols)])


def saturated_span(vectors: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Basis (rows, Hermite form) of span_Q(vectors) intersected with Z^ncols."""
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    U, D, V = smith_normal_form(rows)
    r = sum(1 for i in range(min(len(D), ncols)) if D[i][i])
    Vinv = _unimodular_inverse(V)
    return hermite_rows(Vinv[:r])


def _unimodular_inverse(V: Matrix) -> Matrix:
    n = len(V)
    inv = [[Fraction(x) for x in row] for row in transpose(
        [solve(V, [int(i == j) for i in range(n)]) for j in range(n)])]
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out
