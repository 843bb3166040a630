"""Exact feasibility for small linear systems over Q.

Phase-one simplex on Fractions with Bland's rule, so it always terminates and
never rounds. Problems in this package have a handful of variables and at most
a few dozen constraints.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence


def find_point(
    eq: Sequence[Sequence] = (),
    eq_rhs: Sequence = (),
    ge: Sequence[Sequence] = (),
    ge_rhs: Sequence = (),
    nvars: Optional[int] = None,
) -> Optional[List[Fraction]]:
    """Return some x with eq @ x == eq_rhs and ge @ x >= ge_rhs, or None.

    All variables are free.
    """
    if nvars is None:
        rows = list(eq) + list(ge)
        if not rows:
            raise ValueError("cannot infer the number of variables")
        nvars = len(rows[0])
    # x = p - q with p, q >= 0; every >= row gets a surplus variable
    n_ge = len(ge)
    width = 2 * nvars + n_ge
    A: List[List[Fraction]] = []
    b: List[Fraction] = []
    for row, rhs in zip(eq, eq_rhs):
        A.append([Fraction(a) for a in row] + [-Fraction(a) for a in row] + [Fraction(0)] * n_ge)
        b.append(Fraction(rhs))
    for k, (row, rhs) in enumerate(zip(ge, ge_rhs)):
        surplus = [Fraction(0)] * n_ge
        surplus[k] = Fraction(-1)
        A.append([Fraction(a) for a in row] + [-Fraction(a) for a in row] + surplus)
        b.append(Fraction(rhs))
    z = _phase_one(A, b, width)
    if z is None:
        return None
    return [z[j] - z[nvars + j] for j in range(nvars)]


def _phase_one(A: List[List[Fraction]], b: List[Fraction], width: int) -> Optional[List[Fraction]]:
    m = len(A)
    if m == 0:
        return [Fraction(0)] * width
    for i in range(m):
        if b[i] < 0:
            A[i] = [-a for a in A[i]]
            b[i] = -b[i]
    # tableau columns: original vars, then one artificial per row
    T = [A[i] + [Fraction(int(i == k)) for k in range(m)] + [b[i]] for i in range(m)]
    basis = [width + i for i in range(m)]
    ncol = width + m
    # reduced costs for minimising the sum of artificials
    cost = [Fraction(0)] * (ncol + 1)
    for i in range(m):
        for j in range(ncol + 1):
            cost[j] -= T[i][j]
    for k in range(m):
        cost[width + k] += 1
    while True:
        enter = next((j for j in range(ncol) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][ncol] / T[i][enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # unbounded cannot happen in phase one
            break
        _pivot(T, cost, best[1], enter)
        basis[best[1]] = enter
    if -cost[ncol] != 0:
        return None
    x = [Fraction(0)] * ncol
    for i, j in enumerate(basis):
        x[j] = T[i][ncol]
    return x[:width]


def _pivot(T, cost, r, c):
    piv = T[r][c]
    T[r] = [v / piv for v in T[r]]
    for i in range(len(T)):
        if i != r and T[i][c] != 0:
            f = T[i][c]
            T[i] = [a - f * p for a, p in zip(T[i], T[r])]
    if cost[c] != 0:
        f = cost[c]
        cost[:] = [a - f * p for a, p in zip(cost, T[r])]
