"""Linear algebra over F2 with int bitsets, and the 2-determinant.

A vector of F2^n is an int whose bit r is coordinate r. Matrices are kept as
lists of such ints (rows or columns, depending on the routine; rank and det do
not care).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple


def reduce_mod2(v: Sequence[int]) -> Tuple[int, ...]:
    """Coordinatewise parity; (-1, 4) -> (1, 0)."""
    return tuple(x & 1 for x in v)


def pack(bits: Sequence[int]) -> int:
    out = 0
    for r, b in enumerate(bits):
        if b & 1:
            out |= 1 << r
    return out


def unpack(x: int, n: int) -> Tuple[int, ...]:
    return tuple((x >> r) & 1 for r in range(n))


@dataclass(frozen=True)
class F2Matrix:
    """Dense bit matrix; row i is the int ``rows[i]`` over ``ncols`` bits."""

    rows: Tuple[int, ...]
    ncols: int

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> "F2Matrix":
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        return cls(tuple(pack(r) for r in rows), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def to_lists(self) -> List[List[int]]:
        return [list(unpack(r, self.ncols)) for r in self.rows]


def _rank(vectors: Sequence[int]) -> int:
    basis: List[int] = []  # distinct top bits, kept in decreasing order
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def f2_rank(M: F2Matrix) -> int:
    return _rank(M.rows)


def f2_det(M: F2Matrix) -> int:
    if M.nrows != M.ncols:
        raise ValueError("f2_det needs a square matrix")
    return int(_rank(M.rows) == M.ncols)


def _validate(k: Sequence[Sequence[int]]) -> int:
    if len(k) < 2:
        raise ValueError("det2 needs n+1 vectors with n >= 1")
    n = len(k) - 1
    if any(len(v) != n for v in k):
        raise ValueError(f"det2 needs {n + 1} vectors of length {n}")
    return n


def det2(k: Sequence[Sequence[int]]) -> int:
    """2-determinant of n+1 vectors of F2^n (coordinate formula).

    Sum over pairs i < j of the determinant whose columns are the other n-1
    vectors followed by the coordinatewise product of k_i and k_j.
    """
    n = _validate(k)
    cols = [pack(v) for v in k]
    return det2_packed(cols, n)


def det2_packed(cols: Sequence[int], n: int) -> int:
    total = 0
    m = len(cols)
    for i, j in combinations(range(m), 2):
        rest = [cols[t] for t in range(m) if t != i and t != j]
        rest.append(cols[i] & cols[j])
        if _rank(rest) == n:
            total ^= 1
    return total


def kernel(cols: Sequence[int], n: int) -> List[int]:
    """Basis of {lam : sum lam_i cols_i = 0}; each lam packed over len(cols) bits."""
    # eliminate on the augmented pairs (vector, combination)
    work = [(c, 1 << i) for i, c in enumerate(cols)]
    reduced: List[Tuple[int, int]] = []
    relations = []
    for v, comb in work:
        for bv, bc in reduced:
            if v ^ bv < v:
                v ^= bv
                comb ^= bc
        if v:
            reduced.append((v, comb))
            reduced.sort(reverse=True)
        else:
            relations.append(comb)
    return relations


def det2_oracle(k: Sequence[Sequence[int]]) -> int:
    """2-determinant straight from its definition.

    Zero if the rank is below n; otherwise 1 + sum of the coefficients of
    the unique nontrivial relation among the vectors.
    """
    n = _validate(k)
    cols = [pack(v) for v in k]
    rels = kernel(cols, n)
    if len(rels) != 1:
        return 0
    lam = rels[0]
    return (bin(lam).count("1") + 1) & 1


def _echelon(vectors: Sequence[int]) -> List[int]:
    """Fully reduced echelon basis; pivot of each element is its top bit."""
    basis: List[int] = []
    for v in vectors:
        for b in basis:
            if v & (1 << (b.bit_length() - 1)):
                v ^= b
        if v:
            top = 1 << (v.bit_length() - 1)
            basis = [b ^ v if b & top else b for b in basis]
            basis.append(v)
    return basis


def det2_block(k_head: Sequence[Sequence[int]], k_tail: Sequence[Sequence[int]]) -> int:
    """2-determinant of head + tail via the block factorisation.

    ``k_head`` holds m+1 vectors of rank m. The result is det2 of the head,
    written in coordinates of its own span, times the determinant of the tail
    projected to F2^n / span(head).
    """
    if not k_head:
        raise ValueError("empty head")
    n = len(k_head[0])
    if any(len(v) != n for v in list(k_head) + list(k_tail)):
        raise ValueError("vectors of different lengths")
    m = len(k_head) - 1
    if len(k_tail) != n - m:
        raise ValueError(f"tail must hold {n - m} vectors")
    head = [pack(v) for v in k_head]
    basis = _echelon(head)
    if len(basis) != m:
        raise ValueError(f"head has rank {len(basis)}, expected {m}")
    if m == 0:
        return 0
    pivots = [b.bit_length() - 1 for b in basis]
    pivot_mask = sum(1 << p for p in pivots)

    def reduce(v: int) -> int:
        for b, p in zip(basis, pivots):
            if v >> p & 1:
                v ^= b
        return v

    # head coordinates in the echelon basis are its bits at the pivots
    head_local = [[(h >> p) & 1 for p in pivots] for h in head]
    head_val = det2(head_local)
    free = [r for r in range(n) if not pivot_mask >> r & 1]
    tail_proj = [pack([(reduce(pack(v)) >> r) & 1 for r in free]) for v in k_tail]
    tail_val = int(_rank(tail_proj) == len(free))
    return head_val & tail_val
