"""Regular mixed subdivisions induced by liftings of point sets.

A lifting assigns a height to every point of every support. The upper faces of
the lifted Minkowski sum project to the cells of a mixed subdivision of
sum(conv A_i); a cell is recorded by its face tuple (F_1, ..., F_m), F_i the
points of A_i where the selector (v, 1) is maximal.

Cells are found without any search over selectors. Every full-dimensional cell
contains a sub-tuple of affinely independent subsets whose edge vectors form a
basis, and those edges pin down v. So we enumerate such sub-tuples drawn from
the upper faces of each lifted support, solve for v exactly and keep v when the
sub-tuple is maximal under it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import linalg
from .errors import GenericityFailure
from .lattice import AffineFrame, IntVector, Support, dot, sub

DENOMINATOR = 2 ** 31


@dataclass(frozen=True)
class Lifting:
    """Heights numerators[i][j] / denominator for supports[i].points[j]."""

    numerators: Tuple[Tuple[int, ...], ...]
    denominator: int = DENOMINATOR
    seed: Optional[int] = None

    @classmethod
    def from_heights(cls, heights: Sequence[Sequence], seed: Optional[int] = None) -> "Lifting":
        fr = [[Fraction(h) for h in row] for row in heights]
        den = 1
        for row in fr:
            for h in row:
                den = den * h.denominator // _gcd(den, h.denominator)
        nums = tuple(tuple(int(h * den) for h in row) for row in fr)
        return cls(nums, den, seed)

    @property
    def heights(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return tuple(tuple(Fraction(h, self.denominator) for h in row) for row in self.numerators)

    def check(self, supports: Sequence[Support]) -> None:
        if len(self.numerators) != len(supports) or any(
                len(row) != len(A) for row, A in zip(self.numerators, supports)):
            raise ValueError("lifting does not match the supports")


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class CellType(enum.Enum):
    MIXED = "mixed"
    SEMI_MIXED = "semi-mixed"
    OTHER = "other"


@dataclass(frozen=True)
class MixedCell:
    """A full-dimensional cell and its face decomposition.

    ``selector`` is v in the selector (v, 1) against the true heights; it is
    unique up to the orthogonal complement of the cell's affine span.
    """

    faces: Tuple[Tuple[IntVector, ...], ...]
    selector: Tuple[Fraction, ...]

    @property
    def face_dims(self) -> Tuple[int, ...]:
        return tuple(linalg.rank([sub(p, F[0]) for p in F[1:]]) if len(F) > 1 else 0
                     for F in self.faces)

    @property
    def cell_type(self) -> CellType:
        sizes = [len(F) for F in self.faces]
        if all(s == 2 for s in sizes):
            return CellType.MIXED
        if sizes.count(1) == 1 and all(s in (1, 2) for s in sizes):
            return CellType.SEMI_MIXED
        return CellType.OTHER

    def edges(self) -> Tuple[IntVector, ...]:
        """Edge vectors q - p of the two-point faces, in face order."""
        return tuple(sub(F[1], F[0]) for F in self.faces if len(F) == 2)

    def points(self) -> Tuple[IntVector, ...]:
        pts = [()]
        for F in self.faces:
            pts = [tuple(a + b for a, b in zip(p, q)) if p else q for p in pts for q in F]
        return tuple(sorted(set(pts)))

    def is_fine(self) -> bool:
        diffs = [sub(p, F[0]) for F in self.faces for p in F[1:]]
        return linalg.rank(diffs) == len(diffs)


def random_lifting(supports: Sequence[Support], seed: int, bound: int = DENOMINATOR) -> Lifting:
    """Heights numerator / 2^31 with numerators uniform in [0, bound)."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    rng = np.random.default_rng(seed)
    nums = tuple(tuple(int(x) for x in rng.integers(0, bound, size=len(A))) for A in supports)
    return Lifting(nums, DENOMINATOR, seed)


class _Independent:
    """Incremental linear-independence test over Q."""

    def __init__(self):
        self.rows: List[Tuple[int, List[Fraction]]] = []  # (pivot, row)

    def try_add(self, vectors) -> Optional["_Independent"]:
        new = _Independent()
        new.rows = list(self.rows)
        for v in vectors:
            v = [Fraction(x) for x in v]
            for piv, row in new.rows:
                if v[piv]:
                    f = v[piv] / row[piv]
                    v = [a - f * b for a, b in zip(v, row)]
            piv = next((j for j, x in enumerate(v) if x), None)
            if piv is None:
                return None
            new.rows.append((piv, v))
        return new


def _upper_faces(pts: Sequence[IntVector], hts: Sequence[int]) -> List[Tuple[int, ...]]:
    """Affinely independent index sets lying in an upper facet of the lifted set."""
    if len(pts) == 1:
        return [(0,)]
    p0 = pts[0]
    d = linalg.rank([sub(p, p0) for p in pts[1:]])
    facets = set()
    for S in combinations(range(len(pts)), d + 1):
        base = pts[S[0]]
        diffs = [sub(pts[i], base) for i in S[1:]]
        if linalg.rank(diffs) < d:
            continue
        rhs = [hts[S[0]] - hts[i] for i in S[1:]]
        w = linalg.particular_solution(diffs, rhs)
        vals = [dot(w, p) + h for p, h in zip(pts, hts)]
        top = max(vals)
        if all(vals[i] == top for i in S):
            facets.add(tuple(i for i, x in enumerate(vals) if x == top))
    faces = set()
    for G in facets:
        for size in range(1, min(len(G), d + 1) + 1):
            for F in combinations(G, size):
                if size == 1 or linalg.rank([sub(pts[i], pts[F[0]]) for i in F[1:]]) == size - 1:
                    faces.add(F)
    return sorted(faces, key=lambda F: (len(F), F))


def induced_subdivision(supports: Sequence[Support], lifting: Lifting) -> List[MixedCell]:
    """All full-dimensional cells of the regular mixed subdivision.

    Cells are full-dimensional relative to the affine span of the Minkowski
    sum; they come back sorted by their face tuples.
    """
    supports = [A if isinstance(A, Support) else Support.of(A) for A in supports]
    if not supports:
        raise ValueError("need at least one support")
    lifting.check(supports)
    n = supports[0].ambient_dim
    directions = [sub(p, A.points[0]) for A in supports for p in A.points[1:]]
    frame = AffineFrame([(0,) * n] + directions)
    k = frame.dim
    local = [[frame.coords(sub(p, A.points[0])) for p in A.points] for A in supports]
    hts = lifting.numerators
    cand = [_upper_faces(Y, H) for Y, H in zip(local, hts)]
    m = len(supports)

    found: Dict[Tuple, MixedCell] = {}

    def leaf(choice):
        rows, rhs = [], []
        for i, F in enumerate(choice):
            for j in F[1:]:
                rows.append(sub(local[i][j], local[i][F[0]]))
                rhs.append(hts[i][F[0]] - hts[i][j])
        w = linalg.solve(rows, rhs) if rows else []
        faces = []
        for i, F in enumerate(choice):
            vals = [dot(w, y) + h for y, h in zip(local[i], hts[i])]
            top = max(vals)
            if any(vals[j] != top for j in F):
                return
            faces.append(tuple(j for j, x in enumerate(vals) if x == top))
        key = tuple(faces)
        if key not in found:
            found[key] = MixedCell(
                tuple(tuple(supports[i].points[j] for j in G) for i, G in enumerate(faces)),
                tuple(x / lifting.denominator for x in frame.lift_covector(w)))

    def search(i, used, indep, choice):
        if i == m:
            if used == k:
                leaf(choice)
            return
        for F in cand[i]:
            dim = len(F) - 1
            if used + dim > k:
                break
            nxt = indep.try_add(sub(local[i][j], local[i][F[0]]) for j in F[1:]) if dim else indep
            if nxt is None:
                continue
            choice.append(F)
            search(i + 1, used + dim, nxt, choice)
            choice.pop()

    search(0, 0, _Independent(), [])
    return [found[key] for key in sorted(found, key=lambda key: found[key].faces)]


def is_fine(cells: Sequence[MixedCell]) -> bool:
    """True iff every cell is a sum of affinely independent simplices whose
    dimensions add up to the dimension of the cell."""
    return bool(cells) and all(c.is_fine() for c in cells)


def mixed_cells(cells: Sequence[MixedCell]) -> List[MixedCell]:
    return [c for c in cells if c.cell_type is CellType.MIXED]


@dataclass(frozen=True)
class Subdivision:
    cells: Tuple[MixedCell, ...]
    lifting: Lifting
    attempts: int

    @property
    def seed(self) -> Optional[int]:
        return self.lifting.seed

    def __iter__(self):
        return iter(self.cells)

    def __len__(self):
        return len(self.cells)


def generic_subdivision(supports: Sequence[Support], seed: int = 0, *,
                        bound: int = DENOMINATOR, max_retries: int = 16) -> Subdivision:
    """Fine subdivision from random_lifting(seed), then seed+1, ... until fine."""
    supports = [A if isinstance(A, Support) else Support.of(A) for A in supports]
    for attempt in range(max_retries):
        lifting = random_lifting(supports, seed + attempt, bound)
        cells = induced_subdivision(supports, lifting)
        if is_fine(cells):
            return Subdivision(tuple(cells), lifting, attempt + 1)
    raise GenericityFailure(f"no fine subdivision after {max_retries} liftings from seed {seed}")
