"""Exact geometry of lattice point sets and lattice polytopes."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from itertools import combinations
from math import factorial, gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from . import linalg
from .lp import find_point

IntVector = Tuple[int, ...]
Covector = Tuple[int, ...]


def as_vector(v: Iterable[int]) -> IntVector:
    out = tuple(int(x) for x in v)
    return out


def check_dims(*vectors: Sequence, dim: Optional[int] = None) -> int:
    """Common length of the given vectors; raises on mixed dimensions."""
    lengths = {len(v) for v in vectors}
    if dim is not None:
        lengths.add(dim)
    if len(lengths) > 1:
        raise ValueError(f"dimension mismatch: {sorted(lengths)}")
    return lengths.pop() if lengths else 0


@dataclass(frozen=True)
class Support:
    """Finite nonempty set of lattice points, kept in lexicographic order."""

    points: Tuple[IntVector, ...]

    def __post_init__(self):
        if not self.points:
            raise ValueError("empty support")
        pts = tuple(sorted(set(as_vector(p) for p in self.points)))
        check_dims(*pts)
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, points: Iterable[Iterable[int]]) -> "Support":
        return cls(tuple(as_vector(p) for p in points))

    @property
    def ambient_dim(self) -> int:
        return len(self.points[0])

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of a lattice point set, stored by its vertices only."""

    vertices: Support
    dim: int

    @property
    def ambient_dim(self) -> int:
        return self.vertices.ambient_dim

    @property
    def points(self) -> Tuple[IntVector, ...]:
        return self.vertices.points

    def translate(self, t: Sequence[int]) -> "LatticePolytope":
        return LatticePolytope(Support.of(tuple(a + b for a, b in zip(p, t)) for p in self.points), self.dim)


@dataclass(frozen=True)
class Face:
    parent: Union[LatticePolytope, Support]
    points: Support
    selector: Optional[Covector] = field(default=None)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def sub(u: Sequence[int], v: Sequence[int]) -> IntVector:
    return tuple(a - b for a, b in zip(u, v))


def affine_dim(points: Sequence[Sequence[int]]) -> int:
    if not points:
        return -1
    p0 = points[0]
    return linalg.rank([sub(p, p0) for p in points[1:]]) if len(points) > 1 else 0


def _as_points(obj) -> Tuple[IntVector, ...]:
    if isinstance(obj, (Support, LatticePolytope)):
        return obj.points
    return tuple(as_vector(p) for p in obj)


def in_convex_hull(p: Sequence[int], points: Sequence[Sequence[int]]) -> bool:
    """Exact membership test of p in conv(points) by LP feasibility."""
    if not points:
        return False
    k = len(points)
    eq = [[q[j] for q in points] for j in range(len(p))] + [[1] * k]
    rhs = list(p) + [1]
    ge = [[int(i == j) for i in range(k)] for j in range(k)]
    return find_point(eq, rhs, ge, [0] * k, nvars=k) is not None


def convex_hull(points: Union[Support, Iterable[Iterable[int]]]) -> LatticePolytope:
    """Vertex set of conv(points). A point is kept iff it is not a convex
    combination of the others."""
    S = points if isinstance(points, Support) else Support.of(points)
    verts, d = _hull(S.points)
    return LatticePolytope(Support(verts), d)


@lru_cache(maxsize=4096)
def _hull(pts: Tuple[IntVector, ...]) -> Tuple[Tuple[IntVector, ...], int]:
    # cached: the same sums recur across seeds and developedness checks
    if len(pts) == 1:
        return pts, 0
    frame = AffineFrame(pts)
    d = frame.dim
    if d <= 2:
        local = [frame.coords(p) for p in pts]
        keep = _hull_1d(local) if d == 1 else _monotone_chain(local)
        return tuple(pts[i] for i in keep), d
    # unique maximisers of random covectors are vertices; they settle most
    # of the remaining points with a small LP
    rng = random.Random(len(pts))
    n = len(pts[0])
    sure = {0, len(pts) - 1}
    for _ in range(40 * d):
        v = [rng.randint(-10 ** 6, 10 ** 6) for _ in range(n)]
        vals = [dot(v, p) for p in pts]
        top = max(vals)
        if vals.count(top) == 1:
            sure.add(vals.index(top))
    base = [pts[i] for i in sorted(sure)]
    verts = []
    for i, p in enumerate(pts):
        if i in sure:
            verts.append(p)
        elif in_convex_hull(p, base):
            continue
        elif not in_convex_hull(p, pts[:i] + pts[i + 1:]):
            verts.append(p)
    return tuple(verts), d


def _hull_1d(local: Sequence[IntVector]) -> List[int]:
    lo = min(range(len(local)), key=lambda i: local[i])
    hi = max(range(len(local)), key=lambda i: local[i])
    return [lo, hi]


def _monotone_chain(local: Sequence[IntVector]) -> List[int]:
    """Indices of the strict vertices of a planar integer point set."""
    order = sorted(range(len(local)), key=lambda i: local[i])

    def cross(o, a, b):
        (ox, oy), (ax, ay), (bx, by) = local[o], local[a], local[b]
        return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)

    def chain(idx):
        out: List[int] = []
        for i in idx:
            while len(out) >= 2 and cross(out[-2], out[-1], i) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(order[::-1])
    return lower[:-1] + upper[:-1]


def minkowski_sum(P: LatticePolytope, Q: LatticePolytope) -> LatticePolytope:
    check_dims(P.points[0], Q.points[0])
    return convex_hull(Support(tuple(tuple(a + b for a, b in zip(p, q)) for p in P.points for q in Q.points)))


def minkowski_sum_all(polys: Sequence[LatticePolytope]) -> LatticePolytope:
    out = polys[0]
    for P in polys[1:]:
        out = minkowski_sum(out, P)
    return out


def support_face(P: Union[LatticePolytope, Support, Sequence], v: Sequence) -> Face:
    """Points of P on which the linear function v is maximal."""
    pts = _as_points(P)
    check_dims(pts[0], v)
    vals = [dot(v, p) for p in pts]
    top = max(vals)
    sel = Support(tuple(p for p, x in zip(pts, vals) if x == top))
    parent = P if isinstance(P, (LatticePolytope, Support)) else Support(pts)
    return Face(parent, sel, tuple(v))


def smith_normal_form(M: Sequence[Sequence[int]]):
    """(U, D, V) with U·M·V = D, U and V unimodular, d_1 | d_2 | ..."""
    return linalg.smith_normal_form(M)


def cone_span_basis(v_list: Sequence[Sequence[int]], n: Optional[int] = None) -> List[IntVector]:
    """Lattice basis of span(v_list) ∩ Z^n, in Hermite form."""
    if n is None:
        if not v_list:
            return []
        n = len(v_list[0])
    return [tuple(r) for r in linalg.saturated_span(v_list, n)]


class AffineFrame:
    """Integer coordinates on the affine lattice spanned by a point set.

    ``basis`` is a lattice basis of span(P - P) ∩ Z^n, so coordinates of
    points of P are integers and volumes measured in them are normalized to
    the lattice of the affine span.
    """

    def __init__(self, points: Sequence[Sequence[int]]):
        self.origin = tuple(points[0])
        self.n = len(self.origin)
        self.basis = linalg.saturated_span([sub(p, self.origin) for p in points[1:]], self.n)
        self.dim = len(self.basis)
        self.pivots = [next(j for j in range(self.n) if row[j]) for row in self.basis]
        # B_piv is upper triangular in Hermite form, so solve by back substitution
        self._bt = [[self.basis[i][c] for i in range(self.dim)] for c in self.pivots]

    def coords(self, p: Sequence[int]) -> IntVector:
        if self.dim == 0:
            return ()
        d = sub(p, self.origin)
        y = linalg.solve(self._bt, [d[c] for c in self.pivots])
        if any(x.denominator != 1 for x in y):
            raise ValueError("point outside the lattice of the frame")
        return tuple(int(x) for x in y)

    def lift_covector(self, w: Sequence) -> Tuple[Fraction, ...]:
        """A covector on Z^n whose restriction to the frame is w."""
        u = [Fraction(0)] * self.n
        if self.dim:
            sol = linalg.solve(linalg.transpose(self._bt), list(w))
            for c, x in zip(self.pivots, sol):
                u[c] = x
        return tuple(u)


def _normal(diffs: Sequence[IntVector], k: int) -> Optional[IntVector]:
    """A nonzero integer covector killing k-1 vectors of Z^k, if unique up to scale."""
    if k == 1:
        return (1,)
    if k == 2:
        (x, y), = diffs
        w = (-y, x)
    elif k == 3:
        (a1, a2, a3), (b1, b2, b3) = diffs
        w = (a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)
    else:
        ker = linalg.integer_kernel(diffs, k)
        return tuple(ker[0]) if len(ker) == 1 else None
    return w if any(w) else None


def facet_normals(pts: Sequence[IntVector]) -> Dict[Tuple[int, ...], IntVector]:
    """Facets of a full-dimensional configuration in Z^k with outer normals.

    Maps the index set of each facet to a primitive covector w attaining its
    maximum over pts exactly there.
    """
    k = len(pts[0])
    found: Dict[Tuple[int, ...], IntVector] = {}
    for S in combinations(range(len(pts)), k):
        w = _normal([sub(pts[i], pts[S[0]]) for i in S[1:]], k)
        if w is None:
            continue
        vals = [dot(w, p) for p in pts]
        h = vals[S[0]]
        if all(x >= h for x in vals):
            w, vals, h = tuple(-x for x in w), [-x for x in vals], -h
        elif not all(x <= h for x in vals):
            continue
        F = tuple(i for i, x in enumerate(vals) if x == h)
        if F not in found:
            g = gcd(*w)
            found[F] = tuple(x // g for x in w)
    return found


def _facets(pts: Sequence[IntVector]) -> List[Tuple[int, ...]]:
    """Facets of a full-dimensional point configuration in Z^k, as index sets."""
    return list(facet_normals(pts))


def _triangulate(pts: Sequence[IntVector]) -> List[Tuple[int, ...]]:
    """Pulling triangulation of a full-dimensional configuration in Z^k."""
    k = len(pts[0])
    if k == 0:
        return [(0,)]
    if len(pts) == k + 1:
        return [tuple(range(k + 1))]
    simplices = []
    for F in _facets(pts):
        if 0 in F:
            continue
        sub_pts = [pts[i] for i in F]
        frame = AffineFrame(sub_pts)
        local = [frame.coords(p) for p in sub_pts]
        for s in _triangulate(local):
            simplices.append((0,) + tuple(F[i] for i in s))
    return simplices


def normalized_volume(points: Sequence[Sequence[int]]) -> int:
    """k!·(Euclidean volume) of conv(points) in the lattice of its affine span."""
    pts = list(Support.of(points).points)
    frame = AffineFrame(pts)
    local = [frame.coords(p) for p in pts]
    if frame.dim == 0:
        return 1
    total = 0
    for s in _triangulate(local):
        base = local[s[0]]
        total += abs(linalg.det([sub(local[i], base) for i in s[1:]]))
    return total


def cell_lattice_volume(C: Union[LatticePolytope, Support, Sequence[Sequence[int]]]) -> int:
    """Lattice-normalized volume of a lattice polytope in its affine span.

    Segments get their lattice length, a unimodular simplex gets 1.
    """
    return normalized_volume(_as_points(C))


def euclidean_volume(points: Sequence[Sequence[int]]) -> Fraction:
    """Euclidean volume of a full-dimensional lattice polytope in R^n."""
    pts = list(Support.of(points).points)
    n = len(pts[0])
    if affine_dim(pts) < n:
        return Fraction(0)
    return Fraction(normalized_volume(pts), factorial(n))
