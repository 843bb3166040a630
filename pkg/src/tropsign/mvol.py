"""Lattice mixed volume, the 2-mixed volume and the genericity predicates.

Cones of the common refinement of the normal fans of P_1, ..., P_n are the
normal cones of faces G of S = P_1 + ... + P_n; G decomposes as the sum of the
support faces P_i^v for any v in the relative interior of its cone. Both
predicates walk over those faces:

* prickly: when no P_i^v is a vertex, every v of the cone must kill zeta,
  i.e. zeta lies in the direction space of G;
* 2-developed: when no P_i^v is a 2-vertex, the integer points of the open
  cone hit every class of L mod 2, L = (dir G)^perp ∩ Z^n, so we need
  b·zeta even for every basis vector b of L.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import List, Optional, Sequence, Tuple

from . import linalg
from .errors import NotTwoDeveloped
from .f2 import det2, reduce_mod2
from .lattice import (AffineFrame, Covector, IntVector, LatticePolytope, Support, convex_hull,
                      dot, facet_normals, sub)
from .subdivision import CellType, MixedCell, Subdivision, generic_subdivision, mixed_cells


def as_polytope(P) -> LatticePolytope:
    return P if isinstance(P, LatticePolytope) else convex_hull(P)


@dataclass(frozen=True)
class MV2Query:
    polytopes: Tuple[LatticePolytope, ...]
    zeta: IntVector

    def __post_init__(self):
        polys = tuple(as_polytope(P) for P in self.polytopes)
        n = len(self.zeta)
        if len(polys) != n or any(P.ambient_dim != n for P in polys):
            raise ValueError(f"need {n} polytopes in Z^{n}")
        object.__setattr__(self, "polytopes", polys)
        object.__setattr__(self, "zeta", tuple(int(x) for x in self.zeta))

    @classmethod
    def of(cls, point_sets, zeta) -> "MV2Query":
        return cls(tuple(point_sets), tuple(zeta))


class Verdict(enum.Enum):
    PRICKLY = "prickly"
    TWO_DEVELOPED = "two_developed"
    NEITHER = "neither"


@dataclass(frozen=True)
class DevelopednessReport:
    verdict: Verdict
    witness: Optional[Covector] = None

    def __post_init__(self):
        if (self.witness is None) != (self.verdict is not Verdict.NEITHER):
            raise ValueError("witness is required exactly when the verdict is neither")

    def __bool__(self):
        return self.verdict is not Verdict.NEITHER


def mixed_volume_lattice(polytopes: Sequence, seed: int = 0) -> int:
    """n!·MV(P_1, ..., P_n): sum of |det(edges)| over the mixed cells."""
    polys = [as_polytope(P) for P in polytopes]
    n = polys[0].ambient_dim
    if len(polys) != n:
        raise ValueError(f"need {n} polytopes in Z^{n}, got {len(polys)}")
    sd = generic_subdivision([P.vertices for P in polys], seed)
    return sum(abs(linalg.det(list(c.edges()))) for c in mixed_cells(sd.cells))


def intersection_number_2(cells: Sequence[MixedCell], zeta: Sequence[int]) -> int:
    """Sum over mixed cells of det2(e_1, ..., e_n, zeta) mod 2."""
    z = reduce_mod2(zeta)
    total = 0
    for c in cells:
        if c.cell_type is not CellType.MIXED:
            raise ValueError(f"non-mixed cell {c.faces}")
        edges = [reduce_mod2(e) for e in c.edges()]
        if len(edges) != len(z):
            raise ValueError("cell and zeta dimensions differ")
        total ^= det2(edges + [z])
    return total


def mv2_subdivision(query: MV2Query, seed: int = 0, check: bool = True) -> Tuple[int, Subdivision]:
    """MV2 together with the fine subdivision that produced it."""
    if check:
        rep = is_2_developed(query.polytopes, query.zeta)
        if not rep:
            raise NotTwoDeveloped(f"tuple is not 2-developed with respect to {query.zeta}",
                                  {"witness": list(rep.witness)})
    sd = generic_subdivision([P.vertices for P in query.polytopes], seed)
    return intersection_number_2(mixed_cells(sd.cells), query.zeta), sd


def mv2(query, zeta: Optional[Sequence[int]] = None, seed: int = 0, check: bool = True) -> int:
    """2-mixed volume; pass an MV2Query or (polytopes, zeta)."""
    if not isinstance(query, MV2Query):
        query = MV2Query.of(query, zeta)
    return mv2_subdivision(query, seed, check)[0]


@dataclass(frozen=True)
class _ConeFace:
    """A face G of the Minkowski sum with data about its normal cone."""

    points: Tuple[IntVector, ...]    # vertices of G
    others: Tuple[IntVector, ...]    # vertices of S outside G
    v0: Covector                     # integer point of the relative interior
    lattice: Tuple[Covector, ...]    # basis of (dir G)^perp ∩ Z^n
    components: Tuple[Tuple[IntVector, ...], ...]

    def into_relint(self, b: Covector) -> Covector:
        """K·v0 + b with K even and large enough to stay in the open cone."""
        g0 = self.points[0]
        K = max([abs(dot(b, sub(g0, s))) for s in self.others] + [0]) + 1
        K += K & 1
        return tuple(K * x + y for x, y in zip(self.v0, b))


def _primitive(v: Sequence[Fraction]) -> Covector:
    den = lcm(*[Fraction(x).denominator for x in v]) if v else 1
    w = [int(Fraction(x) * den) for x in v]
    g = gcd(*w) if any(w) else 1
    return tuple(x // g for x in w)


def _faces(polys: Sequence[LatticePolytope]) -> List[_ConeFace]:
    n = polys[0].ambient_dim
    verts = [P.vertices.points for P in polys]
    pts: List[IntVector] = [()]
    for V in verts:
        pts = [tuple(a + b for a, b in zip(p, q)) if p else q for p in pts for q in V]
    S = convex_hull(pts).points
    frame = AffineFrame(S)
    normals = {}
    if frame.dim:
        local = [frame.coords(p) for p in S]
        normals = {F: _primitive(frame.lift_covector(w)) for F, w in facet_normals(local).items()}
    # every proper face is an intersection of facets
    index_sets = {tuple(range(len(S)))}
    layer = set(normals)
    while layer:
        index_sets |= layer
        layer = {tuple(sorted(set(A) & set(B))) for A in layer for B in index_sets}
        layer = {F for F in layer if F} - index_sets
    out = []
    for F in sorted(index_sets, key=lambda F: (len(F), F)):
        G = [S[i] for i in F]
        rest = [S[i] for i in range(len(S)) if i not in F]
        # the normal cone of G is spanned by the normals of the facets through G
        v0 = [0] * n
        for H, w in normals.items():
            if set(F) <= set(H):
                v0 = [a + b for a, b in zip(v0, w)]
        v0 = _primitive(v0)
        vals = [dot(v0, p) for p in S]
        assert [i for i, x in enumerate(vals) if x == max(vals)] == list(F)
        eq = [sub(g, G[0]) for g in G[1:]]
        L = linalg.integer_kernel(eq, n) if eq else linalg.identity(n)
        comps = []
        for V in verts:
            vals = [dot(v0, p) for p in V]
            top = max(vals)
            comps.append(tuple(p for p, x in zip(V, vals) if x == top))
        out.append(_ConeFace(tuple(G), tuple(rest), v0, tuple(tuple(b) for b in L), tuple(comps)))
    return out


def _witness_key(v: Covector):
    return (sum(abs(x) for x in v), tuple(-x for x in v))


def _is_2_vertex(F: Sequence[IntVector]) -> bool:
    return len({reduce_mod2(p) for p in F}) == 1


def prickly_witness(polytopes: Sequence, zeta: Sequence[int], _faces_cache=None) -> Optional[Covector]:
    """A covector v with v(zeta) != 0 and no vertex among the P_i^v, or None."""
    if not any(zeta):
        raise ValueError("zeta must be nonzero")
    faces = _faces_cache or _faces([as_polytope(P) for P in polytopes])
    found = []
    for face in faces:
        if any(len(C) == 1 for C in face.components):
            continue
        if dot(face.v0, zeta):
            found.append(face.v0)
            continue
        b = next((b for b in face.lattice if dot(b, zeta)), None)
        if b is not None:
            found.append(face.into_relint(b))
    return min(found, key=_witness_key) if found else None


def is_prickly(polytopes: Sequence, zeta: Sequence[int]) -> bool:
    return prickly_witness(polytopes, zeta) is None


def developed_witness(polytopes: Sequence, zeta: Sequence[int], _faces_cache=None) -> Optional[Covector]:
    """An integer v with v(zeta) odd and no 2-vertex among the P_i^v, or None."""
    faces = _faces_cache or _faces([as_polytope(P) for P in polytopes])
    found = []
    for face in faces:
        if any(_is_2_vertex(C) for C in face.components):
            continue
        if dot(face.v0, zeta) % 2:
            found.append(face.v0)
            continue
        b = next((b for b in face.lattice if dot(b, zeta) % 2), None)
        if b is not None:
            found.append(face.into_relint(b))
    return min(found, key=_witness_key) if found else None


def is_2_developed(polytopes: Sequence, zeta: Sequence[int]) -> DevelopednessReport:
    faces = _faces([as_polytope(P) for P in polytopes])
    if any(zeta) and prickly_witness(None, zeta, faces) is None:
        return DevelopednessReport(Verdict.PRICKLY)
    w = developed_witness(None, zeta, faces)
    if w is None:
        return DevelopednessReport(Verdict.TWO_DEVELOPED)
    return DevelopednessReport(Verdict.NEITHER, w)


def brute_force_developed(polytopes: Sequence, zeta: Sequence[int], radius: int = 6) -> Optional[Covector]:
    """Search covectors in [-radius, radius]^n straight from the definition."""
    from itertools import product
    polys = [as_polytope(P) for P in polytopes]
    n = len(zeta)
    hits = []
    for v in product(range(-radius, radius + 1), repeat=n):
        if dot(v, zeta) % 2 == 0:
            continue
        comps = []
        for P in polys:
            vals = [dot(v, p) for p in P.points]
            top = max(vals)
            comps.append([p for p, x in zip(P.points, vals) if x == top])
        if not any(_is_2_vertex(C) for C in comps):
            hits.append(tuple(v))
    return min(hits, key=_witness_key) if hits else None
