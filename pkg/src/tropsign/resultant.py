"""Sparse resultant combinatorics and the sign of ratios of its leading terms.

Coefficients c_{i,a} are indexed by (support index, point) in the order of
``ResultantInput.coefficients``: supports in the given order, points within a
support in lexicographic order.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Set, Tuple

from . import linalg
from .errors import GenericityFailure, GradingTie, NotTwoDeveloped
from .lattice import IntVector, LatticePolytope, Support, convex_hull, sub
from .mvol import MV2Query, is_2_developed, mixed_volume_lattice, mv2
from .subdivision import CellType, Lifting, MixedCell, induced_subdivision, is_fine, random_lifting

Polynomial = Dict[Tuple[int, ...], int]


def _dim_of_sum(supports: Sequence[Support]) -> int:
    diffs = [sub(p, A.points[0]) for A in supports for p in A.points[1:]]
    return linalg.rank(diffs)


def codim(supports: Sequence[Support], I: Sequence[int]) -> int:
    """dim(sum of A_i, i in I) - |I|."""
    I = sorted(set(I))
    if not I:
        raise ValueError("index set must be nonempty")
    return _dim_of_sum([supports[i] for i in I]) - len(I)


def tuple_codim(supports: Sequence[Support]) -> int:
    m = len(supports)
    return min(codim(supports, I) for r in range(1, m + 1) for I in combinations(range(m), r))


@dataclass(frozen=True)
class ResultantInput:
    supports: Tuple[Support, ...]

    def __post_init__(self):
        sups = tuple(A if isinstance(A, Support) else Support.of(A) for A in self.supports)
        object.__setattr__(self, "supports", sups)
        n = sups[0].ambient_dim
        if len(sups) != n + 1 or any(A.ambient_dim != n for A in sups):
            raise ValueError(f"need {n + 1} supports in Z^{n}")
        if tuple_codim(sups) != -1:
            raise ValueError("support tuple must have codimension -1")
        diffs = [sub(p, A.points[0]) for A in sups for p in A.points[1:]]
        _, D, _ = linalg.smith_normal_form(diffs)
        if any(D[i][i] != 1 for i in range(n)):
            raise ValueError("supports do not affinely generate Z^n")

    @property
    def n(self) -> int:
        return self.supports[0].ambient_dim

    @property
    def coefficients(self) -> Tuple[Tuple[int, IntVector], ...]:
        return tuple((i, p) for i, A in enumerate(self.supports) for p in A.points)

    def index(self) -> Dict[Tuple[int, IntVector], int]:
        return {c: k for k, c in enumerate(self.coefficients)}


@dataclass(frozen=True)
class ResultantVertex:
    exponents: Tuple[int, ...]
    seed: Optional[int] = field(default=None, compare=False)


def resultant_vertex_from_lifting(inp: ResultantInput, lifting: Lifting) -> ResultantVertex:
    """Exponent of c_{j,a}: total |det(edges)| over the cells a + (n segments).

    In a fine subdivision a cell whose face j is a vertex and whose other
    faces are not all segments contributes nothing.
    """
    cells = induced_subdivision(inp.supports, lifting)
    if not is_fine(cells):
        raise GenericityFailure("lifting does not induce a fine subdivision")
    idx = inp.index()
    exps = [0] * len(idx)
    for c in cells:
        if c.cell_type is not CellType.SEMI_MIXED:
            continue
        j = next(i for i, F in enumerate(c.faces) if len(F) == 1)
        exps[idx[(j, c.faces[j][0])]] += abs(linalg.det(list(c.edges())))
    return ResultantVertex(tuple(exps), lifting.seed)


def resultant_vertices(inp: ResultantInput, budget: int = 200, seed: int = 0) -> List[ResultantVertex]:
    """Distinct vertices from the liftings of seeds seed, ..., seed+budget-1."""
    found: Dict[Tuple[int, ...], ResultantVertex] = {}
    for s in range(seed, seed + budget):
        try:
            v = resultant_vertex_from_lifting(inp, random_lifting(inp.supports, s))
        except GenericityFailure:
            continue
        found.setdefault(v.exponents, v)
    return [found[k] for k in sorted(found)]


@dataclass(frozen=True)
class Grading:
    """Strictly positive integer weight per coefficient, in coefficient order."""

    weights: Tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if any(x < 1 for x in w):
            raise ValueError("grading weights must be >= 1")
        object.__setattr__(self, "weights", w)

    def value(self, exponents: Sequence[int]) -> int:
        return sum(a * b for a, b in zip(self.weights, exponents))


@dataclass(frozen=True)
class KhovanskiiPolytopes:
    polytopes: Tuple[LatticePolytope, ...]
    point_sets: Tuple[Tuple[IntVector, ...], ...]


def khovanskii_polytopes(inp: ResultantInput, gamma: Grading, sigma: Grading) -> KhovanskiiPolytopes:
    """P_i = conv{(a, alpha_{i,a})} ∪ {(a, -beta_{i,a})} in Z^{n+1}."""
    coeffs = inp.coefficients
    if len(gamma.weights) != len(coeffs) or len(sigma.weights) != len(coeffs):
        raise ValueError(f"gradings need {len(coeffs)} weights")
    sets: List[List[IntVector]] = [[] for _ in inp.supports]
    for (i, a), al, be in zip(coeffs, gamma.weights, sigma.weights):
        sets[i] += [a + (al,), a + (-be,)]
    point_sets = tuple(tuple(sorted(S)) for S in sets)
    return KhovanskiiPolytopes(tuple(convex_hull(S) for S in point_sets), point_sets)


def _unique_max(grading: Grading, vertices: Sequence[ResultantVertex]) -> ResultantVertex:
    vals = [grading.value(v.exponents) for v in vertices]
    top = max(vals)
    winners = [v for v, x in zip(vertices, vals) if x == top]
    if len(winners) > 1:
        raise GradingTie("grading does not select a unique vertex",
                         {"grading": list(grading.weights),
                          "vertices": [list(v.exponents) for v in winners]})
    return winners[0]


@dataclass(frozen=True)
class SignRatio:
    ratio: int
    mixed_volume: int
    mv2: int
    seed: int

    @property
    def mv_parity(self) -> int:
        return self.mixed_volume & 1


def leading_sign_ratio(inp: ResultantInput, gamma: Grading, sigma: Grading, seed: int = 0, *,
                       verify: bool = True, budget: int = 200,
                       vertices: Optional[Sequence[ResultantVertex]] = None) -> SignRatio:
    """Sign of r_gamma / r_sigma as (-1)^MV(P) · (-1)^MV2(P; e_{n+1}).

    With ``verify`` each grading must select a unique vertex among the sampled
    resultant vertices; otherwise this is taken on trust with a warning.
    """
    if verify:
        if vertices is None:
            vertices = resultant_vertices(inp, budget, seed)
        _unique_max(gamma, vertices)
        _unique_max(sigma, vertices)
    else:
        warnings.warn("gradings assumed to select vertices of the Newton polytope", stacklevel=2)
    K = khovanskii_polytopes(inp, gamma, sigma)
    zeta = (0,) * inp.n + (1,)
    rep = is_2_developed(K.polytopes, zeta)
    if not rep:
        raise NotTwoDeveloped("Khovanskii polytopes are not 2-developed", {"witness": list(rep.witness)})
    mv = mixed_volume_lattice(K.polytopes, seed)
    m2 = mv2(MV2Query(K.polytopes, zeta), seed=seed, check=False)
    ratio = -1 if (mv + m2) & 1 else 1
    return SignRatio(ratio, mv, m2, seed)


def coefficient_names(inp_or_degrees) -> List[str]:
    """a_0, a_1, ... for the first support, b_0, ... for the second, and so on."""
    if isinstance(inp_or_degrees, ResultantInput):
        sizes = [len(A) for A in inp_or_degrees.supports]
    else:
        sizes = [d + 1 for d in inp_or_degrees]
    names = []
    for i, k in enumerate(sizes):
        names += [f"{chr(ord('a') + i)}_{j}" for j in range(k)]
    return names


def _dense_degree(A: Support) -> int:
    pts = [p[0] for p in A.points] if A.ambient_dim == 1 else None
    if pts is None or pts != list(range(len(pts))):
        raise ValueError("univariate oracle needs a dense support {0, ..., d}")
    return len(pts) - 1


def univariate_resultant(f_support: Support, g_support: Support) -> Polynomial:
    """Sylvester determinant as {exponent vector over (a_0..a_d0, b_0..b_d1): coefficient}.

    Rows hold f's coefficients from a_{d0} down to a_0, shifted, then g's.
    """
    import sympy

    d0 = _dense_degree(f_support if isinstance(f_support, Support) else Support.of(f_support))
    d1 = _dense_degree(g_support if isinstance(g_support, Support) else Support.of(g_support))
    a = sympy.symbols(f"a_0:{d0 + 1}")
    b = sympy.symbols(f"b_0:{d1 + 1}")
    size = d0 + d1
    rows = []
    for k in range(d1):
        rows.append([0] * k + [a[d0 - j] for j in range(d0 + 1)] + [0] * (size - k - d0 - 1))
    for k in range(d0):
        rows.append([0] * k + [b[d1 - j] for j in range(d1 + 1)] + [0] * (size - k - d1 - 1))
    det = sympy.Matrix(rows).det(method="berkowitz")
    poly = sympy.Poly(sympy.expand(det), *a, *b)
    return {tuple(int(e) for e in mon): int(c) for mon, c in sorted(poly.terms())}


def leading_coefficient(R: Mapping[Tuple[int, ...], int], w: Grading) -> Tuple[Tuple[int, ...], int]:
    """The w-maximal monomial of R and its coefficient."""
    terms = [(m, c) for m, c in R.items() if c]
    vals = [w.value(m) for m, _ in terms]
    top = max(vals)
    winners = [t for t, x in zip(terms, vals) if x == top]
    if len(winners) > 1:
        raise GradingTie("grading attains its maximum at several monomials",
                         {"grading": list(w.weights), "vertices": [list(m) for m, _ in winners]})
    return winners[0]


def format_polynomial(R: Mapping[Tuple[int, ...], int], names: Sequence[str]) -> List[dict]:
    """Canonical term list: exponent-descending order, one dict per term."""
    out = []
    for mon in sorted(R, reverse=True):
        c = R[mon]
        if not c:
            continue
        text = "*".join(f"{x}^{e}" if e > 1 else x for x, e in zip(names, mon) if e) or "1"
        out.append({"coefficient": c, "exponents": list(mon), "monomial": text})
    return out
