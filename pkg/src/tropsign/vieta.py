"""Signs of products of monomials over the roots of a polynomial system.

For nondegenerate systems with vertex coefficients 1 the sign of prod x^a over
all roots in the torus is (-1)^MV2(P_1, ..., P_n; a). The binomial case is
solvable in closed form and serves as the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from . import linalg
from .errors import NotPrickly
from .mvol import MV2Query, mv2, prickly_witness


@dataclass(frozen=True)
class BinomialSystem:
    """Equations x^{m_i} + 1 = 0; row i of ``exponents`` is m_i."""

    exponents: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        M = tuple(tuple(int(x) for x in row) for row in self.exponents)
        n = len(M)
        if n == 0 or any(len(row) != n for row in M):
            raise ValueError("exponent matrix must be square and nonempty")
        if linalg.det(M) == 0:
            raise ValueError("singular exponent matrix")
        object.__setattr__(self, "exponents", M)

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def root_count(self) -> int:
        return abs(linalg.det(self.exponents))

    def newton_intervals(self):
        zero = (0,) * self.n
        return [(zero, m) for m in self.exponents]


def _sign(x: int) -> int:
    return -1 if x & 1 else 1


def binomial_product_sign(system: BinomialSystem, a: Sequence[int]) -> int:
    """prod x^a over the roots of x^{m_i} = -1, computed in Q/Z.

    Write x = exp(2 pi i theta). The roots are the solutions of
    M theta = (1/2, ..., 1/2) mod Z^n. With U M V = D the substitution
    theta = V phi splits this into d_j phi_j = (U h)_j mod 1, and the
    angle of the product is a·V·(sum of all phi) mod 1.
    """
    M = [list(r) for r in system.exponents]
    n = system.n
    if len(a) != n:
        raise ValueError("exponent a has the wrong length")
    U, D, V = linalg.smith_normal_form(M)
    N = system.root_count
    c = [sum(Fraction(U[j][k], 2) for k in range(n)) for j in range(n)]
    S = []
    for j in range(n):
        d = D[j][j]
        # phi_j runs over (c_j + k)/d for k < d, each value repeated N/d times
        S.append(Fraction(N, d) * (c[j] + Fraction(d - 1, 2)))
    aV = [sum(a[i] * V[i][j] for i in range(n)) for j in range(n)]
    angle = sum(x * s for x, s in zip(aV, S)) % 1
    if angle == 0:
        return 1
    if angle == Fraction(1, 2):
        return -1
    raise AssertionError(f"product of roots has angle {angle}, expected 0 or 1/2")


def vieta_sign(polytopes: Sequence, a: Sequence[int], seed: int = 0) -> int:
    """(-1)^MV2(P_1, ..., P_n; a) for an a-prickly tuple."""
    if not any(a):
        raise ValueError("a must be nonzero")
    w = prickly_witness(polytopes, a)
    if w is not None:
        raise NotPrickly(f"tuple is not prickly with respect to {tuple(a)}", {"witness": list(w)})
    return _sign(mv2(MV2Query.of(polytopes, a), seed=seed, check=False))


def univariate_vieta_check(d: int, a: int) -> int:
    """(-1)^{d a}: a monic f with f(0) = 1 has root product (-1)^d."""
    if d < 1:
        raise ValueError("degree must be positive")
    return _sign(d * a)
