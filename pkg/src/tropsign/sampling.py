"""Random problem instances for experiments and tests."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from . import linalg
from .lattice import IntVector


@dataclass(frozen=True)
class TupleConfig:
    """Shape of random polytope tuples: n polytopes in Z^n, points in [0, box]^n."""

    n: int = 2
    min_points: int = 2
    max_points: int = 4
    box: int = 2
    zeta_range: int = 2


def random_points(rng: np.random.Generator, n: int, k: int, box: int) -> List[IntVector]:
    pts = {tuple(int(x) for x in rng.integers(0, box + 1, size=n)) for _ in range(k)}
    while len(pts) < min(k, 2):
        pts.add(tuple(int(x) for x in rng.integers(0, box + 1, size=n)))
    return sorted(pts)


def random_tuple(rng: np.random.Generator, cfg: TupleConfig = TupleConfig()):
    """(point sets, zeta) with zeta != 0."""
    sets = [random_points(rng, cfg.n, int(rng.integers(cfg.min_points, cfg.max_points + 1)), cfg.box)
            for _ in range(cfg.n)]
    zeta: Tuple[int, ...] = (0,) * cfg.n
    while not any(zeta):
        zeta = tuple(int(x) for x in rng.integers(-cfg.zeta_range, cfg.zeta_range + 1, size=cfg.n))
    return sets, zeta


def random_exponent_matrix(rng: np.random.Generator, n: int, max_det: int = 12,
                           entry: int = 3) -> List[List[int]]:
    """Integer n×n matrix with 0 < |det| <= max_det."""
    while True:
        M = rng.integers(-entry, entry + 1, size=(n, n)).tolist()
        d = linalg.det(M)
        if d and abs(d) <= max_det:
            return M


def random_grading(rng: np.random.Generator, size: int, high: int = 6) -> Tuple[int, ...]:
    return tuple(int(x) for x in rng.integers(1, high + 1, size=size))


def dense_supports(d0: int, d1: int):
    return (tuple((i,) for i in range(d0 + 1)), tuple((i,) for i in range(d1 + 1)))


def random_f2_vectors(rng: np.random.Generator, n: int, count: Optional[int] = None) -> List[Tuple[int, ...]]:
    count = n + 1 if count is None else count
    return [tuple(int(x) for x in row) for row in rng.integers(0, 2, size=(count, n))]
