"""Acceptance suite: nine end-to-end checks, each with a wall-clock budget.

Run with pytest (a summary line per check is printed at the end) or directly:

    python3 tests/test_acceptance.py
"""

from __future__ import annotations

import time
from itertools import product
from typing import Callable, Dict, List, Tuple

import numpy as np
import pytest

from tropsign.errors import GradingTie
from tropsign.f2 import F2Matrix, det2, det2_block, det2_oracle, f2_rank
from tropsign.lattice import convex_hull, minkowski_sum_all
from tropsign.mvol import brute_force_developed, is_2_developed, mv2
from tropsign.resultant import (Grading, ResultantInput, leading_coefficient, leading_sign_ratio,
                                resultant_vertices, univariate_resultant)
from tropsign.sampling import (TupleConfig, dense_supports, random_exponent_matrix, random_f2_vectors,
                               random_grading, random_tuple)
from tropsign.vieta import BinomialSystem, binomial_product_sign, vieta_sign

# name -> (passed, seconds, limit, detail)
RESULTS: Dict[int, Tuple[bool, float, float, str]] = {}
TITLES = {
    1: "det2 formula equals relation definition",
    2: "det2 multilinear, GL-invariant, block formula",
    3: "MV2 independent of the lifting",
    4: "MV2 symmetric and additive",
    5: "binomial sign equals (-1)^MV2",
    6: "worked resultant example",
    7: "sign law against Sylvester",
    8: "univariate Vieta reduction",
    9: "2-developedness against brute force",
}
LIMITS = {1: 10, 2: 10, 3: 60, 4: 30, 5: 60, 6: 5, 7: 120, 8: 5, 9: 60}


def _matvec(A, v):
    return tuple(sum(a & x for a, x in zip(row, v)) & 1 for row in A)


def _invertible(rng, n):
    while True:
        A = random_f2_vectors(rng, n, n)
        if f2_rank(F2Matrix.from_lists(A)) == n:
            return A


def criterion_1() -> str:
    count = 0
    for n in (1, 2, 3):
        for vecs in product(product((0, 1), repeat=n), repeat=n + 1):
            assert det2(vecs) == det2_oracle(vecs), vecs
            count += 1
    rng = np.random.default_rng(1)
    for n in (4, 5):
        for _ in range(10 ** 4):
            k = random_f2_vectors(rng, n)
            assert det2(k) == det2_oracle(k), k
            count += 1
    return f"{count} tuples"


def criterion_2() -> str:
    rng = np.random.default_rng(2)
    for _ in range(10 ** 4):
        n = int(rng.integers(1, 5))
        k = random_f2_vectors(rng, n)
        # additivity in one slot
        i = int(rng.integers(0, n + 1))
        u, w = random_f2_vectors(rng, n, 2)
        ku, kw, ks = list(k), list(k), list(k)
        ku[i], kw[i] = u, w
        ks[i] = tuple(a ^ b for a, b in zip(u, w))
        assert det2(ks) == det2(ku) ^ det2(kw)
        A = _invertible(rng, n)
        assert det2([_matvec(A, v) for v in k]) == det2(k)
    blocks = 0
    while blocks < 10 ** 3:
        n = int(rng.integers(2, 6))
        m = int(rng.integers(1, n))
        head = random_f2_vectors(rng, m)
        if f2_rank(F2Matrix.from_lists(head)) != m:
            continue
        head = [v + (0,) * (n - m) for v in head]
        tail = random_f2_vectors(rng, n, n - m)
        A = _invertible(rng, n)
        head, tail = [_matvec(A, v) for v in head], [_matvec(A, v) for v in tail]
        assert det2_block(head, tail) == det2(head + tail)
        blocks += 1
    return "10000 axiom instances, 1000 block instances"


def _developed_tuples(rng, cfg, count):
    out = []
    while len(out) < count:
        sets, zeta = random_tuple(rng, cfg)
        if is_2_developed(sets, zeta):
            out.append((sets, zeta))
    return out


def criterion_3() -> str:
    rng = np.random.default_rng(3)
    cases = (_developed_tuples(rng, TupleConfig(n=2, max_points=5, box=3), 20)
             + _developed_tuples(rng, TupleConfig(n=3, max_points=4, box=2), 5))
    ones = 0
    for sets, zeta in cases:
        base = int(rng.integers(0, 10 ** 6))
        values = {mv2(sets, zeta, seed=base + s) for s in range(50)}
        assert len(values) == 1, (sets, zeta, values)
        ones += values.pop()
    return f"25 tuples x 50 seeds, {ones} with MV2 = 1"


def criterion_4() -> str:
    rng = np.random.default_rng(4)
    cfg = TupleConfig(n=2, max_points=4, box=2)
    done = tried = 0
    while done < 100:
        tried += 1
        (P, R), zeta = random_tuple(rng, cfg)
        (Q, _), _ = random_tuple(rng, cfg)
        PQ = minkowski_sum_all([convex_hull(P), convex_hull(Q)]).points
        pairs = [(P, R), (Q, R), (PQ, R)]
        if not all(is_2_developed(list(t), zeta) for t in pairs):
            continue
        a, b, c = (mv2(list(t), zeta) for t in pairs)
        assert c == a ^ b
        assert mv2([R, P], zeta) == a and mv2([R, Q], zeta) == b
        done += 1
    return f"100 triples ({tried} drawn)"


def criterion_5() -> str:
    rng = np.random.default_rng(5)
    for n in (1, 2, 3):
        for _ in range(200):
            M = random_exponent_matrix(rng, n, max_det=12)
            a = (0,) * n
            while not any(a):
                a = tuple(int(x) for x in rng.integers(-4, 5, size=n))
            segments = [[(0,) * n, tuple(row)] for row in M]
            expected = binomial_product_sign(BinomialSystem(tuple(map(tuple, M))), a)
            assert expected == (-1) ** mv2(segments, a), (M, a)
            assert vieta_sign(segments, a) == expected
    return "600 systems"


def criterion_6() -> str:
    inp = ResultantInput(dense_supports(1, 2))
    verts = {v.exponents for v in resultant_vertices(inp, 200)}
    assert verts == {(2, 0, 0, 0, 1), (0, 2, 1, 0, 0), (1, 1, 0, 1, 0)}
    gamma, sigma, delta = Grading((2, 1, 1, 1, 2)), Grading((1, 2, 2, 1, 1)), Grading((2, 2, 1, 2, 1))
    r = leading_sign_ratio(inp, gamma, sigma)
    assert (r.ratio, r.mv2) == (1, 0)
    r = leading_sign_ratio(inp, gamma, delta)
    assert (r.ratio, r.mv2) == (-1, 1)
    R = univariate_resultant(*inp.supports)
    target = {(2, 0, 0, 0, 1): 1, (0, 2, 1, 0, 0): 1, (1, 1, 0, 1, 0): -1}
    assert R in (target, {m: -c for m, c in target.items()})
    return "vertices, both ratios, Sylvester"


def criterion_7() -> str:
    rng = np.random.default_rng(7)
    total = 0
    for d0, d1 in product((1, 2, 3), repeat=2):
        inp = ResultantInput(dense_supports(d0, d1))
        R = univariate_resultant(*inp.supports)
        verts = resultant_vertices(inp, 200)
        size = d0 + d1 + 2
        valid = 0
        while valid < 50:
            g, s = Grading(random_grading(rng, size)), Grading(random_grading(rng, size))
            try:
                oracle = leading_coefficient(R, g)[1] * leading_coefficient(R, s)[1]
            except GradingTie:
                continue
            assert leading_sign_ratio(inp, g, s, vertices=verts).ratio == oracle, (d0, d1, g, s)
            valid += 1
        total += valid
    return f"{total} grading pairs"


def criterion_8() -> str:
    count = 0
    for d in range(1, 9):
        for a in range(-8, 9):
            if a == 0:
                continue
            assert vieta_sign([[(0,), (d,)]], (a,)) == (-1) ** (d * a)
            count += 1
    return f"{count} pairs (a = 0 is rejected by design)"


def criterion_9() -> str:
    rng = np.random.default_rng(9)
    developed = 0
    for _ in range(50):
        sets, zeta = random_tuple(rng, TupleConfig(n=2, max_points=4, box=2))
        verdict = bool(is_2_developed(sets, zeta))
        assert verdict == (brute_force_developed(sets, zeta, 6) is None), (sets, zeta)
        developed += verdict
    return f"50 tuples, {developed} developed"


CRITERIA: Dict[int, Callable[[], str]] = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9,
}


def evaluate(k: int) -> Tuple[bool, str]:
    start = time.perf_counter()
    try:
        detail = CRITERIA[k]()
        ok = True
    except AssertionError as exc:
        detail, ok = f"mismatch: {exc}", False
    elapsed = time.perf_counter() - start
    if ok and elapsed >= LIMITS[k]:
        ok, detail = False, f"{detail}; too slow"
    RESULTS[k] = (ok, elapsed, LIMITS[k], detail)
    return ok, detail


def line(k: int) -> str:
    ok, secs, limit, detail = RESULTS[k]
    return f"criterion {k} {'PASS' if ok else 'FAIL'} [{secs:6.2f}s / {limit}s] {TITLES[k]}: {detail}"


def summary_lines() -> List[str]:
    return [line(k) for k in sorted(RESULTS)]


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    ok, detail = evaluate(k)
    print(line(k))
    assert ok, detail


if __name__ == "__main__":
    for k in sorted(CRITERIA):
        evaluate(k)
        print(line(k), flush=True)
