"""Compare the leading-coefficient sign law with the Sylvester determinant.

    python3 scripts/sign_law_sweep.py [--pairs 50] [--max-degree 3] [--seed 0]
"""

from __future__ import annotations

import argparse
import time
from itertools import product

import numpy as np

from tropsign.errors import GradingTie, NotTwoDeveloped
from tropsign.resultant import (Grading, ResultantInput, leading_coefficient, leading_sign_ratio,
                                resultant_vertices, univariate_resultant)
from tropsign.sampling import dense_supports, random_grading


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=int, default=50)
    ap.add_argument("--max-degree", type=int, default=3)
    ap.add_argument("--high", type=int, default=6, help="largest grading weight")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    start = time.perf_counter()
    degrees = range(1, args.max_degree + 1)
    agree = disagree = undeveloped = 0
    for d0, d1 in product(degrees, degrees):
        inp = ResultantInput(dense_supports(d0, d1))
        R = univariate_resultant(*inp.supports)
        verts = resultant_vertices(inp, 200)
        done = 0
        while done < args.pairs:
            g, s = (Grading(random_grading(rng, d0 + d1 + 2, args.high)) for _ in range(2))
            try:
                oracle = leading_coefficient(R, g)[1] * leading_coefficient(R, s)[1]
            except GradingTie:
                continue
            done += 1
            try:
                ok = leading_sign_ratio(inp, g, s, vertices=verts).ratio == oracle
            except NotTwoDeveloped:
                undeveloped += 1
                continue
            agree += ok
            disagree += not ok
        print(f"d0={d0} d1={d1}: done", flush=True)
    print(f"agree {agree}, disagree {disagree}, not 2-developed {undeveloped}, "
          f"{time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
