"""Recompute every number of the two-polynomial worked example.

    python3 scripts/reproduce_example.py
"""

from __future__ import annotations

from tropsign.resultant import (Grading, ResultantInput, coefficient_names, format_polynomial,
                                leading_coefficient, leading_sign_ratio, resultant_vertices,
                                univariate_resultant)
from tropsign.sampling import dense_supports

GRADINGS = {
    "gamma": Grading((2, 1, 1, 1, 2)),
    "sigma": Grading((1, 2, 2, 1, 1)),
    "delta": Grading((2, 2, 1, 2, 1)),
}


def main() -> None:
    inp = ResultantInput(dense_supports(1, 2))
    names = coefficient_names([1, 2])
    print("Newton polytope vertices:")
    for v in resultant_vertices(inp, 200):
        print("  ", v.exponents)
    R = univariate_resultant(*inp.supports)
    print("Sylvester resultant:", " ".join(f"{t['coefficient']:+d}*{t['monomial']}"
                                           for t in format_polynomial(R, names)))
    for name, g in GRADINGS.items():
        mono, c = leading_coefficient(R, g)
        print(f"leading term under {name}: {c:+d} at {mono}")
    for other in ("sigma", "delta"):
        r = leading_sign_ratio(inp, GRADINGS["gamma"], GRADINGS[other])
        print(f"r_gamma / r_{other} = {r.ratio:+d}  (MV = {r.mixed_volume}, MV2 = {r.mv2})")


if __name__ == "__main__":
    main()
