"""Command-line front end.

    tropsign <command> --input problem.json [--seed N] [--format json]

Every command prints one JSON object. Exit status 1 means the input was
malformed, 2 means a precondition (developedness, prickliness, a grading tie)
failed; both print {"error": {"kind": ..., ...}}.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .errors import PreconditionError
from .lattice import IntVector, Support, convex_hull
from .mvol import MV2Query, is_2_developed, mixed_volume_lattice, mv2_subdivision
from .resultant import (Grading, ResultantInput, coefficient_names, format_polynomial,
                        leading_sign_ratio, resultant_vertices, univariate_resultant)
from .vieta import BinomialSystem, binomial_product_sign, vieta_sign

COMMANDS = ("mv", "mv2", "check-developed", "vieta-sign", "binomial-sign",
            "res-vertices", "res-sign", "sylvester")


class MalformedInput(ValueError):
    pass


@dataclass
class Problem:
    dimension: int
    supports: List[List[IntVector]]   # as written in the file
    zeta: Optional[IntVector] = None
    gradings: Optional[Dict[str, List[int]]] = None
    seed: Optional[int] = None
    exponent_a: Optional[IntVector] = None

    @property
    def canonical(self) -> List[Support]:
        return [Support.of(S) for S in self.supports]

    def file_order(self) -> List[int]:
        """Position in the canonical coefficient order of each point as listed."""
        out, offset = [], 0
        for S in self.supports:
            srt = sorted(S)
            out += [offset + srt.index(p) for p in S]
            offset += len(S)
        return out


def _int_vector(x, n: int, what: str) -> IntVector:
    if not isinstance(x, list) or len(x) != n or not all(isinstance(c, int) and not isinstance(c, bool) for c in x):
        raise MalformedInput(f"{what} must be a list of {n} integers")
    return tuple(x)


def parse_problem(doc: Any) -> Problem:
    if not isinstance(doc, dict):
        raise MalformedInput("problem file must hold a JSON object")
    n = doc.get("dimension")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise MalformedInput("dimension must be a positive integer")
    sups = doc.get("supports")
    if not isinstance(sups, list) or not sups:
        raise MalformedInput("supports must be a nonempty list")
    supports = []
    for i, S in enumerate(sups):
        if not isinstance(S, list) or not S:
            raise MalformedInput(f"support {i} must be a nonempty list of points")
        pts = [_int_vector(p, n, f"point of support {i}") for p in S]
        if len(set(pts)) != len(pts):
            raise MalformedInput(f"support {i} repeats a point")
        supports.append(pts)
    prob = Problem(n, supports)
    if "zeta" in doc:
        prob.zeta = _int_vector(doc["zeta"], n, "zeta")
    if "exponent_a" in doc:
        prob.exponent_a = _int_vector(doc["exponent_a"], n, "exponent_a")
    if "seed" in doc:
        if not isinstance(doc["seed"], int) or isinstance(doc["seed"], bool):
            raise MalformedInput("seed must be an integer")
        prob.seed = doc["seed"]
    if "gradings" in doc:
        g = doc["gradings"]
        total = sum(len(S) for S in supports)
        if not isinstance(g, dict):
            raise MalformedInput("gradings must map names to weight lists")
        for name, w in g.items():
            _int_vector(w, total, f"grading {name!r}")
            if any(x < 1 for x in w):
                raise MalformedInput(f"grading {name!r} must be strictly positive")
        prob.gradings = {k: list(v) for k, v in g.items()}
    return prob


def _require(value, what: str):
    if value is None:
        raise MalformedInput(f"this command needs {what}")
    return value


def _sign(parity: int) -> str:
    return "-1" if parity else "+1"


def _resultant_input(prob: Problem) -> ResultantInput:
    try:
        return ResultantInput(tuple(prob.canonical))
    except ValueError as exc:
        raise MalformedInput(str(exc)) from exc


def _grading(prob: Problem, name: Optional[str], index: int) -> Tuple[str, Grading]:
    g = _require(prob.gradings, "gradings")
    names = list(g)
    if name is None:
        if len(names) <= index:
            raise MalformedInput("not enough gradings in the file")
        name = names[index]
    if name not in g:
        raise MalformedInput(f"unknown grading {name!r}")
    canon = [0] * len(g[name])
    for w, k in zip(g[name], prob.file_order()):
        canon[k] = w
    return name, Grading(tuple(canon))


def _cmd_mv(prob: Problem, args) -> Dict[str, Any]:
    if len(prob.supports) != prob.dimension:
        raise MalformedInput(f"mv needs {prob.dimension} supports")
    return {"mixed_volume": mixed_volume_lattice(prob.canonical, args.seed), "seed": args.seed}


def _cmd_mv2(prob: Problem, args) -> Dict[str, Any]:
    zeta = _require(prob.zeta, "zeta")
    try:
        query = MV2Query.of(prob.canonical, zeta)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from exc
    value, sd = mv2_subdivision(query, args.seed)
    return {"mv2": value, "sign": _sign(value), "seed": args.seed, "lifting_seed": sd.seed}


def _cmd_check_developed(prob: Problem, args) -> Dict[str, Any]:
    zeta = _require(prob.zeta, "zeta")
    if len(prob.supports) != prob.dimension:
        raise MalformedInput(f"check-developed needs {prob.dimension} supports")
    rep = is_2_developed([convex_hull(S) for S in prob.canonical], zeta)
    out: Dict[str, Any] = {"verdict": rep.verdict.value}
    if rep.witness is not None:
        out["witness"] = list(rep.witness)
    return out


def _cmd_vieta_sign(prob: Problem, args) -> Dict[str, Any]:
    a = prob.exponent_a if prob.exponent_a is not None else _require(prob.zeta, "exponent_a")
    if not any(a):
        raise MalformedInput("exponent_a must be nonzero")
    if len(prob.supports) != prob.dimension:
        raise MalformedInput(f"vieta-sign needs {prob.dimension} supports")
    s = vieta_sign(prob.canonical, a, args.seed)
    return {"sign": "+1" if s > 0 else "-1", "seed": args.seed}


def _cmd_binomial_sign(prob: Problem, args) -> Dict[str, Any]:
    a = prob.exponent_a if prob.exponent_a is not None else _require(prob.zeta, "exponent_a")
    rows = []
    for S in prob.supports:
        if len(S) != 2:
            raise MalformedInput("binomial-sign needs two-point supports")
        rows.append(tuple(q - p for p, q in zip(*sorted(S))))
    try:
        system = BinomialSystem(tuple(rows))
    except ValueError as exc:
        raise MalformedInput(str(exc)) from exc
    s = binomial_product_sign(system, a)
    return {"sign": "+1" if s > 0 else "-1"}


def _to_file_order(exps: Sequence[int], prob: Problem) -> List[int]:
    return [exps[k] for k in prob.file_order()]


def _cmd_res_vertices(prob: Problem, args) -> Dict[str, Any]:
    inp = _resultant_input(prob)
    verts = resultant_vertices(inp, args.budget, args.seed)
    out = sorted(_to_file_order(v.exponents, prob) for v in verts)
    return {"vertices": out, "seeds_used": args.budget, "seed": args.seed}


def _cmd_res_sign(prob: Problem, args) -> Dict[str, Any]:
    inp = _resultant_input(prob)
    gname, gamma = _grading(prob, args.gamma, 0)
    sname, sigma = _grading(prob, args.sigma, 1)
    r = leading_sign_ratio(inp, gamma, sigma, args.seed, budget=args.budget)
    return {"ratio": _sign(r.ratio < 0), "mv_parity": r.mv_parity, "mv2": r.mv2,
            "mixed_volume": r.mixed_volume, "gamma": gname, "sigma": sname, "seed": args.seed}


def _cmd_sylvester(prob: Problem, args) -> Dict[str, Any]:
    if prob.dimension != 1 or len(prob.supports) != 2:
        raise MalformedInput("sylvester needs two supports in dimension 1")
    f, g = prob.canonical
    try:
        R = univariate_resultant(f, g)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from exc
    names = coefficient_names([len(f) - 1, len(g) - 1])
    return {"polynomial": format_polynomial(R, names), "variables": names}


HANDLERS = {
    "mv": _cmd_mv,
    "mv2": _cmd_mv2,
    "check-developed": _cmd_check_developed,
    "vieta-sign": _cmd_vieta_sign,
    "binomial-sign": _cmd_binomial_sign,
    "res-vertices": _cmd_res_vertices,
    "res-sign": _cmd_res_sign,
    "sylvester": _cmd_sylvester,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tropsign", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", required=True, help="problem file (JSON)")
    p.add_argument("--seed", type=int, default=None,
                   help="lifting seed; defaults to $RES_SIGN_SEED, then the file's seed, then 0")
    p.add_argument("--format", choices=["json"], default="json")
    p.add_argument("--gamma", default=None, help="grading name for r_gamma (default: first)")
    p.add_argument("--sigma", default=None, help="grading name for r_sigma (default: second)")
    p.add_argument("--budget", type=int, default=200, help="liftings sampled for resultant vertices")
    return p


def _emit(obj: Dict[str, Any], stream) -> None:
    stream.write(json.dumps(obj, sort_keys=True) + "\n")


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code == 0:
            return 0
        _emit({"error": {"kind": "usage", "message": "invalid command line"}}, stdout)
        return 1
    try:
        with open(args.input) as fh:
            doc = json.load(fh)
        prob = parse_problem(doc)
        if args.seed is None:
            env = os.environ.get("RES_SIGN_SEED")
            if env is not None:
                try:
                    args.seed = int(env)
                except ValueError as exc:
                    raise MalformedInput("RES_SIGN_SEED must be an integer") from exc
            else:
                args.seed = prob.seed if prob.seed is not None else 0
        if args.budget < 0:
            raise MalformedInput("budget must be nonnegative")
        result = HANDLERS[args.command](prob, args)
    except (OSError, json.JSONDecodeError, MalformedInput) as exc:
        _emit({"error": {"kind": "malformed_input", "message": str(exc)}}, stdout)
        return 1
    except PreconditionError as exc:
        _emit({"error": exc.as_dict()}, stdout)
        return 2
    _emit(result, stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
