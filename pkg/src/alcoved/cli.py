"""Command-line front end.

Exit codes: 0 success, 1 user error, 2 violated mathematical identity,
3 enumeration budget exhausted.
"""

import argparse
import json
import random
import sys
from fractions import Fraction

from . import geometry, groebner, polytope, rootsys, statistics, weyl
from .errors import BudgetExceededError, DefectError, UserInputError

DEFAULT_SELFCHECK_SEED = 20240521


def _jsonable(value):
    """Recursively convert library values to JSON-friendly structures."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, statistics.CosetClass):
        return "(" + ",".join(str(_jsonable(x)) for x in value.frac) + ")"
    if isinstance(value, statistics.GroupAlgebraElement):
        return {
            _jsonable(cls): list(poly)
            for cls, poly in sorted(
                value.coeffs.items(), key=lambda kv: str(_jsonable(kv[0]))
            )
        }
    if isinstance(value, dict):
        return {str(_jsonable(k)): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    return str(value)


def _emit(report: dict, as_json: bool) -> None:
    report = _jsonable(report)
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    for key, value in report.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        print(f"{key}: {value}")


def _build(args) -> rootsys.RootSystemData:
    if args.type is None or args.rank is None:
        raise UserInputError("this subcommand needs --type and --rank")
    return rootsys.build(args.type, args.rank)


def _load_polytope(args):
    if args.spec is None:
        raise UserInputError("this subcommand needs --spec file.json")
    try:
        with open(args.spec, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UserInputError(f"cannot read {args.spec}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UserInputError(f"{args.spec} is not valid JSON: {exc}") from exc
    return polytope.spec_to_polytope(data)


def _require(report: dict, keys) -> None:
    """Raise DefectError when any named flag in the report is false."""
    failed = [k for k in keys if not report.get(k)]
    if failed:
        raise DefectError("identity check failed: " + ", ".join(failed))


# -- subcommands ---------------------------------------------------------
def _cmd_info(args) -> dict:
    return rootsys.info_dict(_build(args))


def _cmd_enumerate(args) -> dict:
    rs = _build(args)
    elements = weyl.enumerate_weyl(rs, budget=args.budget)
    expected = rootsys.weyl_order(rs)
    report = {
        "type": rs.type_label,
        "rank": rs.rank,
        "count": len(elements),
        "order_formula": expected,
        "formula_holds": len(elements) == expected,
        "length_histogram": _length_histogram(elements),
    }
    _require(report, ["formula_holds"])
    return report


def _length_histogram(elements) -> dict:
    hist = {}
    for w in elements:
        hist[w.word_length] = hist.get(w.word_length, 0) + 1
    return dict(sorted(hist.items()))


def _cmd_stats(args) -> dict:
    rs = _build(args)
    W = weyl.enumerate_weyl(rs, budget=args.budget)
    report = {
        "type": rs.type_label,
        "rank": rs.rank,
        "hypersimplex": statistics.hypersimplex_statistic_check(rs, W),
        "double_coset": statistics.double_coset_check(rs, W),
        "cmaj_twist": statistics.cmaj_twist_check(rs, W),
    }
    _require(report["hypersimplex"], [
        "coset_identity_holds",
        "element_identity_holds",
        "cdes_constant_on_cosets",
        "generating_function_holds",
    ])
    _require(report["double_coset"], ["holds"])
    _require(report["cmaj_twist"], ["holds", "inverse_symmetry_holds"])
    return report


def _cmd_qweyl(args) -> dict:
    rs = _build(args)
    report = statistics.qweyl_check(rs, weyl.enumerate_weyl(rs, budget=args.budget))
    _require(report, ["identity_holds", "scalar_holds"])
    return report


def _cmd_volume(args) -> dict:
    P = _load_polytope(args)
    return {
        "type": P.rs.type_label,
        "rank": P.rs.rank,
        "is_empty": P.is_empty,
        "bounds": [list(b) for b in P.bounds],
        "volume": polytope.volume(P, budget=args.budget),
        "lattice_points": polytope.lattice_point_count(P, budget=args.budget),
    }


def _cmd_vol_identity(args) -> dict:
    report = polytope.volume_identity_check(_load_polytope(args), budget=args.budget)
    _require(report, ["identity_holds"])
    return report


def _cmd_hypersimplex(args) -> dict:
    rs = _build(args)
    indices = [args.k] if args.k is not None else list(range(1, rs.h_star))
    volumes = {}
    for k in indices:
        volumes[k] = polytope.volume(
            polytope.hypersimplex(rs, k), budget=args.budget
        )
    return {"type": rs.type_label, "rank": rs.rank, "volumes": volumes}


def _cmd_thick_check(args) -> dict:
    from itertools import product

    rs = _build(args)
    cases = 0
    for b in product((1, 2), repeat=rs.rank):
        top = sum(a * bi for a, bi in zip(rs.marks, b))
        for k in range(0, top + 1):
            for K in range(k, top + 1):
                report = polytope.thick_identity_check(
                    rs, b, k, K, budget=args.budget
                )
                _require(report, ["identity_holds"])
                cases += 1
    return {
        "type": rs.type_label,
        "rank": rs.rank,
        "cases": cases,
        "identity_holds": True,
    }


def _cmd_groebner(args) -> dict:
    P = _load_polytope(args)
    basis = groebner.groebner_basis(P)
    return {
        "type": P.rs.type_label,
        "rank": P.rs.rank,
        "vertices": [list(v) for v in groebner.polytope_vertices(P)],
        "binomials": [
            {
                "lead": [list(v) for v in binomial.lead],
                "trail": [list(v) for v in binomial.trail],
            }
            for binomial in basis
        ],
    }


def _cmd_triangulate(args) -> dict:
    P = _load_polytope(args)
    simplices = groebner.triangulate(P)
    return {
        "type": P.rs.type_label,
        "rank": P.rs.rank,
        "volume": polytope.volume(P, budget=args.budget),
        "simplices": [[list(v) for v in s] for s in simplices],
    }


def _cmd_cross_table(args) -> dict:
    rs = _build(args)
    return statistics.cmaj_cross_table(rs, weyl.enumerate_weyl(rs, budget=args.budget))


def _random_polytope(rs, rng, budget):
    """A nonempty random polytope with simple-root bounds in [-2, 2]."""
    for _ in range(200):
        cons = []
        for root in rs.simple_roots:
            lo = rng.randint(-2, 1)
            cons.append((root, lo, rng.randint(lo + 1, 2)))
        P = polytope.make_polytope(rs, cons)
        if P.is_empty:
            continue
        try:
            if 0 < polytope.volume(P, budget=budget) <= 10**4:
                return P
        except BudgetExceededError:
            continue
    raise DefectError("could not draw a nonempty random polytope")


def _selfcheck_polytope(rs):
    """A small supported-type polytope for the triangulation check."""
    if rs.type_label == "D":
        cons = [(root, 0, 1) for root in rs.positive_roots]
        cons[rs.root_index(rs.simple_roots[0])] = (rs.simple_roots[0], -1, 1)
        return polytope.make_polytope(rs, cons)
    if rootsys.weyl_order(rs) <= 60:
        return polytope.adjacent_star(rs)
    return polytope.hypersimplex(rs, 1)


def _cmd_selfcheck(args) -> dict:
    rs = _build(args)
    rng = random.Random(args.seed)
    W = weyl.enumerate_weyl(rs, budget=args.budget)
    results = {}
    results["weyl_order_formula"] = len(W) == rootsys.weyl_order(rs)
    statistics.group_C(rs, W)  # validates all three descriptions of C
    results["group_C_descriptions"] = True
    results["double_coset"] = statistics.double_coset_check(rs, W)["holds"]
    twist = statistics.cmaj_twist_check(rs, W)
    results["cmaj_twist"] = twist["holds"] and twist["inverse_symmetry_holds"]
    qw = statistics.qweyl_check(rs, W)
    results["q_weyl"] = qw["identity_holds"] and qw["scalar_holds"]
    hs = statistics.hypersimplex_statistic_check(rs, W)
    results["hypersimplex_statistics"] = all(
        hs[k]
        for k in (
            "coset_identity_holds",
            "element_identity_holds",
            "cdes_constant_on_cosets",
            "generating_function_holds",
        )
    )
    vol_ok = True
    for _ in range(3):
        P = _random_polytope(rs, rng, args.budget)
        vol_ok = vol_ok and polytope.volume_identity_check(
            P, budget=args.budget
        )["identity_holds"]
    results["volume_lattice_identity"] = vol_ok
    supported = rs.type_label in ("A", "C") or (
        rs.type_label == "D" and rs.rank == 4
    )
    if supported:
        P = _selfcheck_polytope(rs)
        results["groebner_triangulation"] = len(groebner.triangulate(P)) == (
            polytope.volume(P, budget=args.budget)
        )
    else:
        results["groebner_triangulation"] = "skipped (unsupported type)"
    report = {
        "type": rs.type_label,
        "rank": rs.rank,
        "seed": args.seed,
        "checks": results,
    }
    failed = [k for k, v in results.items() if v is False]
    if failed:
        raise DefectError("selfcheck failed: " + ", ".join(failed))
    return report


_COMMANDS = {
    "info": _cmd_info,
    "enumerate": _cmd_enumerate,
    "stats": _cmd_stats,
    "qweyl": _cmd_qweyl,
    "volume": _cmd_volume,
    "vol-identity": _cmd_vol_identity,
    "hypersimplex": _cmd_hypersimplex,
    "thick-check": _cmd_thick_check,
    "groebner": _cmd_groebner,
    "triangulate": _cmd_triangulate,
    "cross-table": _cmd_cross_table,
    "selfcheck": _cmd_selfcheck,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UserInputError(message)


def _make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="alcoved", description=__doc__)
    sub = parser.add_subparsers(dest="command")
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--type", choices=list("ABCDEFG"), help="root system type")
        p.add_argument("--rank", type=int, help="root system rank")
        p.add_argument("--spec", help="polytope spec JSON file")
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--seed", type=int, default=DEFAULT_SELFCHECK_SEED)
        p.add_argument("--budget", type=int, default=10**8)
        p.add_argument("--jobs", type=int, default=1)
        if name == "hypersimplex":
            p.add_argument("--k", type=int, help="hypersimplex index")
    return parser


def run(argv) -> int:
    try:
        args = _make_parser().parse_args(argv)
        if args.command is None:
            raise UserInputError("no subcommand given")
        if args.budget <= 0:
            raise UserInputError("--budget must be positive")
        if args.jobs < 1:
            raise UserInputError("--jobs must be at least 1")
        report = _COMMANDS[args.command](args)
    except UserInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DefectError as exc:
        print(f"defect: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    _emit(report, args.json)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
