"""Command-line front end.

Exit codes: 0 success, 1 domain failure (JSON diagnostic on stdout),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

import numpy as np

from . import io
from .certificates import certificate_from_json
from .certificates import dumps as cert_dumps
from .errors import RainbowError
from .expansion import ForbiddenSet, measure_expansion
from .experiment import load_config, read_rows, run_threshold_scan, summarize, validate_csv
from .generators import GenSpec
from .graph import induced_subgraph, stats
from .omega import OmegaFunction, brute_force_maximal, extract_maximal
from .search import SearchParams, build_tkt, connect, find_rainbow_cycle
from .verify import cross_check, rainbow_cycle_oracle, verify_certificate


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.replace(",", " ").split()] if text else []


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pc", type=float, default=0.5, help="color sampling probability p_c")
    p.add_argument("--lambda", dest="lam", type=float, default=1.0)
    p.add_argument("--rounds", type=int, default=None, help="sprinkling rounds (default: from n, capped by --max-len)")
    p.add_argument("--retries", type=int, default=3)
    p.add_argument("--max-len", type=int, default=64)
    p.add_argument("--no-extract", action="store_true", help="search the whole graph, skip log-maximal extraction")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    return p


def _params(args) -> SearchParams:
    return SearchParams(
        p_c=args.pc,
        lam=args.lam,
        rounds=args.rounds,
        max_len=args.max_len,
        retries=args.retries,
        seed=args.seed,
        extract=not args.no_extract,
    )


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _print_json(obj) -> None:
    print(json.dumps(obj))


# -- subcommands -----------------------------------------------------------------


def cmd_gen(args) -> int:
    spec = GenSpec(args.family, tuple(args.args), seed=args.seed)
    g = spec.generate()
    _emit(args, io.dumps(g))
    if args.output:
        summary = {"family": args.family, "n": g.n, "m": g.m, "colors": g.color_count, "path": args.output}
        print(json.dumps(summary) if args.json else f"wrote {g.n} vertices, {g.m} edges to {args.output}")
    return 0


def cmd_stats(args) -> int:
    g = io.load(args.graph)
    s = stats(g)
    if args.json:
        _print_json({**s.to_json(), "colors": g.color_count})
    else:
        print(f"n={s.n} m={s.m} avg_degree={s.avg_degree} ({float(s.avg_degree):.4f}) "
              f"min_degree={s.min_degree} max_degree={s.max_degree}")
    return 0


def cmd_maximal(args) -> int:
    g = io.load(args.graph)
    omega = OmegaFunction(args.omega, args.alpha)
    res = brute_force_maximal(g, omega) if args.brute else extract_maximal(g, omega)
    _print_json(res.to_json())
    return 0


def cmd_expand(args) -> int:
    g = io.load(args.graph)
    if args.set:
        B = _int_list(args.set)
    else:
        B = np.random.default_rng(args.seed).choice(g.n, size=args.random_set, replace=False).tolist()
    phi = ForbiddenSet(_int_list(args.forbid_vertices), _int_list(args.forbid_colors))
    report = measure_expansion(g, B, phi, args.pc, args.trials, args.seed)
    _print_json({**report.to_json(), "B": sorted(B)})
    return 0


def cmd_connect(args) -> int:
    g = io.load(args.graph)
    phi = ForbiddenSet(_int_list(args.forbid_vertices), _int_list(args.forbid_colors))
    path = connect(g, args.u, args.v, phi, _params(args))
    _emit(args, cert_dumps(path))
    return 0


def cmd_find_cycle(args) -> int:
    g = io.load(args.graph)
    _emit(args, cert_dumps(find_rainbow_cycle(g, _params(args))))
    return 0


def cmd_find_tkt(args) -> int:
    g = io.load(args.graph)
    _emit(args, cert_dumps(build_tkt(g, args.t, _params(args))))
    return 0


def cmd_verify(args) -> int:
    g = io.load(args.graph)
    with open(args.certificate, encoding="utf-8") as fh:
        cert = certificate_from_json(json.load(fh))
    verdict = verify_certificate(g, cert)
    for code, detail in verdict.violations:
        _print_json({"code": code, "detail": detail})
    if verdict.ok:
        _print_json({"ok": True})
        return 0
    return 1


def cmd_oracle_cycle(args) -> int:
    g = io.load(args.graph)
    cycle = rainbow_cycle_oracle(g, max_edges=args.max_edges, max_vertices=args.max_vertices)
    if cycle is None:
        _print_json({"result": "none"})
    else:
        _print_json({"result": "cycle", **cycle.to_json()})
    return 0


def cmd_cross_check(args) -> int:
    g = io.load(args.graph)
    report = cross_check(g, _params(args), args.trials)
    _print_json(report.to_json())
    return 0 if report.consistent else 1


def cmd_subgraph(args) -> int:
    g = io.load(args.graph)
    sub, _ = induced_subgraph(g, _int_list(args.vertices))
    _emit(args, io.dumps(sub))
    return 0


def cmd_scan(args) -> int:
    config = load_config(args.config)
    if args.output:
        config.output = args.output
    rows = run_threshold_scan(config)
    problems = validate_csv(config.output)
    summary = {
        "output": config.output,
        "new_rows": len(rows),
        "success_fraction": {str(k): v for k, v in summarize(read_rows(config.output)).items()},
        "schema_problems": problems,
    }
    if args.json:
        _print_json(summary)
    else:
        print(f"{config.output}: {len(rows)} new rows")
        for n, frac in summary["success_fraction"].items():
            print(f"  n={n}: success {frac:.2f}")
    return 1 if problems else 0


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="rainbowsub", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a colored graph")
    p.add_argument("family", choices=["hypercube", "jung", "random", "complete"])
    p.add_argument("args", nargs="+", type=float, help="hypercube D | jung COPIES SIDE | random N DEGREE | complete N")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("stats", parents=[common], help="vertex/edge counts and degrees")
    p.add_argument("graph")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("maximal", parents=[common], help="log-maximal (or omega-maximal) subgraph")
    p.add_argument("graph")
    p.add_argument("--omega", choices=["log2", "power"], default="log2")
    p.add_argument("--alpha", type=float, default=0.5, help="exponent for --omega power")
    p.add_argument("--brute", action="store_true", help="exhaustive search (n <= 20)")
    p.set_defaults(func=cmd_maximal)

    p = sub.add_parser("expand", parents=[common], help="measure restricted-neighborhood expansion")
    p.add_argument("graph")
    p.add_argument("--set", default="", help="comma-separated vertex set B")
    p.add_argument("--random-set", type=int, default=2, help="size of a seeded random B when --set is absent")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--forbid-vertices", default="")
    p.add_argument("--forbid-colors", default="")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("connect", parents=[common], help="rainbow path between two vertices")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.add_argument("graph")
    p.add_argument("--forbid-vertices", default="")
    p.add_argument("--forbid-colors", default="")
    p.set_defaults(func=cmd_connect)

    p = sub.add_parser("find-cycle", parents=[common], help="search for a rainbow cycle")
    p.add_argument("graph")
    p.set_defaults(func=cmd_find_cycle)

    p = sub.add_parser("find-tkt", parents=[common], help="search for a rainbow TK_t")
    p.add_argument("t", type=int)
    p.add_argument("graph")
    p.set_defaults(func=cmd_find_tkt)

    p = sub.add_parser("verify", parents=[common], help="check a certificate against a graph")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle-cycle", parents=[common], help="exhaustive rainbow cycle search (small graphs)")
    p.add_argument("graph")
    p.add_argument("--max-edges", type=int, default=64)
    p.add_argument("--max-vertices", type=int, default=20)
    p.set_defaults(func=cmd_oracle_cycle)

    p = sub.add_parser("cross-check", parents=[common], help="randomized search vs exhaustive oracle")
    p.add_argument("graph")
    p.add_argument("--trials", type=int, default=20)
    p.set_defaults(func=cmd_cross_check)

    p = sub.add_parser("subgraph", parents=[common], help="induced subgraph on a vertex list")
    p.add_argument("graph")
    p.add_argument("vertices")
    p.set_defaults(func=cmd_subgraph)

    p = sub.add_parser("scan", parents=[common], help="threshold scan from a key=value config file")
    p.add_argument("config")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gen":
        args.args = [int(a) if a == int(a) else a for a in args.args]
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return args.func(args)
    except RainbowError as exc:
        _print_json(exc.to_json())
        return 1
    except OSError as exc:
        _print_json({"error": "IoError", "detail": str(exc)})
        return 1
    except ValueError as exc:
        _print_json({"error": "BadArgument", "detail": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
