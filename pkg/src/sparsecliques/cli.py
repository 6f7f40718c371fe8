"""Command line entry point: generate, list, count, verify, bench.

JSON goes to stdout, logs to stderr.  Exit codes: 0 success, 1 malformed
input, 2 capacity/budget or usage error, 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .bench import ALGOS, TRIANGLE_ALGOS, grid_points, records_to_csv, run_bench, run_count, run_triangle_lister, verify_graph
from .cliques import list_k_cliques
from .config import Budgets
from .edgelist import dump_json, format_cliques, read_certificate, read_edge_list, write_certificate, write_edge_list
from .errors import CapacityError, ConsistencyError, ContractError, MalformedInputError
from .generators import gen_lemma2, gen_lemma3, gen_standard

log = logging.getLogger("sparsecliques")

MODELS = ("lemma2", "lemma3", "complete", "complete_bipartite", "cycle", "path", "gnp")


def _budgets(args) -> Budgets:
    return Budgets(
        matrix_max_n=args.matrix_max_n,
        aux_max_vertices=args.aux_max_vertices,
        oracle_max_tuples=args.oracle_budget,
    )


_REQUIRED = {
    "lemma3": ("k", "b"), "lemma2": ("n", "m"), "complete_bipartite": ("a", "b"),
    "gnp": ("n", "p"), "complete": ("n",), "cycle": ("n",), "path": ("n",),
}


def _generate(args):
    m = args.model
    missing = [f"--{k}" for k in _REQUIRED[m] if getattr(args, k) is None]
    if missing:
        raise ContractError(f"model {m} requires {', '.join(missing)}")
    if m == "lemma3":
        return gen_lemma3(args.k, args.b, args.n_pad)
    if m == "lemma2":
        return gen_lemma2(args.n, args.m)
    if m == "complete_bipartite":
        return gen_standard(m, a=args.a, b=args.b)
    if m == "gnp":
        return gen_standard("random_gnp", n=args.n, p=args.p, seed=args.seed)
    return gen_standard(m, n=args.n)


def cmd_generate(args) -> int:
    g, cert = _generate(args)
    out = Path(args.out)
    write_edge_list(g, out.with_name(out.name + ".el"))
    write_certificate(cert, out.with_name(out.name + ".cert.json"))
    log.info("wrote %s.el (n=%d, m=%d)", out, g.n, g.m)
    return 0


def _write_or_print(text: str, out) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_list(args) -> int:
    g, _ = read_edge_list(args.input)
    if args.algo in TRIANGLE_ALGOS:
        if args.l != 3:
            raise ContractError(f"{args.algo} lists triangles only")
        cliques, _ = run_triangle_lister(g, args.algo, _budgets(args))
    elif args.algo == "kclique":
        cliques, _ = list_k_cliques(g, args.l, threads=args.threads)
    else:
        raise ContractError(f"{args.algo} does not produce a stream; use 'count'")
    _write_or_print(format_cliques(cliques), args.out)
    return 0


def cmd_count(args) -> int:
    g, _ = read_edge_list(args.input)
    report = run_count(g, args.algo, args.l, args.l1, _budgets(args), args.threads, timing=not args.no_timing)
    _write_or_print(dump_json(report.to_json()), args.out)
    return 0


def cmd_verify(args) -> int:
    g, parsed = read_edge_list(args.input)
    cert = None
    cert_path = Path(args.cert) if args.cert else Path(args.input).with_suffix(".cert.json")
    if cert_path.exists():
        cert = read_certificate(cert_path)
    checks = verify_graph(g, args.l_max, cert, _budgets(args))
    failed = [c for c in checks if c.status == "fail"]
    for c in checks:
        line = f"{c.status.upper():4}  {c.name}"
        sys.stdout.write(line + (f"  ({c.detail})" if c.detail and c.status != "pass" else "") + "\n")
    closed = sum(1 for c in checks if c.name.startswith("certificate K") and c.status == "pass")
    verdict = "FAIL" if failed else "PASS"
    sys.stdout.write(f"{verdict}: {len(checks) - len(failed)}/{len(checks)} checks, "
                     f"{closed} closed-form counts matched\n")
    return 3 if failed else 0


def cmd_bench(args) -> int:
    if args.model == "gnp":
        ps = list(args.p or [])
        points = []
        for n in args.n:
            for p in ps or [args.avg_deg / n]:
                points.extend(grid_points("gnp", n=[n], p=[p], seed=[args.seed]))
    elif args.model == "lemma3":
        points = grid_points("lemma3", k=args.k, b=args.b)
    elif args.model == "lemma2":
        points = grid_points("lemma2", n=args.n, m=args.m)
    elif args.model == "complete_bipartite":
        points = grid_points("complete_bipartite", a=args.a, b=args.b)
    else:
        points = grid_points(args.model, n=args.n)
    records = run_bench(points, args.algo, args.l, _budgets(args), args.threads)
    _write_or_print(records_to_csv(records), args.csv)
    return 0


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--matrix-max-n", type=int, default=65_536)
    p.add_argument("--aux-max-vertices", type=int, default=10**7)
    p.add_argument("--oracle-budget", type=int, default=10**8)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sparsecliques", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a fixture edge list plus certificate")
    p.add_argument("--model", choices=MODELS, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--n-pad", type=int, default=0)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="path prefix; writes PREFIX.el and PREFIX.cert.json")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("list", help="print every triangle or K_l, one per line")
    p.add_argument("input")
    p.add_argument("--algo", choices=TRIANGLE_ALGOS + ("kclique",), default="kclique")
    p.add_argument("--l", type=int, default=3)
    p.add_argument("--out")
    _common(p)
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("count", help="count K_l with one algorithm, JSON report on stdout")
    p.add_argument("input")
    p.add_argument("--algo", choices=ALGOS, default="kclique")
    p.add_argument("--l", type=int, default=3)
    p.add_argument("--l1", type=int)
    p.add_argument("--out")
    p.add_argument("--no-timing", action="store_true", help="emit millis as null for byte-stable output")
    _common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="cross-check all algorithms and the certificate on one graph")
    p.add_argument("input")
    p.add_argument("--l-max", type=int, default=4)
    p.add_argument("--cert")
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run a parameter grid and write BenchRecord CSV")
    p.add_argument("--model", choices=MODELS, required=True)
    p.add_argument("--n", type=int, nargs="+", default=[])
    p.add_argument("--m", type=int, nargs="+", default=[])
    p.add_argument("--k", type=int, nargs="+", default=[])
    p.add_argument("--a", type=int, nargs="+", default=[])
    p.add_argument("--b", type=int, nargs="+", default=[])
    p.add_argument("--p", type=float, nargs="+")
    p.add_argument("--avg-deg", type=float, default=8.0, help="gnp: p = avg_deg / n when --p is absent")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--algo", nargs="+", choices=ALGOS, default=["hybrid"])
    p.add_argument("--l", type=int, default=3)
    p.add_argument("--csv")
    _common(p)
    p.set_defaults(func=cmd_bench)
    return parser


def _fail(code: int, kind: str, exc: Exception) -> int:
    sys.stdout.write(json.dumps({"error": kind, "message": str(exc)}, sort_keys=True) + "\n")
    log.error("%s: %s", kind, exc)
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (MalformedInputError, OSError) as exc:
        return _fail(1, "malformed-input", exc)
    except CapacityError as exc:
        return _fail(2, "capacity", exc)
    except ContractError as exc:
        return _fail(2, "contract", exc)
    except ConsistencyError as exc:
        return _fail(3, "consistency", exc)


if __name__ == "__main__":
    sys.exit(main())
