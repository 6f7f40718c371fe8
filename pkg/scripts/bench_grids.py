#!/usr/bin/env python3
"""Run the three reference benchmark grids and write one CSV per grid.

    python scripts/bench_grids.py --outdir bench_output [--threads 2] [--quick]

lemma3 : k=4, b in {4, 8, 16}, hybrid; reports inner_iterations / (m d)
gnp    : n in 2^10..2^14, p = 8/n, edge-hash vs hybrid; counts must agree
complete: n in {64, 128}, hybrid; count must be C(n, 3)
"""
import argparse
from math import comb
from pathlib import Path

from sparsecliques.bench import GridPoint, grid_points, records_to_csv, run_bench


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--outdir", default="bench_output")
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--quick", action="store_true", help="stop the gnp grid at n = 2^12")
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)

    rows = run_bench(grid_points("lemma3", k=[4], b=[4, 8, 16]), ["hybrid"], threads=args.threads)
    (out / "lemma3.csv").write_text(records_to_csv(rows))
    for r in rows:
        print(f"{r.graph_id:16} m={r.m:6} d={r.d:3} inner/(m d) = {r.inner_iterations / (r.m * r.d):.3f}")

    top = 12 if args.quick else 14
    pts = [GridPoint("gnp", {"n": 2**e, "p": 8 / 2**e, "seed": 1}) for e in range(10, top + 1)]
    rows = run_bench(pts, ["edge-hash", "hybrid"], threads=args.threads)
    (out / "gnp.csv").write_text(records_to_csv(rows))
    for a, b in zip(rows[::2], rows[1::2]):
        flag = "ok" if a.count == b.count else "MISMATCH"
        print(f"{a.graph_id:28} triangles={a.count:5} edge-hash {a.millis:8.1f} ms  hybrid {b.millis:8.1f} ms  {flag}")

    rows = run_bench(grid_points("complete", n=[64, 128]), ["hybrid"], threads=args.threads)
    (out / "complete.csv").write_text(records_to_csv(rows))
    for r in rows:
        print(f"{r.graph_id:16} count={r.count} expected={comb(r.n, 3)}")


if __name__ == "__main__":
    main()
