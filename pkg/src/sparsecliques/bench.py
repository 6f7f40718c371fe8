"""Algorithm dispatch, count reports, cross-verification and the benchmark grid."""
from __future__ import annotations

import csv
import io
import itertools
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Optional

from .cliques import brute_force_k_cliques, count_k_cliques, list_k_cliques
from .config import DEFAULT_BUDGETS, Budgets
from .errors import CapacityError, ConsistencyError, ContractError
from .generators import GeneratorCertificate, gen_lemma2, gen_lemma3, gen_standard
from .graph import Graph, build_adj_matrix, degeneracy, edge_work_functional, work_bound_holds
from .methods import (
    SATURATION_LIMIT,
    edge_count_detect_k4_in_H,
    extension_count_detailed,
    triangle_method_count_detailed,
    triangle_method_detect,
)
from .triangles import (
    brute_force_triangles,
    count_matrix_trace,
    list_chiba_nishizeki,
    list_edge_iterator_hashed,
    list_hybrid,
    list_itai_rodeh,
)

log = logging.getLogger(__name__)

TRIANGLE_ALGOS = ("hybrid", "cn", "ir", "edge-hash")
ALGOS = TRIANGLE_ALGOS + ("matrix", "kclique", "extension", "triangle-method")
F_BOUNDED = ("hybrid", "edge-hash")


@dataclass
class CountReport:
    algo: str
    l: int
    count: int
    inner_iterations: Optional[int] = None
    edge_probes: Optional[int] = None
    millis: Optional[float] = None
    method: Optional[str] = None
    split: Optional[list[int]] = None
    multiplicity: Optional[int] = None
    pre_division_total: Optional[int] = None

    def to_json(self) -> dict[str, Any]:
        out = {k: v for k, v in asdict(self).items() if v is not None or k == "millis"}
        out["saturated"] = self.count > SATURATION_LIMIT
        return out


def run_triangle_lister(g: Graph, algo: str, budgets: Budgets = DEFAULT_BUDGETS, emit=None):
    if algo == "hybrid":
        return list_hybrid(g, build_adj_matrix(g, budgets.matrix_max_n), emit)
    if algo == "cn":
        return list_chiba_nishizeki(g, emit)
    if algo == "ir":
        return list_itai_rodeh(g, emit)
    if algo == "edge-hash":
        return list_edge_iterator_hashed(g, emit)
    raise ContractError(f"{algo!r} is not a triangle lister")


def run_count(
    g: Graph, algo: str, l: int = 3, l1: Optional[int] = None,
    budgets: Budgets = DEFAULT_BUDGETS, threads: int = 1, timing: bool = True,
) -> CountReport:
    """Run one algorithm and time only the algorithm call."""
    if algo not in ALGOS:
        raise ContractError(f"unknown algorithm {algo!r}; choose from {', '.join(ALGOS)}")
    if l < 3:
        raise ContractError(f"l must be >= 3, got {l}")
    if algo in TRIANGLE_ALGOS + ("matrix",) and l != 3:
        raise ContractError(f"{algo} only counts triangles (l = 3)")
    if algo in ("hybrid", "matrix") and g.n > budgets.matrix_max_n:
        raise CapacityError(f"{algo} needs n <= {budgets.matrix_max_n}, graph has n = {g.n}")

    report = CountReport(algo, l, 0)
    t0 = time.perf_counter()
    if algo in TRIANGLE_ALGOS:
        count = 0

        def bump(_t) -> None:
            nonlocal count
            count += 1

        _, work = run_triangle_lister(g, algo, budgets, bump)
        report.count = count
        report.inner_iterations, report.edge_probes = work.inner_iterations, work.edge_probes
    elif algo == "matrix":
        report.count = count_matrix_trace(g, None, budgets.matrix_max_n)
    elif algo == "kclique":
        cliques, work = list_k_cliques(g, l, threads=threads)
        report.count = len(cliques)
        report.inner_iterations, report.edge_probes = work.inner_iterations, work.edge_probes
    else:
        if algo == "extension":
            res = extension_count_detailed(g, l, l1, threads)
        else:
            res = triangle_method_count_detailed(g, l, budgets.aux_max_vertices)
        report.count = res.count
        report.method = res.method
        report.split = list(res.plan.split)
        report.multiplicity = res.plan.multiplicity
        report.pre_division_total = res.pre_division_total
    if timing:
        report.millis = round((time.perf_counter() - t0) * 1000.0, 3)
    return report


# -- verification -------------------------------------------------------------

@dataclass
class Check:
    name: str
    status: str  # "pass" | "fail" | "skip"
    detail: str = ""


def _first_difference(a: list, b: list) -> str:
    for x, y in itertools.zip_longest(a, b):
        if x != y:
            return f"first disagreement: expected {x}, got {y}"
    return ""


def verify_graph(
    g: Graph, l_max: int = 3, cert: Optional[GeneratorCertificate] = None,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> list[Check]:
    """Cross-check every algorithm on one graph, plus certificate counts when given."""
    checks: list[Check] = []

    def add(name: str, ok: bool, detail: str = "") -> None:
        checks.append(Check(name, "pass" if ok else "fail", detail))

    def skip(name: str, why: str) -> None:
        log.warning("skipping %s: %s", name, why)
        checks.append(Check(name, "skip", why))

    info = degeneracy(g)
    _, F = edge_work_functional(g)
    add("F <= 4 m^1.5", work_bound_holds(F, g.m), f"F={F} m={g.m}")
    add("F <= 2 m min(alpha_cn, d)", F <= 2 * g.m * info.alpha_ub, f"F={F} U={info.alpha_ub}")

    try:
        truth = brute_force_triangles(g, budgets.brute_triangle_max_n)
    except CapacityError as exc:
        truth = None
        skip("brute-force triangles", str(exc))
    reference = truth
    for algo in TRIANGLE_ALGOS:
        try:
            tris, work = run_triangle_lister(g, algo, budgets)
        except CapacityError as exc:
            skip(f"triangles {algo}", str(exc))
            continue
        stream = sorted(tris)
        if algo in F_BOUNDED:
            add(f"work {algo} inner <= F", work.inner_iterations <= F,
                f"inner={work.inner_iterations} F={F}")
        add(f"triangles {algo} duplicate-free", len(set(stream)) == len(stream))
        if reference is None:
            reference = stream
            continue
        add(f"triangles {algo}", stream == reference, _first_difference(reference, stream))
    try:
        mc = count_matrix_trace(g, None, budgets.matrix_max_n)
        if reference is not None:
            add("triangles matrix-trace", mc == len(reference), f"{mc} vs {len(reference)}")
    except CapacityError as exc:
        skip("triangles matrix-trace", str(exc))

    counts: dict[int, int] = {}
    for l in range(3, l_max + 1):
        counts[l] = exact = count_k_cliques(g, l)
        try:
            brute = brute_force_k_cliques(g, l, budgets.oracle_max_tuples)
            add(f"K{l} kclique vs brute force", exact == brute, f"{exact} vs {brute}")
        except CapacityError as exc:
            skip(f"K{l} brute force", str(exc))
        if l >= 4:
            for l1 in range(2, l - 1):
                try:
                    res = extension_count_detailed(g, l, l1)
                    add(f"K{l} extension l1={l1}", res.count == exact, f"{res.count} vs {exact}")
                except ConsistencyError as exc:
                    add(f"K{l} extension l1={l1}", False, str(exc))
        try:
            if l % 3 == 0:
                res = triangle_method_count_detailed(g, l, budgets.aux_max_vertices)
                add(f"K{l} triangle-method", res.count == exact, f"{res.count} vs {exact}")
            w = triangle_method_detect(g, l, budgets.aux_max_vertices)
            add(f"K{l} detect iff count > 0", (w is not None) == (exact > 0), f"witness={w}")
            if l % 4 == 0:
                w = edge_count_detect_k4_in_H(g, l // 4, budgets.aux_max_vertices)
                add(f"K{l} edge-count detect iff count > 0", (w is not None) == (exact > 0),
                    f"witness={w}")
        except CapacityError as exc:
            skip(f"K{l} auxiliary-graph methods", str(exc))
        except ConsistencyError as exc:
            add(f"K{l} auxiliary-graph methods", False, str(exc))

    if cert is not None:
        add("certificate n, m", (cert.n, cert.m) == (g.n, g.m), f"cert ({cert.n}, {cert.m})")
        for l, want in sorted(cert.expected_counts.items()):
            if l > l_max:
                continue
            add(f"certificate K{l}", counts[l] == want, f"{counts[l]} vs closed form {want}")
        if cert.alpha_claim is not None and g.m:
            add("certificate d <= 2 alpha - 1", info.d <= 2 * cert.alpha_claim - 1,
                f"d={info.d} alpha<={cert.alpha_claim}")
    return checks


# -- benchmark grid -------------------------------------------------------------

CSV_COLUMNS = (
    "graph_id", "model", "n", "m", "d", "alpha_ub", "F", "algo", "l",
    "count", "inner_iterations", "millis", "status",
)


@dataclass
class BenchRecord:
    graph_id: str
    model: str
    n: int
    m: int
    d: int
    alpha_ub: int
    F: int
    algo: str
    l: int
    count: Optional[int] = None
    inner_iterations: Optional[int] = None
    millis: Optional[float] = None
    status: str = "ok"


@dataclass(frozen=True)
class GridPoint:
    model: str
    params: dict[str, Any] = field(hash=False)

    @property
    def graph_id(self) -> str:
        return self.model + "".join(f"-{k}{v}" for k, v in self.params.items())

    def build(self) -> tuple[Graph, GeneratorCertificate]:
        if self.model == "lemma3":
            return gen_lemma3(self.params["k"], self.params["b"], self.params.get("n_pad", 0))
        if self.model == "lemma2":
            return gen_lemma2(self.params["n"], self.params["m"])
        if self.model == "gnp":
            return gen_standard("random_gnp", **self.params)
        return gen_standard(self.model, **self.params)


def bench_graph(point: GridPoint, algos, l: int = 3, budgets: Budgets = DEFAULT_BUDGETS) -> list[BenchRecord]:
    g, _ = point.build()
    info = degeneracy(g)
    _, F = edge_work_functional(g)
    rows = []
    for algo in algos:
        rec = BenchRecord(point.graph_id, point.model, g.n, g.m, info.d, info.alpha_ub, F, algo, l)
        try:
            rep = run_count(g, algo, l, budgets=budgets)
            rec.count, rec.inner_iterations, rec.millis = rep.count, rep.inner_iterations, rep.millis
        except (CapacityError, ContractError, ConsistencyError) as exc:
            rec.status = f"error: {exc}"
        rows.append(rec)
    return rows


def run_bench(points, algos, l: int = 3, budgets: Budgets = DEFAULT_BUDGETS, threads: int = 1) -> list[BenchRecord]:
    """One row per (graph, algo), in grid order regardless of ``threads``."""
    def one(p):
        return bench_graph(p, algos, l, budgets)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            per_point = list(pool.map(one, points))
    else:
        per_point = [one(p) for p in points]
    return [r for rows in per_point for r in rows]


def records_to_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        row = asdict(r)
        w.writerow(["" if row[c] is None else row[c] for c in CSV_COLUMNS])
    return buf.getvalue()


def grid_points(model: str, **axes) -> list[GridPoint]:
    """Cartesian product of the non-empty parameter axes, in the order given."""
    keys = [k for k, v in axes.items() if v]
    return [GridPoint(model, dict(zip(keys, combo))) for combo in itertools.product(*(axes[k] for k in keys))]
