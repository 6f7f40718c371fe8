"""Triangle listing: Hybrid, Chiba-Nishizeki, Itai-Rodeh, hashed edge iterator.

Every lister reports triangles as ``(i, j, k)`` with ``i < j < k``, each exactly
once.  Pass ``emit`` to receive triangles one at a time; without it they are
collected into a list.  The return value is ``(triangles_or_None, WorkCounter)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .config import DEFAULT_BUDGETS
from .errors import CapacityError
from .graph import AdjMatrix, Graph, build_adj_matrix, check_matrix

Triangle = tuple[int, int, int]
Emit = Callable[[Triangle], None]


@dataclass
class WorkCounter:
    inner_iterations: int = 0
    edge_probes: int = 0

    def __iadd__(self, other: "WorkCounter") -> "WorkCounter":
        self.inner_iterations += other.inner_iterations
        self.edge_probes += other.edge_probes
        return self


def _sink(emit: Optional[Emit]) -> tuple[Optional[list], Emit]:
    if emit is not None:
        return None, emit
    out: list = []
    return out, out.append


def list_hybrid(
    g: Graph, M: Optional[AdjMatrix] = None, emit: Optional[Emit] = None
) -> tuple[Optional[list[Triangle]], WorkCounter]:
    """Scan the lower-degree endpoint of each edge and probe the third edge in M.

    ``inner_iterations`` counts every neighbour scanned and therefore equals
    F(G) exactly.
    """
    if M is None:
        M = build_adj_matrix(g)
    check_matrix(g, M)
    out, report = _sink(emit)
    deg = g.degrees
    adj = g.adj
    bits, stride = M.bits, M.stride
    inner = probes = 0
    for i in range(g.n):
        for j in adj[i]:
            if j <= i:
                continue
            if deg[i] <= deg[j]:
                x, y = i, j
            else:
                x, y = j, i
            base = y * stride
            scan = adj[x]
            inner += len(scan)
            for k in scan:
                if j < k:
                    probes += 1
                    if (bits[base + (k >> 3)] >> (k & 7)) & 1:
                        report((i, j, k))
    return out, WorkCounter(inner, probes)


def list_chiba_nishizeki(
    g: Graph, emit: Optional[Emit] = None
) -> tuple[Optional[list[Triangle]], WorkCounter]:
    """Vertex iterator in non-increasing degree order with deletion of processed vertices.

    Deleted vertices are flagged and skipped; ``inner_iterations`` counts only
    visits to live vertices, i.e. the work on the shrinking graph.
    """
    out, report = _sink(emit)
    adj = g.adj
    order = sorted(range(g.n), key=lambda v: (-g.degrees[v], v))
    removed = [False] * g.n
    marked = [False] * g.n
    inner = probes = 0
    for u in order[: max(g.n - 2, 0)]:
        live = [v for v in adj[u] if not removed[v]]
        for v in live:
            marked[v] = True
        for v in live:
            for w in adj[v]:
                if removed[w] or w == u:
                    continue
                inner += 1
                probes += 1
                if marked[w]:
                    report(tuple(sorted((u, v, w))))
            marked[v] = False
        removed[u] = True
    return out, WorkCounter(inner, probes)


def _spanning_forest(n: int, nbrs: list[set[int]]) -> list[tuple[int, int]]:
    """Tree edges of an iterative DFS forest, roots taken by lowest unvisited id."""
    seen = [False] * n
    tree = []
    for root in range(n):
        if seen[root] or not nbrs[root]:
            continue
        seen[root] = True
        stack = [(root, iter(sorted(nbrs[root])))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if not seen[w]:
                    seen[w] = True
                    tree.append((v, w))
                    stack.append((w, iter(sorted(nbrs[w]))))
                    break
            else:
                stack.pop()
    return tree


def list_itai_rodeh(
    g: Graph, emit: Optional[Emit] = None
) -> tuple[Optional[list[Triangle]], WorkCounter]:
    """Repeatedly take a spanning forest, list triangles on its edges, delete it.

    A triangle may touch tree edges in several rounds; the global canonical set
    keeps the output exactly-once.
    """
    out, report = _sink(emit)
    nbrs = [set(a) for a in g.adj]
    found: set[Triangle] = set()
    inner = probes = 0
    remaining = g.m
    while remaining:
        tree = _spanning_forest(g.n, nbrs)
        for u, v in tree:
            small, big = (nbrs[u], nbrs[v]) if len(nbrs[u]) <= len(nbrs[v]) else (nbrs[v], nbrs[u])
            for w in small:
                inner += 1
                probes += 1
                if w in big:
                    t = tuple(sorted((u, v, w)))
                    if t not in found:
                        found.add(t)
                        report(t)
        for u, v in tree:
            nbrs[u].discard(v)
            nbrs[v].discard(u)
        remaining -= len(tree)
    return out, WorkCounter(inner, probes)


def list_edge_iterator_hashed(
    g: Graph, emit: Optional[Emit] = None
) -> tuple[Optional[list[Triangle]], WorkCounter]:
    """For each edge u < v, scan the smaller neighbourhood against a hash set of the larger."""
    out, report = _sink(emit)
    adj, sets, deg = g.adj, g.nbr_sets, g.degrees
    inner = probes = 0
    for u in range(g.n):
        for v in adj[u]:
            if v <= u:
                continue
            if deg[u] <= deg[v]:
                scan, other = adj[u], sets[v]
            else:
                scan, other = adj[v], sets[u]
            inner += len(scan)
            for w in scan:
                if w > v:
                    probes += 1
                    if w in other:
                        report((u, v, w))
    return out, WorkCounter(inner, probes)


def count_matrix_trace(
    g: Graph, M: Optional[AdjMatrix] = None, max_n: int = DEFAULT_BUDGETS.matrix_max_n
) -> int:
    """trace(M^3) / 6 with M^2 entries taken as popcounts of packed row intersections.

    trace(M^3) = sum over ordered adjacent pairs (i, k) of (M^2)[i][k].
    """
    if g.n > max_n:
        raise CapacityError(f"matrix counting needs n <= {max_n}, graph has n = {g.n}")
    if M is None:
        M = build_adj_matrix(g, max_n)
    check_matrix(g, M)
    rows = M.rows
    trace = 0
    for i in range(g.n):
        ri = rows[i]
        for k in g.adj[i]:
            trace += (ri & rows[k]).bit_count()
    assert trace % 6 == 0
    return trace // 6


def brute_force_triangles(g: Graph, max_n: int = DEFAULT_BUDGETS.brute_triangle_max_n) -> list[Triangle]:
    """Exhaustive scan over all triples i < j < k."""
    if g.n > max_n:
        raise CapacityError(f"brute-force oracle limited to n <= {max_n}")
    n = g.n
    a = [[False] * n for _ in range(n)]
    for u, v in g.edges():
        a[u][v] = a[v][u] = True
    out = []
    for i in range(n):
        ai = a[i]
        for j in range(i + 1, n):
            if not ai[j]:
                continue
            aj = a[j]
            for k in range(j + 1, n):
                if ai[k] and aj[k]:
                    out.append((i, j, k))
    return out


def find_triangle(g: Graph) -> Optional[Triangle]:
    """First triangle in hashed edge-iterator order, or None."""
    adj, sets, deg = g.adj, g.nbr_sets, g.degrees
    for u in range(g.n):
        for v in adj[u]:
            if v <= u:
                continue
            scan, other = (adj[u], sets[v]) if deg[u] <= deg[v] else (adj[v], sets[u])
            for w in scan:
                if w > v and w in other:
                    return u, v, w
    return None


def count_triangles(g: Graph) -> int:
    """Triangle count via the hashed edge iterator, without materializing the stream."""
    total = 0

    def bump(_t: Triangle) -> None:
        nonlocal total
        total += 1

    list_edge_iterator_hashed(g, bump)
    return total


LISTERS = {
    "hybrid": lambda g, emit=None: list_hybrid(g, None, emit),
    "cn": list_chiba_nishizeki,
    "ir": list_itai_rodeh,
    "edge-hash": list_edge_iterator_hashed,
}
