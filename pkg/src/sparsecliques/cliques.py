"""Listing and counting of K_l copies along a degeneracy order."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from math import comb
from typing import Callable, Iterator, Optional

from .config import DEFAULT_BUDGETS
from .errors import CapacityError, ContractError
from .graph import DegeneracyInfo, Graph, degeneracy
from .triangles import WorkCounter

Clique = tuple[int, ...]


def forward_neighbors(g: Graph, info: DegeneracyInfo) -> list[list[int]]:
    """Neighbours of each vertex that come later in the elimination order (at most d each)."""
    pos = info.position
    return [[w for w in g.adj[v] if pos[w] > pos[v]] for v in range(g.n)]


def _extend(prefix: list[int], cand: list[int], depth: int, fwd_sets, work: WorkCounter) -> Iterator[Clique]:
    # depth = number of vertices still to add
    if depth == 1:
        work.inner_iterations += len(cand)
        for w in cand:
            yield tuple(sorted(prefix + [w]))
        return
    for idx, w in enumerate(cand):
        fw = fwd_sets[w]
        rest = cand[idx + 1:]
        work.inner_iterations += len(rest)
        work.edge_probes += len(rest)
        nxt = [x for x in rest if x in fw]
        if len(nxt) >= depth - 1:
            prefix.append(w)
            yield from _extend(prefix, nxt, depth - 1, fwd_sets, work)
            prefix.pop()


def _ordered_cand(fwd: list[int], pos) -> list[int]:
    return sorted(fwd, key=pos.__getitem__)


def iter_k_cliques(
    g: Graph, l: int, info: Optional[DegeneracyInfo] = None, work: Optional[WorkCounter] = None,
    roots: Optional[range] = None,
) -> Iterator[Clique]:
    """Lazily yield each K_l of ``g`` once, as a sorted vertex tuple.

    Vertices are added in elimination order: every clique is generated from
    its earliest vertex, and each extension step only looks at forward
    neighbours, of which there are at most d.  ``roots`` restricts the
    outermost loop to a slice of elimination positions.
    """
    if l < 1:
        raise ContractError(f"clique size must be >= 1, got {l}")
    if work is None:
        work = WorkCounter()
    if l > g.n:
        return
    if l == 1:
        for v in range(g.n):
            yield (v,)
        return
    if info is None:
        info = degeneracy(g)
    pos = info.position
    fwd = forward_neighbors(g, info)
    fwd_sets = [frozenset(f) for f in fwd]
    order = info.order
    if roots is None:
        roots = range(g.n)
    for p in roots:
        v = order[p]
        cand = _ordered_cand(fwd[v], pos)
        if len(cand) >= l - 1:
            yield from _extend([v], cand, l - 1, fwd_sets, work)


def list_k_cliques(
    g: Graph, l: int, emit: Optional[Callable[[Clique], None]] = None, threads: int = 1
) -> tuple[Optional[list[Clique]], WorkCounter]:
    """All K_l copies of ``g``; same calling convention as the triangle listers.

    With ``threads > 1`` the root vertices are split into contiguous chunks;
    chunk results are concatenated in order, so output does not depend on the
    worker count.
    """
    if l < 1:
        raise ContractError(f"clique size must be >= 1, got {l}")
    info = degeneracy(g) if 2 <= l <= g.n else None
    chunks = _root_chunks(g.n, threads) if info is not None else [None]

    def run(roots):
        w = WorkCounter()
        return list(iter_k_cliques(g, l, info, w, roots)), w

    results = _map(run, chunks, threads)
    work = WorkCounter()
    out: list[Clique] = []
    for part, w in results:
        work += w
        out.extend(part)
    if emit is None:
        return out, work
    for c in out:
        emit(c)
    return None, work


def count_k_cliques(g: Graph, l: int, threads: int = 1) -> int:
    """Number of K_l copies; the last level adds candidate-set sizes instead of listing."""
    if l < 1:
        raise ContractError(f"clique size must be >= 1, got {l}")
    if l > g.n:
        return 0
    if l == 1:
        return g.n
    if l == 2:
        return g.m
    info = degeneracy(g)
    pos = info.position
    fwd = forward_neighbors(g, info)
    fwd_sets = [frozenset(f) for f in fwd]

    def count(cand: list[int], depth: int) -> int:
        if depth == 1:
            return len(cand)
        total = 0
        for idx, w in enumerate(cand):
            fw = fwd_sets[w]
            nxt = [x for x in cand[idx + 1:] if x in fw]
            if len(nxt) >= depth - 1:
                total += count(nxt, depth - 1)
        return total

    def run(roots) -> int:
        total = 0
        for p in roots:
            v = info.order[p]
            if len(fwd[v]) >= l - 1:
                total += count(_ordered_cand(fwd[v], pos), l - 1)
        return total

    return sum(_map(run, _root_chunks(g.n, threads), threads))


def _root_chunks(n: int, threads: int) -> list[range]:
    if threads <= 1 or n == 0:
        return [range(n)]
    size = -(-n // (4 * threads))
    return [range(s, min(s + size, n)) for s in range(0, n, size)]


def _map(fn, items, threads: int) -> list:
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def brute_force_k_cliques(g: Graph, l: int, budget: int = DEFAULT_BUDGETS.oracle_max_tuples) -> int:
    """Count K_l by testing every l-subset of the vertex set."""
    if l < 1:
        raise ContractError(f"clique size must be >= 1, got {l}")
    tuples = comb(g.n, l)
    if tuples > budget:
        raise CapacityError(f"C({g.n}, {l}) = {tuples} subsets exceeds oracle budget {budget}")
    masks = [0] * g.n
    for u, nbrs in enumerate(g.adj):
        for v in nbrs:
            masks[u] |= 1 << v
    count = 0
    for c in combinations(range(g.n), l):
        for a, b in combinations(c, 2):
            if not (masks[a] >> b) & 1:
                break
        else:
            count += 1
    return count


def is_clique(g: Graph, vertices) -> bool:
    return all(g.has_edge(a, b) for a, b in combinations(vertices, 2))
