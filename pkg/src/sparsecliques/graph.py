"""Immutable sparse graphs, packed adjacency matrices and degeneracy machinery."""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import cached_property
from math import isqrt
from typing import Iterable, Iterator, Sequence

from .config import DEFAULT_BUDGETS
from .errors import CapacityError, ContractError, MalformedInputError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the strictly increasing tuple of neighbours of ``v``.
    Instances are immutable and safe to share between threads.
    """

    n: int
    m: int
    adj: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...] = field(repr=False)

    @cached_property
    def nbr_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if v > u:
                    yield u, v

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.nbr_sets[u]

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Subgraph induced by ``vertices``, relabelled densely.

        Returns the subgraph and the list mapping new ids back to old ids.
        """
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        adj = []
        for v in old:
            adj.append(tuple(index[w] for w in self.adj[v] if w in index))
        degrees = tuple(len(a) for a in adj)
        return Graph(len(old), sum(degrees) // 2, tuple(adj), degrees), old


def build_graph(edges: Iterable[Sequence[int]], n: int) -> Graph:
    """Canonical graph from an edge list; loops are dropped and duplicates merged."""
    graph, _, _ = _build_graph_counting(edges, n)
    return graph


def _build_graph_counting(edges: Iterable[Sequence[int]], n: int) -> tuple[Graph, int, int]:
    if n < 0:
        raise MalformedInputError(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    loops = dups = 0
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedInputError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
        if u == v:
            loops += 1
            continue
        if v in nbrs[u]:
            dups += 1
            continue
        nbrs[u].add(v)
        nbrs[v].add(u)
    adj = tuple(tuple(sorted(s)) for s in nbrs)
    degrees = tuple(len(a) for a in adj)
    return Graph(n, sum(degrees) // 2, adj, degrees), loops, dups


@dataclass(frozen=True)
class AdjMatrix:
    """Row-major ``n x n`` bit matrix, ``stride`` bytes per row, little-endian bit order."""

    n: int
    stride: int
    bits: bytes = field(repr=False)

    def has_edge(self, u: int, v: int) -> bool:
        return (self.bits[u * self.stride + (v >> 3)] >> (v & 7)) & 1 == 1

    @cached_property
    def rows(self) -> tuple[int, ...]:
        """Each row as an integer bitset (bit ``v`` of row ``u`` is M(u, v))."""
        s = self.stride
        return tuple(
            int.from_bytes(self.bits[u * s:(u + 1) * s], "little") for u in range(self.n)
        )


def build_adj_matrix(g: Graph, max_n: int = DEFAULT_BUDGETS.matrix_max_n) -> AdjMatrix:
    if g.n > max_n:
        raise CapacityError(f"adjacency matrix needs n <= {max_n}, graph has n = {g.n}")
    stride = (g.n + 7) >> 3
    buf = bytearray(g.n * stride)
    for u, nbrs in enumerate(g.adj):
        base = u * stride
        for v in nbrs:
            buf[base + (v >> 3)] |= 1 << (v & 7)
    return AdjMatrix(g.n, stride, bytes(buf))


def check_matrix(g: Graph, M: AdjMatrix) -> None:
    if M.n != g.n:
        raise ContractError(f"matrix dimension {M.n} does not match graph order {g.n}")


@dataclass(frozen=True)
class DegeneracyInfo:
    order: tuple[int, ...]
    d: int
    alpha_ub_cn: int
    alpha_ub_degen: int

    @property
    def alpha_ub(self) -> int:
        """Best available upper bound on the arboricity."""
        return min(self.alpha_ub_cn, self.alpha_ub_degen)

    @cached_property
    def position(self) -> tuple[int, ...]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return tuple(pos)


def arboricity_upper_bound(g: Graph) -> int:
    """ceil(sqrt(2m + n) / 2), computed in exact integer arithmetic."""
    s = 2 * g.m + g.n
    r = isqrt(s)
    if r * r < s:
        r += 1
    # r = ceil(sqrt(s)); ceil(sqrt(s)/2) == ceil(r/2) since sqrt(s) <= r < sqrt(s) + 1
    return (r + 1) // 2


def degeneracy(g: Graph) -> DegeneracyInfo:
    """Min-degree elimination with a bucket queue; ties go to the lowest vertex id.

    Each bucket is a heap of vertex ids with lazy deletion, so the cost is
    O(m log n) rather than strictly linear, in exchange for deterministic ties.
    """
    n = g.n
    deg = list(g.degrees)
    maxdeg = max(deg, default=0)
    buckets: list[list[int]] = [[] for _ in range(maxdeg + 1)]
    for v in range(n):
        buckets[deg[v]].append(v)  # already ascending, so a valid heap
    removed = [False] * n
    order = []
    d = 0
    lo = 0
    for _ in range(n):
        while True:
            while not buckets[lo]:
                lo += 1
            v = heapq.heappop(buckets[lo])
            if not removed[v] and deg[v] == lo:
                break
        removed[v] = True
        order.append(v)
        if lo > d:
            d = lo
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(buckets[deg[w]], w)
                if deg[w] < lo:
                    lo = deg[w]
    return DegeneracyInfo(tuple(order), d, arboricity_upper_bound(g), d)


def edge_work_functional(g: Graph) -> tuple[list[int], int]:
    """Per-edge ``min(deg u, deg v)`` (in ``g.edges()`` order) and their sum."""
    deg = g.degrees
    f = [min(deg[u], deg[v]) for u, v in g.edges()]
    return f, sum(f)


def work_bound_holds(F: int, m: int) -> bool:
    """Exact integer test of F <= 4 m^(3/2), i.e. F^2 <= 16 m^3."""
    return F * F <= 16 * m**3
