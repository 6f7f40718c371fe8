"""Composite K_l methods: extension, triangle method on an auxiliary graph, edge count detection.

Counting methods overcount every K_l by a known factor and divide at the end;
a nonzero remainder means an enumeration bug and raises ConsistencyError.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial
from operator import itemgetter
from typing import Optional

from .cliques import Clique, count_k_cliques, is_clique, iter_k_cliques
from .config import DEFAULT_BUDGETS
from .errors import CapacityError, ConsistencyError, ContractError
from .graph import Graph
from .triangles import count_triangles, find_triangle

SATURATION_LIMIT = 2**127 - 1


@dataclass(frozen=True)
class MethodPlan:
    l: int
    split: tuple[int, ...]
    multiplicity: int


@dataclass(frozen=True)
class MethodResult:
    method: str
    plan: MethodPlan
    pre_division_total: int
    count: int

    @property
    def saturated(self) -> bool:
        return self.count > SATURATION_LIMIT


def _exact_div(total: int, divisor: int, what: str) -> int:
    q, r = divmod(total, divisor)
    if r:
        raise ConsistencyError(f"{what}: total {total} not divisible by {divisor}")
    return q


def _common_neighborhood(g: Graph, clique: Clique) -> set[int]:
    sets = g.nbr_sets
    common = set(min((sets[v] for v in clique), key=len))
    for v in clique:
        common &= sets[v]
    return common


# -- extension method --------------------------------------------------------

def default_l1(l: int) -> int:
    """Split leaving a triangle base case when l > 5."""
    return max(2, l - 3)


def extension_plan(l: int, l1: Optional[int] = None) -> MethodPlan:
    if l1 is None:
        l1 = default_l1(l)
    if not 2 <= l1 <= l - 2:
        raise ContractError(f"extension split needs 2 <= l1 <= l - 2, got l={l}, l1={l1}")
    return MethodPlan(l, (l1, l - l1), comb(l, l1))


def _count_small(g: Graph, l: int) -> int:
    if l == 2:
        return g.m
    if l == 3:
        return count_triangles(g)
    return extension_count(g, l)


def extension_count_detailed(g: Graph, l: int, l1: Optional[int] = None, threads: int = 1) -> MethodResult:
    """Count K_l as (sum over K_l1 copies of K_l2 copies in their common neighbourhood) / C(l, l1)."""
    plan = extension_plan(l, l1)
    l1, l2 = plan.split
    copies = list(iter_k_cliques(g, l1))

    def run(chunk) -> int:
        total = 0
        for c in chunk:
            common = _common_neighborhood(g, c)
            if len(common) < l2:
                continue
            sub, _ = g.induced_subgraph(common)
            total += _count_small(sub, l2)
        return total

    if threads > 1 and len(copies) > 1:
        from concurrent.futures import ThreadPoolExecutor
        size = -(-len(copies) // (4 * threads))
        chunks = [copies[i:i + size] for i in range(0, len(copies), size)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            total = sum(pool.map(run, chunks))
    else:
        total = run(copies)
    count = _exact_div(total, plan.multiplicity, f"extension l={l} l1={l1}")
    return MethodResult("extension", plan, total, count)


def extension_count(g: Graph, l: int, l1: Optional[int] = None, threads: int = 1) -> int:
    return extension_count_detailed(g, l, l1, threads).count


# -- auxiliary graph and triangle method ---------------------------------------

@dataclass(frozen=True)
class AuxiliaryGraph:
    """Graph H whose vertices are the K_j copies of ``base``.

    Two copies are adjacent iff they are disjoint and their union is a K_2j.
    """

    base: Graph
    j: int
    h_vertices: tuple[Clique, ...]
    h_graph: Graph

    def witness(self, h_ids) -> Clique:
        return tuple(sorted(v for h in h_ids for v in self.h_vertices[h]))


def build_auxiliary_graph(
    g: Graph, j: int, max_vertices: int = DEFAULT_BUDGETS.aux_max_vertices
) -> AuxiliaryGraph:
    """H-edges come from splitting every K_2j into two complementary j-sets."""
    if j < 1:
        raise ContractError(f"auxiliary graph needs j >= 1, got {j}")
    if j == 1:
        n_h = g.n
    else:
        n_h = count_k_cliques(g, j)
    if n_h > max_vertices:
        raise CapacityError(f"auxiliary graph would have {n_h} vertices, budget {max_vertices}")
    h_vertices = tuple(sorted(iter_k_cliques(g, j)))
    index = {c: i for i, c in enumerate(h_vertices)}
    # complementary position splits of a sorted 2j-tuple; fixing position 0 in
    # the first part lists each unordered pair once
    if j == 1:
        splits = [(itemgetter(slice(0, 1)), itemgetter(slice(1, 2)))]
    else:
        splits = [
            (itemgetter(*part), itemgetter(*(p for p in range(2 * j) if p not in part)))
            for part in combinations(range(2 * j), j) if part[0] == 0
        ]
    nbrs: list[list[int]] = [[] for _ in h_vertices]
    for big in iter_k_cliques(g, 2 * j):
        for first, second in splits:
            a, b = index[first(big)], index[second(big)]
            nbrs[a].append(b)
            nbrs[b].append(a)
    # every H-edge arises from exactly one K_2j, so there are no duplicates to merge
    adj = tuple(tuple(sorted(a)) for a in nbrs)
    degrees = tuple(len(a) for a in adj)
    h_graph = Graph(len(h_vertices), sum(degrees) // 2, adj, degrees)
    return AuxiliaryGraph(g, j, h_vertices, h_graph)


def triangle_method_multiplicity(j: int) -> int:
    """Ways to split a K_3j into three unordered j-sets: (3j)! / ((j!)^3 3!)."""
    return factorial(3 * j) // (factorial(j) ** 3 * 6)


def triangle_method_count_detailed(
    g: Graph, l: int, max_vertices: int = DEFAULT_BUDGETS.aux_max_vertices
) -> MethodResult:
    if l < 3 or l % 3:
        raise ContractError(f"triangle-method counting needs l = 3j, got l={l}")
    j = l // 3
    plan = MethodPlan(l, (j, j, j), triangle_method_multiplicity(j))
    if l > g.n:
        return MethodResult("triangle-method", plan, 0, 0)
    H = build_auxiliary_graph(g, j, max_vertices)
    total = count_triangles(H.h_graph)
    count = _exact_div(total, plan.multiplicity, f"triangle method l={l}")
    return MethodResult("triangle-method", plan, total, count)


def triangle_method_count(g: Graph, l: int, max_vertices: int = DEFAULT_BUDGETS.aux_max_vertices) -> int:
    return triangle_method_count_detailed(g, l, max_vertices).count


def _verified(g: Graph, witness: Clique, l: int) -> Clique:
    if len(set(witness)) != l or not is_clique(g, witness):
        raise ConsistencyError(f"witness {witness} is not a K_{l}")
    return witness


def triangle_method_detect(
    g: Graph, l: int, max_vertices: int = DEFAULT_BUDGETS.aux_max_vertices
) -> Optional[Clique]:
    """Find one K_l, writing l = 3j + i.

    i = 0: a triangle in H over K_j copies.  i > 0: for each K_i copy, search
    for a K_3j inside its common neighbourhood.
    """
    if l < 3:
        raise ContractError(f"detection needs l >= 3, got {l}")
    if l > g.n:
        return None
    j, i = divmod(l, 3)
    if i == 0:
        H = build_auxiliary_graph(g, j, max_vertices)
        t = find_triangle(H.h_graph)
        if t is None:
            return None
        return _verified(g, H.witness(t), l)
    for base in iter_k_cliques(g, i):
        common = _common_neighborhood(g, base)
        if len(common) < 3 * j:
            continue
        sub, back = g.induced_subgraph(common)
        inner = triangle_method_detect(sub, 3 * j, max_vertices)
        if inner is not None:
            return _verified(g, tuple(sorted(base + tuple(back[v] for v in inner))), l)
    return None


def _find_k4(h: Graph) -> Optional[tuple[int, int, int, int]]:
    sets = h.nbr_sets
    for a, b in h.edges():
        common = sets[a] & sets[b]
        for c in common:
            if c <= b:
                continue
            for d in sets[c] & common:
                if d > c:
                    return a, b, c, d
    return None


def edge_count_detect_k4_in_H(
    g: Graph, j: int, max_vertices: int = DEFAULT_BUDGETS.aux_max_vertices
) -> Optional[Clique]:
    """Find one K_4j in ``g`` as a K_4 in the auxiliary graph over K_j copies."""
    if j < 1:
        raise ContractError(f"edge count detection needs j >= 1, got {j}")
    if 4 * j > g.n:
        return None
    H = build_auxiliary_graph(g, j, max_vertices)
    q = _find_k4(H.h_graph)
    if q is None:
        return None
    return _verified(g, H.witness(q), 4 * j)
