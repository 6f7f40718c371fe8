import itertools
from math import comb, factorial

import pytest
from hypothesis import given

from sparsecliques import (
    CapacityError,
    ConsistencyError,
    ContractError,
    brute_force_k_cliques,
    build_auxiliary_graph,
    build_graph,
    count_k_cliques,
    edge_count_detect_k4_in_H,
    extension_count,
    gen_lemma3,
    gen_standard,
    triangle_method_count,
    triangle_method_detect,
)
from sparsecliques.cliques import is_clique
from sparsecliques.methods import (
    _exact_div,
    default_l1,
    extension_count_detailed,
    extension_plan,
    triangle_method_count_detailed,
    triangle_method_multiplicity,
)
from sparsecliques.triangles import brute_force_triangles

from strategies import dense_graphs


def complete(n):
    return gen_standard("complete", n=n)[0]


def disjoint_union(*gs):
    edges, off = [], 0
    for g in gs:
        edges.extend((u + off, v + off) for u, v in g.edges())
        off += g.n
    return build_graph(edges, off)


def perfect_matchings(points):
    """All partitions of ``points`` into unordered pairs, by direct recursion."""
    if not points:
        return [[]]
    first, rest = points[0], points[1:]
    out = []
    for i, partner in enumerate(rest):
        for tail in perfect_matchings(rest[:i] + rest[i + 1:]):
            out.append([(first, partner)] + tail)
    return out


def aux_by_pair_scan(g, j):
    """H-edges by testing every pair of K_j copies."""
    copies = sorted(c for c in itertools.combinations(range(g.n), j) if is_clique(g, c))
    edges = set()
    for a, b in itertools.combinations(range(len(copies)), 2):
        A, B = copies[a], copies[b]
        if set(A) & set(B):
            continue
        if all(g.has_edge(x, y) for x in A for y in B):
            edges.add((a, b))
    return copies, edges


# -- extension ---------------------------------------------------------------

def test_extension_examples():
    assert extension_count(complete(6), 5, 2) == 6
    assert extension_count(gen_lemma3(3, 4)[0], 4, 2) == 27
    assert extension_count(gen_standard("cycle", n=7)[0], 4, 2) == 0


def test_extension_split_validation():
    with pytest.raises(ContractError):
        extension_plan(4, 3)
    with pytest.raises(ContractError):
        extension_plan(5, 1)
    assert [default_l1(l) for l in (4, 5, 6, 9)] == [2, 2, 3, 6]
    assert extension_plan(6, 2).multiplicity == comb(6, 2)


def test_extension_pre_division_total():
    res = extension_count_detailed(complete(7), 5, 3)
    assert res.pre_division_total == comb(7, 5) * comb(5, 3)
    assert res.count == 21


@given(dense_graphs(max_n=10))
def test_extension_matches_brute_force(g):
    for l in (4, 5, 6):
        truth = brute_force_k_cliques(g, l)
        for l1 in range(2, l - 1):
            res = extension_count_detailed(g, l, l1)
            assert res.pre_division_total == truth * comb(l, l1)
            assert res.count == truth


def test_inexact_division_is_reported():
    with pytest.raises(ConsistencyError):
        _exact_div(7, 3, "test")


# -- auxiliary graph ---------------------------------------------------------

def test_aux_k4_j2():
    H = build_auxiliary_graph(complete(4), 2)
    assert H.h_graph.n == 6
    copies, edges = aux_by_pair_scan(complete(4), 2)
    assert len(edges) == 3 == H.h_graph.m  # the 3 perfect matchings of 4 points
    assert list(H.h_vertices) == copies


def test_aux_c5_j2():
    H = build_auxiliary_graph(gen_standard("cycle", n=5)[0], 2)
    assert (H.h_graph.n, H.h_graph.m) == (5, 0)


def test_aux_k6_triangles_are_perfect_matchings():
    H = build_auxiliary_graph(complete(6), 2)
    assert H.h_graph.n == 15
    assert len(brute_force_triangles(H.h_graph)) == len(perfect_matchings(list(range(6)))) == 15


@given(dense_graphs(max_n=9))
def test_aux_matches_pair_scan(g):
    for j in (1, 2, 3):
        H = build_auxiliary_graph(g, j)
        copies, edges = aux_by_pair_scan(g, j)
        assert list(H.h_vertices) == copies
        assert set(H.h_graph.edges()) == edges


@given(dense_graphs(max_n=10))
def test_aux_j1_is_the_graph(g):
    H = build_auxiliary_graph(g, 1)
    assert H.h_vertices == tuple((v,) for v in range(g.n))
    assert H.h_graph == g


def test_aux_budget():
    with pytest.raises(CapacityError):
        build_auxiliary_graph(complete(8), 2, max_vertices=10)


# -- triangle method ---------------------------------------------------------

def test_multiplicity():
    assert triangle_method_multiplicity(1) == 1
    assert triangle_method_multiplicity(2) == 15 == len(perfect_matchings(list(range(6))))
    assert triangle_method_multiplicity(3) == factorial(9) // (factorial(3) ** 3 * 6) == 280


def test_triangle_method_examples():
    res = triangle_method_count_detailed(complete(6), 6)
    assert (res.pre_division_total, res.plan.multiplicity, res.count) == (15, 15, 1)
    assert triangle_method_count(complete(7), 6) == 7
    assert triangle_method_count(disjoint_union(complete(5), complete(5)), 6) == 0


def test_triangle_method_needs_multiple_of_three():
    with pytest.raises(ContractError):
        triangle_method_count(complete(6), 4)


@given(dense_graphs(max_n=10))
def test_triangle_method_matches_brute_force(g):
    for l in (3, 6, 9):
        truth = brute_force_k_cliques(g, l) if l <= g.n else 0
        res = triangle_method_count_detailed(g, l)
        assert res.pre_division_total == truth * res.plan.multiplicity
        assert res.count == truth


# -- detection ---------------------------------------------------------------

def test_detect_examples():
    w = triangle_method_detect(complete(7), 7)
    assert w == tuple(range(7))
    w = triangle_method_detect(gen_lemma3(3, 4)[0], 5)
    g = gen_lemma3(3, 4)[0]
    assert w is not None and len(w) == 5 and is_clique(g, w)
    assert triangle_method_detect(gen_standard("cycle", n=9)[0], 4) is None


def test_edge_count_detect_examples():
    assert edge_count_detect_k4_in_H(complete(8), 2) == tuple(range(8))
    g = gen_lemma3(2, 8)[0]
    w = edge_count_detect_k4_in_H(g, 2)
    assert w is not None and len(w) == 8 and is_clique(g, w)
    bip = gen_standard("complete_bipartite", a=4, b=4)[0]
    assert edge_count_detect_k4_in_H(bip, 1) is None


@given(dense_graphs(max_n=11))
def test_detection_iff_count_positive(g):
    for l in range(3, 9):
        exact = count_k_cliques(g, l)
        w = triangle_method_detect(g, l)
        assert (w is not None) == (exact > 0)
        if w is not None:
            assert len(w) == l and is_clique(g, w)
    for j in (1, 2):
        exact = count_k_cliques(g, 4 * j)
        w = edge_count_detect_k4_in_H(g, j)
        assert (w is not None) == (exact > 0)
        if w is not None:
            assert len(w) == 4 * j and is_clique(g, w)
