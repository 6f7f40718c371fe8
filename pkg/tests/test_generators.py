from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sparsecliques import (
    ContractError,
    brute_force_k_cliques,
    brute_force_triangles,
    count_k_cliques,
    degeneracy,
    gen_lemma2,
    gen_lemma3,
    gen_standard,
)
from sparsecliques.edgelist import format_edge_list
from sparsecliques.generators import gnp_edges, splitmix64_scalar, splitmix64_uniforms


def _brute_counts_ok(g, cert):
    for l, want in cert.expected_counts.items():
        if comb(g.n, l) <= 2 * 10**6:
            assert brute_force_k_cliques(g, l) == want, l


def test_splitmix64_reference_vector():
    # first output of splitmix64 seeded with 0
    assert splitmix64_scalar(0, 0) == (0xE220A8397B1DCDAF >> 11) / 2.0**53


@given(st.integers(0, 2**64 - 1), st.integers(0, 10**6))
def test_splitmix64_vector_matches_scalar(seed, start):
    vec = splitmix64_uniforms(seed, start, 5)
    assert list(vec) == [splitmix64_scalar(seed, start + i) for i in range(5)]


def test_gnp_chunking_is_invisible():
    assert gnp_edges(80, 0.2, 42, chunk=7) == gnp_edges(80, 0.2, 42)


def test_gnp_follows_lexicographic_stream():
    n, p, seed = 12, 0.4, 3
    draws = splitmix64_uniforms(seed, 0, n * (n - 1) // 2)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    assert gnp_edges(n, p, seed) == [e for e, x in zip(pairs, draws) if x < p]


def test_gnp_reproducible():
    a, _ = gen_standard("random_gnp", n=50, p=0.2, seed=42)
    b, _ = gen_standard("random_gnp", n=50, p=0.2, seed=42)
    c, _ = gen_standard("random_gnp", n=50, p=0.2, seed=43)
    assert format_edge_list(a) == format_edge_list(b) != format_edge_list(c)


def test_gnp_density_is_plausible():
    g, _ = gen_standard("random_gnp", n=400, p=0.1, seed=1)
    assert abs(g.m / comb(400, 2) - 0.1) < 0.01


def test_lemma2_pure_clique():
    g, cert = gen_lemma2(10, 10)
    assert g.m == 10 and cert.expected_counts[3] == 10
    assert g.degrees[5:] == (0,) * 5
    assert len(brute_force_triangles(g)) == 10


def test_lemma2_extra_edges():
    g, cert = gen_lemma2(10, 12)
    assert [g.degrees[v] for v in range(5, 10)] == [1, 1, 0, 0, 0]
    assert cert.expected_counts[3] == 10 == len(brute_force_triangles(g))


def test_lemma2_exact_square():
    g, cert = gen_lemma2(100, 300)
    assert cert.expected_counts[3] == comb(25, 3) == 2300
    assert len(brute_force_triangles(g)) == 2300


@given(st.integers(3, 16).flatmap(lambda n: st.tuples(st.just(n), st.integers(3, comb(n, 2)))))
def test_lemma2_certificate(nm):
    n, m = nm
    g, cert = gen_lemma2(n, m)
    assert (g.n, g.m) == (n, m) == (cert.n, cert.m)
    for l, want in cert.expected_counts.items():
        assert count_k_cliques(g, l) == want
    assert cert.expected_counts[3] >= comb(max(k for k in range(n + 1) if comb(k, 2) <= m), 3)


def test_lemma2_range():
    with pytest.raises(ContractError):
        gen_lemma2(5, 11)
    with pytest.raises(ContractError):
        gen_lemma2(5, 2)


def test_lemma3_examples():
    g, cert = gen_lemma3(3, 4)
    assert (g.n, g.m) == (14, 42)
    assert cert.expected_counts[3] == 48 and cert.expected_counts[4] == 27
    assert cert.alpha_claim == 4
    _brute_counts_ok(g, cert)
    g, cert = gen_lemma3(1, 2)
    assert (g.n, g.m) == (3, 3) and cert.expected_counts[3] == 1
    g, cert = gen_lemma3(2, 8)
    assert cert.expected_counts[8] == 66
    assert count_k_cliques(g, 8) == 66
    assert brute_force_k_cliques(g, 5) == cert.expected_counts[5]


def test_lemma3_padding():
    g, cert = gen_lemma3(2, 4, n_pad=3)
    assert g.n == 13 and g.degrees[-3:] == (0, 0, 0)
    assert cert.expected_counts == gen_lemma3(2, 4)[1].expected_counts


def test_lemma3_rejects_odd_b():
    with pytest.raises(ContractError):
        gen_lemma3(2, 5)


@given(st.integers(1, 4), st.integers(1, 6).map(lambda h: 2 * h))
def test_lemma3_certificate_and_degeneracy(k, b):
    g, cert = gen_lemma3(k, b)
    assert g.m == k * comb(b, 2) + k * b * b // 2 == cert.m
    assert degeneracy(g).d <= 2 * cert.alpha_claim - 1
    for l in range(3, min(b + 1, 6) + 1):
        assert count_k_cliques(g, l) == cert.expected_counts[l]


@pytest.mark.parametrize("l", [3, 4, 5, 6])
@pytest.mark.parametrize("k", [1, 2, 5])
def test_lemma3_tightness(k, l):
    for b in range(2 * l, 41, 2):
        g, cert = gen_lemma3(k, b)
        c = 1 / (2**l * factorial(l))
        assert cert.expected_counts[l] >= c * cert.alpha_claim ** (l - 2) * g.m


def test_standard_models():
    g, cert = gen_standard("complete", n=6)
    assert cert.expected_counts[3] == 20 and g.m == 15
    g, cert = gen_standard("complete_bipartite", a=5, b=5)
    assert cert.expected_counts[3] == 0 == len(brute_force_triangles(g))
    g, cert = gen_standard("cycle", n=3)
    assert cert.expected_counts[3] == 1
    g, cert = gen_standard("path", n=6)
    assert g.m == 5 and cert.alpha_claim == 1
    for bad in (dict(model="torus", n=4), dict(model="complete"), dict(model="cycle", n=2)):
        with pytest.raises(ContractError):
            gen_standard(**bad)


def test_gnp_certificate_filled_by_oracle():
    g, cert = gen_standard("random_gnp", n=50, p=0.2, seed=42)
    assert cert.expected_counts == {} and cert.seed == 42
    assert count_k_cliques(g, 3) == len(brute_force_triangles(g))
