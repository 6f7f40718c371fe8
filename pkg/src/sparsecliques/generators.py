"""Deterministic fixture graphs with certificates of their exact clique counts."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Any, Optional

import numpy as np

from .errors import ContractError
from .graph import Graph, build_graph

GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MASK64 = (1 << 64) - 1


@dataclass
class GeneratorCertificate:
    model: str
    params: dict[str, Any]
    n: int
    m: int
    expected_counts: dict[int, int] = field(default_factory=dict)
    alpha_claim: Optional[int] = None
    seed: Optional[int] = None

    def to_json(self) -> dict[str, Any]:
        return {
            "model": self.model,
            "params": self.params,
            "n": self.n,
            "m": self.m,
            "expected_counts": {str(k): v for k, v in sorted(self.expected_counts.items())},
            "alpha_claim": self.alpha_claim,
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "GeneratorCertificate":
        return cls(
            data["model"], data["params"], data["n"], data["m"],
            {int(k): v for k, v in data.get("expected_counts", {}).items()},
            data.get("alpha_claim"), data.get("seed"),
        )


def gen_lemma2(n: int, m: int) -> tuple[Graph, GeneratorCertificate]:
    """K_x on the first x vertices plus m - C(x,2) edges dealt round-robin to the rest.

    x is the largest integer with C(x, 2) <= m.  The remaining vertices stay
    independent, so each K_l uses at most one of them.
    """
    if n < 3 or not 3 <= m <= comb(n, 2):
        raise ContractError(f"need n >= 3 and 3 <= m <= C(n, 2); got n={n}, m={m}")
    x = 3
    while comb(x + 1, 2) <= m:
        x += 1
    edges = [(u, v) for u in range(x) for v in range(u + 1, x)]
    extra = m - comb(x, 2)
    outside = n - x
    deg2 = [0] * outside
    for t in range(extra):
        w = t % outside
        edges.append((deg2[w], x + w))
        deg2[w] += 1
    g = build_graph(edges, n)
    expected = {l: comb(x, l) + sum(comb(d, l - 1) for d in deg2) for l in range(3, x + 1)}
    cert = GeneratorCertificate("lemma2", {"n": n, "m": m}, n, g.m, expected, None)
    return g, cert


def lemma3_count(k: int, b: int, l: int) -> int:
    return k * comb(b, l) + k * comb(b, l - 1) * (b // 2)


def gen_lemma3(k: int, b: int, n_pad: int = 0) -> tuple[Graph, GeneratorCertificate]:
    """k disjoint K_b blocks, every block vertex joined to an independent set of b/2 hubs."""
    if b < 2 or b % 2:
        raise ContractError(f"b must be even and >= 2, got {b}")
    if k < 1 or n_pad < 0:
        raise ContractError(f"need k >= 1 and n_pad >= 0; got k={k}, n_pad={n_pad}")
    half = b // 2
    hubs = range(k * b, k * b + half)
    edges = []
    for blk in range(k):
        block = range(blk * b, (blk + 1) * b)
        edges.extend((u, v) for u in block for v in block if u < v)
        edges.extend((u, h) for u in block for h in hubs)
    n = k * b + half + n_pad
    g = build_graph(edges, n)
    expected = {l: lemma3_count(k, b, l) for l in range(3, b + 2)}
    cert = GeneratorCertificate("lemma3", {"k": k, "b": b, "n_pad": n_pad}, n, g.m, expected, b)
    return g, cert


def splitmix64_uniforms(seed: int, start: int, count: int) -> np.ndarray:
    """Uniforms in [0, 1) from outputs ``start .. start+count-1`` of a splitmix64 stream.

    Output i mixes state ``seed + (i + 1) * gamma`` (mod 2^64); the top 53 bits
    become the mantissa, so the values match any other splitmix64 port.
    """
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed & _MASK64) + idx * np.uint64(GOLDEN_GAMMA)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        z = z ^ (z >> np.uint64(31))
    return (z >> np.uint64(11)).astype(np.float64) * (1.0 / (1 << 53))


def splitmix64_scalar(seed: int, i: int) -> float:
    """Reference scalar version of ``splitmix64_uniforms`` for a single index."""
    z = (seed + (i + 1) * GOLDEN_GAMMA) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    z ^= z >> 31
    return (z >> 11) / float(1 << 53)


def gnp_edges(n: int, p: float, seed: int, chunk: int = 1 << 22) -> list[tuple[int, int]]:
    """Pairs u < v in lexicographic order, kept iff the next uniform is < p."""
    edges: list[tuple[int, int]] = []
    offset = 0
    u = 0
    while u < n - 1:
        rows = [u]
        width = n - u - 1
        while rows[-1] + 1 < n - 1 and width + (n - rows[-1] - 2) <= chunk:
            rows.append(rows[-1] + 1)
            width += n - rows[-1] - 1
        draws = splitmix64_uniforms(seed, offset, width)
        pos = 0
        for r in rows:
            span = n - r - 1
            hits = np.nonzero(draws[pos:pos + span] < p)[0]
            edges.extend((r, r + 1 + int(h)) for h in hits)
            pos += span
        offset += width
        u = rows[-1] + 1
    return edges


def gen_standard(model: str, **params) -> tuple[Graph, GeneratorCertificate]:
    """complete(n), complete_bipartite(a, b), cycle(n), path(n), random_gnp(n, p, seed)."""
    try:
        if model == "complete":
            n = params["n"]
            g = build_graph([(u, v) for u in range(n) for v in range(u + 1, n)], n)
            counts = {l: comb(n, l) for l in range(3, n + 1)} or {3: 0}
            return g, GeneratorCertificate(model, {"n": n}, n, g.m, counts, (n + 1) // 2)
        if model == "complete_bipartite":
            a, b = params["a"], params["b"]
            g = build_graph([(u, a + v) for u in range(a) for v in range(b)], a + b)
            return g, GeneratorCertificate(model, {"a": a, "b": b}, a + b, g.m, {3: 0})
        if model == "cycle":
            n = params["n"]
            if n < 3:
                raise ContractError("cycle needs n >= 3")
            g = build_graph([(v, (v + 1) % n) for v in range(n)], n)
            return g, GeneratorCertificate(model, {"n": n}, n, g.m, {3: int(n == 3)}, 2)
        if model == "path":
            n = params["n"]
            g = build_graph([(v, v + 1) for v in range(n - 1)], n)
            return g, GeneratorCertificate(model, {"n": n}, n, g.m, {3: 0}, 1 if n > 1 else 0)
        if model == "random_gnp":
            n, p, seed = params["n"], params["p"], params["seed"]
            if not 0.0 <= p <= 1.0 or n < 0:
                raise ContractError(f"invalid gnp parameters n={n}, p={p}")
            g = build_graph(gnp_edges(n, p, seed), n)
            return g, GeneratorCertificate(model, {"n": n, "p": p}, n, g.m, {}, None, seed)
    except KeyError as exc:
        raise ContractError(f"model {model!r} missing parameter {exc}") from None
    raise ContractError(f"unknown model {model!r}")


def gnp(n: int, p: float, seed: int) -> Graph:
    return gen_standard("random_gnp", n=n, p=p, seed=seed)[0]
