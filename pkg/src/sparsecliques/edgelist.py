"""Plain-text edge lists and clique streams.

Format: ``#`` starts a comment line, ``# n <count>`` pins the vertex count,
every other non-blank line is ``u v``.  Without the directive, vertex ids are
re-indexed densely in increasing order.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Union

from .errors import MalformedInputError
from .generators import GeneratorCertificate
from .graph import Graph, _build_graph_counting

_DIRECTIVE = re.compile(r"#\s*n\s+(\d+)\s*$")


@dataclass(frozen=True)
class ParseReport:
    n: int
    m: int
    self_loops: int
    duplicates: int
    relabeled: bool


def parse_edge_list(text: str) -> tuple[Graph, ParseReport]:
    pinned: Optional[int] = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            hit = _DIRECTIVE.match(line)
            if hit:
                pinned = int(hit.group(1))
            continue
        parts = line.split()
        if len(parts) != 2:
            raise MalformedInputError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedInputError(f"line {lineno}: non-integer vertex id in {raw!r}") from None
        if u < 0 or v < 0:
            raise MalformedInputError(f"line {lineno}: negative vertex id")
        pairs.append((u, v))

    relabeled = False
    if pinned is not None:
        n = pinned
    else:
        ids = sorted({x for e in pairs for x in e})
        n = len(ids)
        if ids and ids[-1] != n - 1:
            index = {v: i for i, v in enumerate(ids)}
            pairs = [(index[u], index[v]) for u, v in pairs]
            relabeled = True
    g, loops, dups = _build_graph_counting(pairs, n)
    return g, ParseReport(g.n, g.m, loops, dups, relabeled)


def read_edge_list(path: Union[str, Path]) -> tuple[Graph, ParseReport]:
    return parse_edge_list(Path(path).read_text())


def format_edge_list(g: Graph) -> str:
    lines = [f"# n {g.n}", f"# m {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path: Union[str, Path]) -> None:
    Path(path).write_text(format_edge_list(g))


def format_cliques(cliques: Iterable[tuple[int, ...]]) -> str:
    return "".join(" ".join(map(str, c)) + "\n" for c in sorted(cliques))


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def write_certificate(cert: GeneratorCertificate, path: Union[str, Path]) -> None:
    Path(path).write_text(dump_json(cert.to_json()))


def read_certificate(path: Union[str, Path]) -> GeneratorCertificate:
    return GeneratorCertificate.from_json(json.loads(Path(path).read_text()))
