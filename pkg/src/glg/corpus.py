"""Small exhaustive graph corpora.

Isomorphism classes are enumerated by vertex augmentation: every graph on
``n`` vertices is obtained from one on ``n - 1`` by adding a vertex with some
neighborhood, and candidates are deduplicated by bucketing on a cheap
invariant followed by an exact VF2 isomorphism check (networkx). Nothing here
uses the GLG features, so the corpora are an independent source for the
collision experiments.

The files shipped under ``glg/data`` were produced by :func:`write_corpus`.
"""

from __future__ import annotations

import logging
from importlib import resources
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterable

import networkx as nx

from .graph import Graph, bits_to_list, iter_bits, read_graph6, write_graph6

log = logging.getLogger(__name__)

# Known class counts, used to sanity-check the enumeration.
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080, 10: 11716571}
CUBIC_CONNECTED_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85}


def vertex_invariant(g: Graph) -> tuple:
    """Isomorphism-invariant key: sorted per-vertex (degree, neighbor degrees, triangles)."""
    deg = g.degrees()
    rows = []
    for v in range(g.n):
        nb = g.adj[v]
        tri = sum((g.adj[u] & nb).bit_count() for u in iter_bits(nb)) // 2
        rows.append((deg[v], tuple(sorted(deg[u] for u in iter_bits(nb))), tri))
    rows.sort()
    return (g.n, g.m, tuple(rows))


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


class _ClassSet:
    """Set of graphs up to isomorphism."""

    def __init__(self) -> None:
        self.buckets: dict[tuple, list[tuple[Graph, nx.Graph]]] = {}
        self.graphs: list[Graph] = []

    def add(self, g: Graph) -> bool:
        key = vertex_invariant(g)
        bucket = self.buckets.setdefault(key, [])
        if bucket:
            gx = _to_nx(g)
            if any(nx.is_isomorphic(gx, hx) for _, hx in bucket):
                return False
        else:
            gx = _to_nx(g)
        bucket.append((g, gx))
        self.graphs.append(g)
        return True


def _extend(g: Graph, nbrs: int) -> Graph:
    n = g.n
    rows = [row | (((nbrs >> v) & 1) << n) for v, row in enumerate(g.adj)]
    rows.append(nbrs)
    return Graph(n + 1, tuple(rows))


def augment(
    graphs: Iterable[Graph],
    neighborhoods: Callable[[Graph], Iterable[int]],
    keep: Callable[[Graph], bool] = lambda g: True,
) -> list[Graph]:
    classes = _ClassSet()
    for g in graphs:
        for nbrs in neighborhoods(g):
            h = _extend(g, nbrs)
            if keep(h):
                classes.add(h)
    return classes.graphs


def _all_subsets(g: Graph) -> range:
    return range(1 << g.n)


def _nonempty_subsets(g: Graph) -> range:
    return range(1, 1 << g.n)


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on ``n`` vertices, one per isomorphism class.

    Every connected graph has a non-cut vertex, so augmenting connected
    graphs by a vertex with a non-empty neighborhood reaches all classes.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    level = [Graph(1, (0,))]
    for k in range(2, n + 1):
        level = augment(level, _nonempty_subsets)
        log.info("connected graphs on %d vertices: %d", k, len(level))
    return sorted(level, key=_sort_key)


def all_graphs(n: int) -> list[Graph]:
    if n < 1:
        raise ValueError("n must be at least 1")
    level = [Graph(1, (0,))]
    for _ in range(2, n + 1):
        level = augment(level, _all_subsets)
    return sorted(level, key=_sort_key)


def regular_graphs(n: int, degree: int, connected: bool = True) -> list[Graph]:
    """All ``degree``-regular graphs on ``n`` vertices up to isomorphism."""
    if n * degree % 2 or degree >= n:
        return []

    def feasible(g: Graph) -> bool:
        remaining = n - g.n
        deficits = [degree - d for d in g.degrees()]
        if any(x < 0 or x > remaining for x in deficits):
            return False
        return sum(deficits) <= degree * remaining

    def neighborhoods(g: Graph) -> Iterable[int]:
        open_vertices = [v for v in range(g.n) if g.degree(v) < degree]
        for size in range(min(degree, len(open_vertices)) + 1):
            for combo in combinations(open_vertices, size):
                yield sum(1 << v for v in combo)

    level = [Graph(1, (0,))]
    for _ in range(2, n + 1):
        level = augment(level, neighborhoods, feasible)
    out = [g for g in level if all(d == degree for d in g.degrees())]
    if connected:
        out = [g for g in out if g.is_connected()]
    return sorted(out, key=_sort_key)


def _sort_key(g: Graph) -> tuple:
    return (g.m, tuple(bits_to_list(row) for row in g.adj))


# shipped data ---------------------------------------------------------------

CORPUS_FILES = {
    **{f"connected{n}": f"connected{n}.g6" for n in range(1, 9)},
    **{f"cubic{n}": f"cubic{n}.g6" for n in (4, 6, 8, 10)},
}


def corpus_path(name: str) -> Path:
    """Path to a shipped corpus (``connected5``..``connected8``, ``cubic6``..)."""
    if name not in CORPUS_FILES:
        raise KeyError(f"unknown corpus {name!r}; available: {', '.join(sorted(CORPUS_FILES))}")
    return Path(str(resources.files("glg") / "data" / CORPUS_FILES[name]))


def load_corpus(name: str) -> list[Graph]:
    return read_graph6(corpus_path(name))


def generate(name: str) -> list[Graph]:
    if name.startswith("connected"):
        return connected_graphs(int(name[len("connected"):]))
    if name.startswith("cubic"):
        return regular_graphs(int(name[len("cubic"):]), 3)
    raise KeyError(f"unknown corpus family {name!r}")


def write_corpus(name: str, path: str | Path) -> int:
    graphs = generate(name)
    write_graph6(path, graphs)
    return len(graphs)
