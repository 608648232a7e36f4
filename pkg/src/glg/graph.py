"""Graph representation, graph6/edge-list codecs, generators and permutations.

Adjacency is stored as one Python ``int`` per vertex, used as a bit-set over
the vertex indices. Bit ``u`` of ``adj[v]`` is set iff ``(u, v)`` is an edge.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, Sequence

MAX_GRAPH6_N = 62


class GraphFormatError(ValueError):
    """Raised when a graph6 record or edge-list file cannot be decoded."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency must have exactly n rows")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= self.adj[v]
            frontier = reach & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indices of set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bits_to_list(x: int) -> list[int]:
    return list(iter_bits(x))


def list_to_bits(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


# graph6 ---------------------------------------------------------------------


def decode_graph6(line: str | bytes) -> Graph:
    """Decode a single-size-byte graph6 record (n <= 62)."""
    if isinstance(line, bytes):
        line = line.decode("ascii")
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise GraphFormatError("empty graph6 record")
    data = [ord(c) - 63 for c in text]
    for i, b in enumerate(data):
        if not 0 <= b <= 63:
            raise GraphFormatError(f"byte {i} ({text[i]!r}) outside the graph6 range 63..126")
    n = data[0]
    if n == 63:
        raise GraphFormatError("multi-byte graph6 size forms (n > 62) are not supported")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) < nbytes:
        raise GraphFormatError(f"truncated record: expected {nbytes} adjacency bytes, got {len(body)}")
    if len(body) > nbytes:
        raise GraphFormatError(f"trailing data: expected {nbytes} adjacency bytes, got {len(body)}")
    bits = 0
    for b in body:
        bits = (bits << 6) | b
    pad = nbytes * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits")
    bits >>= pad
    rows = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (bits >> pos) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(rows))


def encode_graph6(g: Graph) -> str:
    if g.n > MAX_GRAPH6_N:
        raise GraphFormatError(f"n={g.n} exceeds the single-byte graph6 limit of {MAX_GRAPH6_N}")
    out = [chr(63 + g.n)]
    acc = 0
    count = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            count += 1
            if count == 6:
                out.append(chr(63 + acc))
                acc = count = 0
    if count:
        out.append(chr(63 + (acc << (6 - count))))
    return "".join(out)


def read_graph6(path: str | Path) -> list[Graph]:
    return list(iter_graph6(path))


def iter_graph6(path: str | Path) -> Iterator[Graph]:
    with open(path, encoding="ascii") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                yield decode_graph6(line)
            except GraphFormatError as exc:
                raise GraphFormatError(f"{path}:{lineno}: {exc}") from None


def write_graph6(path: str | Path, graphs: Iterable[Graph]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")


# edge lists -----------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-indexed)."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise GraphFormatError("empty edge list")
    try:
        n, m = (int(x) for x in lines[0])
        edges = [(int(u), int(v)) for u, v in lines[1:]]
    except ValueError as exc:
        raise GraphFormatError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise GraphFormatError(f"header says m={m} but {len(edges)} edges follow")
    try:
        g = Graph.from_edges(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None
    if g.m != m:
        raise GraphFormatError("duplicate edges in edge list")
    return g


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def load_graphs(path: str | Path) -> list[Graph]:
    """Load graphs from a graph6 file, or a single graph from an edge-list file."""
    path = Path(path)
    text = path.read_text(encoding="ascii")
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    if len(first.split()) == 2 and all(tok.isdigit() for tok in first.split()):
        return [parse_edge_list(text)]
    return read_graph6(path)


# generators -----------------------------------------------------------------


def make_path(n: int) -> Graph:
    _check_order(n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def make_cycle(n: int) -> Graph:
    _check_order(n)
    if n < 3:
        return make_path(n)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def make_complete(n: int) -> Graph:
    _check_order(n)
    return Graph.from_edges(n, combinations(range(n), 2))


def make_star(n: int) -> Graph:
    """Star on ``n`` vertices with center 0."""
    _check_order(n)
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def make_grid(width: int, height: int, wrap: bool = False) -> Graph:
    """Moore-neighborhood grid; vertex ``y * width + x`` is cell ``(x, y)``."""
    if width < 1 or height < 1:
        raise ValueError("grid dimensions must be positive")
    if wrap and (width < 3 or height < 3):
        raise ValueError("a wrapped grid needs width >= 3 and height >= 3")
    edges = set()
    for y in range(height):
        for x in range(width):
            v = y * width + x
            for dy in (-1, 0, 1):
                for dx in (-1, 0, 1):
                    if dx == dy == 0:
                        continue
                    nx_, ny = x + dx, y + dy
                    if wrap:
                        nx_ %= width
                        ny %= height
                    elif not (0 <= nx_ < width and 0 <= ny < height):
                        continue
                    u = ny * width + nx_
                    edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(width * height, sorted(edges))


def pair_from_index(idx: int) -> tuple[int, int]:
    """Map ``idx`` to the pair ``(i, j)``, ``i < j``, in colex order."""
    j = 1
    while j * (j + 1) // 2 <= idx:
        j += 1
    return idx - j * (j - 1) // 2, j


def random_gnm(n: int, m: int, rng_seed: int) -> Graph:
    """Uniform random graph with exactly ``m`` edges.

    Draws ``m`` distinct pair indices with a partial Fisher-Yates shuffle
    driven by :class:`random.Random`, whose output is stable across platforms.
    """
    total = n * (n - 1) // 2
    if not 0 <= m <= total:
        raise ValueError(f"m={m} out of range 0..{total} for n={n}")
    rng = random.Random(rng_seed)
    swapped: dict[int, int] = {}
    chosen = []
    for i in range(m):
        j = rng.randrange(i, total)
        chosen.append(swapped.get(j, j))
        swapped[j] = swapped.get(i, i)
    return Graph.from_edges(n, (pair_from_index(k) for k in chosen))


def _check_order(n: int) -> None:
    if n < 1:
        raise ValueError("n must be at least 1")


# permutations ---------------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    map: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.map) != list(range(len(self.map))):
            raise ValueError("not a permutation of 0..n-1")

    def __len__(self) -> int:
        return len(self.map)

    def __call__(self, v: int) -> int:
        return self.map[v]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.map)
        for i, p in enumerate(self.map):
            inv[p] = i
        return Permutation(tuple(inv))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def random(cls, n: int, rng: random.Random) -> "Permutation":
        p = list(range(n))
        rng.shuffle(p)
        return cls(tuple(p))


def apply_permutation(g: Graph, p: Permutation | Sequence[int]) -> Graph:
    """Relabel vertex ``v`` of ``g`` as ``p(v)``."""
    if not isinstance(p, Permutation):
        p = Permutation(tuple(p))
    if len(p) != g.n:
        raise ValueError(f"permutation length {len(p)} does not match n={g.n}")
    return Graph.from_edges(g.n, ((p(u), p(v)) for u, v in g.edges()))
