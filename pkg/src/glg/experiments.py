"""Complexity and halting statistics as a function of edge count.

Every graph contributes one game per vertex (single-vertex seeds). Sums are
kept as exact integers and only turned into means when a record is built, so
results do not depend on how work was split between processes.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from pathlib import Path
from typing import Iterable, Sequence

from .engine import LIFE, CapExceeded, GameParams, simulate
from .graph import Graph, encode_graph6, random_gnm
from .parallel import pmap

MASK64 = (1 << 64) - 1

DENSITY_CSV_HEADER = [
    "n", "m", "density", "games", "mean_complexity", "max_complexity", "halting_fraction", "params", "seed",
]


def splitmix64(x: int) -> int:
    """One round of the SplitMix64 output function (Steele, Lea, Flood 2014)."""
    z = (x + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(rng_seed: int, m: int, i: int) -> int:
    """Seed for sample ``i`` at edge count ``m``; independent of evaluation order."""
    return splitmix64(splitmix64(splitmix64(rng_seed & MASK64) ^ m) ^ i)


@dataclass(frozen=True)
class GraphStats:
    m: int
    games: int
    total_complexity: int
    max_complexity: int
    halted: int


def graph_stats(g: Graph, params: GameParams = LIFE, cap: int | None = None) -> GraphStats:
    total = top = halted = 0
    for v in range(g.n):
        try:
            traj = simulate(g, 1 << v, params, cap)
        except CapExceeded as exc:
            raise CapExceeded(exc.cap, f"graph {encode_graph6(g)}, seed {v}") from None
        c = traj.complexity
        total += c
        top = max(top, c)
        halted += traj.died
    return GraphStats(g.m, g.n, total, top, halted)


@dataclass(frozen=True)
class DensityRecord:
    n: int
    m: int
    graphs: int
    games: int
    total_complexity: int
    max_complexity: int
    halted: int

    @property
    def density(self) -> float:
        pairs = self.n * (self.n - 1) // 2
        return self.m / pairs if pairs else 0.0

    @property
    def mean_complexity(self) -> float:
        return float(Fraction(self.total_complexity, self.games))

    @property
    def halting_fraction(self) -> float:
        return float(Fraction(self.halted, self.games))

    @property
    def mean_graph_complexity(self) -> float:
        """Mean over graphs of the summed complexity of the graph's ``n`` games."""
        return float(Fraction(self.total_complexity, self.graphs))


def aggregate(n: int, stats: Iterable[GraphStats]) -> list[DensityRecord]:
    acc: dict[int, list[int]] = {}
    for s in stats:
        row = acc.setdefault(s.m, [0, 0, 0, 0, 0])
        row[0] += 1
        row[1] += s.games
        row[2] += s.total_complexity
        row[3] = max(row[3], s.max_complexity)
        row[4] += s.halted
    return [DensityRecord(n, m, *acc[m]) for m in sorted(acc)]


def exhaustive_complexity(
    corpus: Sequence[Graph],
    params: GameParams = LIFE,
    cap: int | None = None,
    threads: int | None = 1,
) -> list[DensityRecord]:
    """One record per edge count over every graph and every single-vertex seed."""
    if not corpus:
        return []
    sizes = {g.n for g in corpus}
    if len(sizes) > 1:
        raise ValueError(f"corpus mixes vertex counts {sorted(sizes)}")
    stats = pmap(partial(graph_stats, params=params, cap=cap), corpus, threads, chunksize=256)
    return aggregate(sizes.pop(), stats)


def _sample_stats(job: tuple[int, int, int], params: GameParams, cap: int | None) -> GraphStats:
    n, m, seed = job
    return graph_stats(random_gnm(n, m, seed), params, cap)


def random_ensemble(
    n: int,
    m_values: Sequence[int],
    samples_per_m: int = 500,
    rng_seed: int = 0,
    params: GameParams = LIFE,
    cap: int | None = None,
    threads: int | None = 1,
) -> list[DensityRecord]:
    """Halting and complexity statistics of ``G(n, m)`` samples for each ``m``."""
    if samples_per_m < 1:
        raise ValueError("samples_per_m must be at least 1")
    pairs = n * (n - 1) // 2
    for m in m_values:
        if not 0 <= m <= pairs:
            raise ValueError(f"m={m} out of range 0..{pairs} for n={n}")
    jobs = [(n, m, derive_seed(rng_seed, m, i)) for m in m_values for i in range(samples_per_m)]
    stats = pmap(partial(_sample_stats, params=params, cap=cap), jobs, threads, chunksize=32)
    by_m = {r.m: r for r in aggregate(n, stats)}
    return [by_m[m] for m in dict.fromkeys(m_values)]


def peak_edge_count(records: Sequence[DensityRecord]) -> int:
    """Edge count with the largest mean complexity (smallest m on ties)."""
    best = max(records, key=lambda r: (Fraction(r.total_complexity, r.games), -r.m))
    return best.m


def density_rows(
    records: Sequence[DensityRecord], params: GameParams, seed: int | None = None, per_graph: bool = False
) -> list[list[str]]:
    header = DENSITY_CSV_HEADER + (["mean_graph_complexity"] if per_graph else [])
    rows = [header]
    for r in records:
        row = [
            str(r.n), str(r.m), repr(r.density), str(r.games), repr(r.mean_complexity),
            str(r.max_complexity), repr(r.halting_fraction), str(params), "" if seed is None else str(seed),
        ]
        if per_graph:
            row.append(repr(r.mean_graph_complexity))
        rows.append(row)
    return rows


def write_density_csv(
    path: str | Path,
    records: Sequence[DensityRecord],
    params: GameParams,
    seed: int | None = None,
    per_graph: bool = False,
) -> None:
    with open(path, "w", newline="", encoding="ascii") as fh:
        csv.writer(fh, lineterminator="\n").writerows(density_rows(records, params, seed, per_graph))


def parse_m_values(text: str) -> list[int]:
    """Parse ``"1..60"``, ``"0,5,10"`` or a mix such as ``"0,10..12"``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise ValueError(f"no edge counts in {text!r}")
    return out
