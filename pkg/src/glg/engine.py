"""Synchronous GLG dynamics with exact cycle detection.

A life pattern is an ``int`` bit-set of alive vertices. A vertex stays alive
when it has at least ``a`` alive and at least ``d`` dead neighbors; a dead
vertex is born when exactly ``r`` of its neighbors are alive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .graph import Graph, bits_to_list

MAX_DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class GameParams:
    a: int = 1
    d: int = 1
    r: int = 1

    def __post_init__(self) -> None:
        if min(self.a, self.d, self.r) < 0:
            raise ValueError("game parameters must be non-negative")

    @classmethod
    def parse(cls, text: str) -> "GameParams":
        """Parse ``"a,d,r"`` (``:`` and ``/`` also accepted as separators)."""
        parts = text.replace(":", ",").replace("/", ",").split(",")
        if len(parts) != 3:
            raise ValueError(f"expected three integers a,d,r, got {text!r}")
        return cls(*(int(p) for p in parts))

    def __str__(self) -> str:
        return f"{self.a}:{self.d}:{self.r}"


LIFE = GameParams(1, 1, 1)
CONWAY = GameParams(2, 5, 3)


class CapExceeded(RuntimeError):
    """The dynamics neither died nor repeated within the step cap."""

    def __init__(self, cap: int, detail: str = "") -> None:
        self.cap = cap
        msg = f"no death or repetition within {cap} steps"
        super().__init__(f"{msg} ({detail})" if detail else msg)


@dataclass(frozen=True)
class Trajectory:
    """Patterns ``A_0 .. A_end`` plus how the run terminated.

    For ``outcome == "died"``, ``patterns[end]`` is the first empty pattern.
    For ``outcome == "cycled"``, ``patterns[end] == patterns[entry]`` is the
    first repetition.
    """

    patterns: tuple[int, ...]
    outcome: Literal["died", "cycled"]
    end: int
    entry: int | None = None

    @property
    def died(self) -> bool:
        return self.outcome == "died"

    @property
    def t_died(self) -> int | None:
        return self.end if self.died else None

    @property
    def repeat_at(self) -> int | None:
        return None if self.died else self.end

    @property
    def period(self) -> int | None:
        return None if self.died else self.end - self.entry

    @property
    def complexity(self) -> int:
        """Number of distinct non-empty patterns seen before termination."""
        return sum(1 for p in self.patterns[: self.end] if p)

    def describe(self) -> str:
        if self.died:
            return f"complexity={self.complexity} outcome=died t={self.end}"
        return f"complexity={self.complexity} outcome=cycled entry={self.entry} repeat_at={self.end}"

    def pattern_lists(self) -> list[list[int]]:
        return [bits_to_list(p) for p in self.patterns]


def default_cap(n: int) -> int:
    return min(2**n + 1, MAX_DEFAULT_CAP)


def step(g: Graph, current: int, p: GameParams = LIFE) -> int:
    """One synchronous update of the alive set ``current``."""
    a, d, r = p.a, p.d, p.r
    nxt = 0
    for v, row in enumerate(g.adj):
        alive_nb = (row & current).bit_count()
        if (current >> v) & 1:
            if alive_nb >= a and row.bit_count() - alive_nb >= d:
                nxt |= 1 << v
        elif alive_nb == r:
            nxt |= 1 << v
    return nxt


def simulate(g: Graph, seed: int, p: GameParams = LIFE, cap: int | None = None) -> Trajectory:
    """Iterate :func:`step` from ``seed`` until the pattern empties or repeats."""
    if cap is None:
        cap = default_cap(g.n)
    if cap < 1:
        raise ValueError("cap must be at least 1")
    if seed >> g.n:
        raise ValueError("seed contains vertices outside the graph")
    adj = g.adj
    deg = [row.bit_count() for row in adj]
    verts = range(g.n)
    a, d, r = p.a, p.d, p.r

    patterns = [seed]
    seen = {seed: 0}
    cur = seed
    t = 0
    while cur:
        if t == cap:
            raise CapExceeded(cap)
        nxt = 0
        for v in verts:
            alive_nb = (adj[v] & cur).bit_count()
            if (cur >> v) & 1:
                if alive_nb >= a and deg[v] - alive_nb >= d:
                    nxt |= 1 << v
            elif alive_nb == r:
                nxt |= 1 << v
        t += 1
        patterns.append(nxt)
        prev = seen.get(nxt)
        if prev is not None and nxt:
            return Trajectory(tuple(patterns), "cycled", t, prev)
        seen[nxt] = t
        cur = nxt
    return Trajectory(tuple(patterns), "died", t)


def halts(g: Graph, seed: int, p: GameParams = LIFE, cap: int | None = None) -> bool:
    return simulate(g, seed, p, cap).died
