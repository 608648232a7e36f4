"""Conway's Life as GLG(grid, A0, 2, 5, 3) on a wrapped Moore grid."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .engine import CONWAY, simulate
from .graph import Graph, iter_bits, make_grid

# (x, y) cells; y grows downward, the glider travels toward +x, +y.
PATTERNS: dict[str, tuple[tuple[int, int], ...]] = {
    "blinker": ((1, 2), (2, 2), (3, 2)),
    "block": ((1, 1), (2, 1), (1, 2), (2, 2)),
    "glider": ((1, 0), (2, 1), (0, 2), (1, 2), (2, 2)),
}


def cells_to_bits(cells, width: int, height: int) -> int:
    out = 0
    for x, y in cells:
        out |= 1 << ((y % height) * width + (x % width))
    return out


def bits_to_board(alive: int, width: int, height: int) -> np.ndarray:
    board = np.zeros((height, width), dtype=np.uint8)
    for v in iter_bits(alive):
        board[v // width, v % width] = 1
    return board


def board_to_bits(board: np.ndarray) -> int:
    height, width = board.shape
    return cells_to_bits(((int(x), int(y)) for y, x in zip(*np.nonzero(board))), width, height)


def conway_step_reference(board: np.ndarray) -> np.ndarray:
    """Direct toroidal Conway update: birth on 3, survival on 2 or 3."""
    count = sum(
        np.roll(np.roll(board, dy, axis=0), dx, axis=1)
        for dy in (-1, 0, 1) for dx in (-1, 0, 1) if (dx, dy) != (0, 0)
    )
    return ((count == 3) | ((board == 1) & (count == 2))).astype(np.uint8)


def translate(alive: int, width: int, height: int, dx: int, dy: int) -> int:
    cells = [(v % width + dx, v // width + dy) for v in iter_bits(alive)]
    return cells_to_bits(cells, width, height)


@dataclass(frozen=True)
class ConwayRun:
    pattern: str
    width: int
    height: int
    period: int
    dx: int
    dy: int
    returns_at: int | None
    died: bool

    def describe(self) -> str:
        if self.died:
            return f"pattern={self.pattern} grid={self.width}x{self.height} died"
        return (f"pattern={self.pattern} grid={self.width}x{self.height} period={self.period} "
                f"dx={self.dx} dy={self.dy} returns_at={self.returns_at}")


def run_pattern(name: str, width: int, height: int, cap: int = 10_000) -> ConwayRun:
    """Run a named pattern and find its period up to translation.

    ``returns_at`` is the first step at which the exact initial pattern recurs.
    """
    if name not in PATTERNS:
        raise KeyError(f"unknown pattern {name!r}; choose from {', '.join(PATTERNS)}")
    g: Graph = make_grid(width, height, wrap=True)
    seed = cells_to_bits(PATTERNS[name], width, height)
    traj = simulate(g, seed, CONWAY, cap)
    if traj.died:
        return ConwayRun(name, width, height, 0, 0, 0, None, True)
    shifts = [(dx, dy) for dy in range(height) for dx in range(width)]
    for t in range(1, len(traj.patterns)):
        for dx, dy in shifts:
            if traj.patterns[t] == translate(seed, width, height, dx, dy):
                dx = dx - width if dx > width // 2 else dx
                dy = dy - height if dy > height // 2 else dy
                returns_at = traj.end if traj.entry == 0 else None
                return ConwayRun(name, width, height, t, dx, dy, returns_at, False)
    return ConwayRun(name, width, height, traj.period, 0, 0, None, False)
