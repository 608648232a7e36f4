"""Label propagation over the single-seed GLG evolutions of a graph.

Every vertex ``i`` seeds its own game ``GLG(G, {i}, 1, 1, 1)``. Labels start
at 1 and at each step ``t`` vertex ``i`` adds the step ``t - 1`` labels of the
vertices alive in its own game at step ``t``. The sorted label vector of each
step is one block of the feature vector.

Unnormalized labels are exact integers; normalized labels are exact
:class:`~fractions.Fraction` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Union

from .engine import LIFE, GameParams, step
from .graph import Graph, iter_bits

Label = Union[int, Fraction]


@dataclass(frozen=True)
class FeatureVector:
    n: int
    k: int
    normalized: bool
    blocks: tuple[tuple[Label, ...], ...]

    @property
    def values(self) -> tuple[Label, ...]:
        return tuple(x for block in self.blocks for x in block)

    def __len__(self) -> int:
        return self.n * self.k

    def serialize(self) -> str:
        """``"n k b"`` header (``b`` = 1 if normalized) then the ``k*n`` values."""
        head = f"{self.n} {self.k} {int(self.normalized)}"
        return " ".join([head, *(str(x) for x in self.values)])

    @classmethod
    def parse(cls, line: str) -> "FeatureVector":
        tokens = line.split()
        n, k, b = (int(x) for x in tokens[:3])
        conv = Fraction if b else int
        vals = [conv(x) for x in tokens[3:]]
        if len(vals) != n * k:
            raise ValueError(f"expected {n * k} values, got {len(vals)}")
        blocks = tuple(tuple(vals[t * n:(t + 1) * n]) for t in range(k))
        return cls(n, k, bool(b), blocks)

    def as_floats(self) -> list[float]:
        return [float(x) for x in self.values]


def iter_label_states(
    g: Graph, normalize: bool = False, params: GameParams = LIFE
) -> Iterator[list[Label]]:
    """Yield the (unsorted) label array for t = 1, 2, ... indefinitely."""
    n = g.n
    labels: list[Label] = [Fraction(1) if normalize else 1] * n
    games = [1 << i for i in range(n)]
    while True:
        games = [step(g, alive, params) if alive else 0 for alive in games]
        labels = [labels[i] + sum(labels[v] for v in iter_bits(alive)) for i, alive in enumerate(games)]
        if normalize:
            total = sum(labels)
            labels = [x / total for x in labels]
        yield labels


def iter_blocks(
    g: Graph, normalize: bool = False, params: GameParams = LIFE
) -> Iterator[tuple[Label, ...]]:
    """Yield the sorted block ``f_t`` for t = 1, 2, ..."""
    for labels in iter_label_states(g, normalize, params):
        yield tuple(sorted(labels))


def extract_features(
    g: Graph, k: int = 2, normalize: bool = False, params: GameParams = LIFE
) -> FeatureVector:
    if k < 1:
        raise ValueError("k must be at least 1")
    blocks = []
    for block in iter_blocks(g, normalize, params):
        blocks.append(block)
        if len(blocks) == k:
            break
    return FeatureVector(g.n, k, normalize, tuple(blocks))


def feature_key(g: Graph, k: int = 2, normalize: bool = False, params: GameParams = LIFE) -> str:
    return extract_features(g, k, normalize, params).serialize()


def squared_distance(x: Sequence[Label], y: Sequence[Label]) -> Label:
    """Exact squared Euclidean distance between two label sequences."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return sum((a - b) * (a - b) for a, b in zip(x, y))
