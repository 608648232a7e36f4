"""GLG-distance between graphs and triangle-equality ("line") search."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from pathlib import Path
from typing import Sequence

import numpy as np

from .engine import LIFE, GameParams
from .features import FeatureVector, Label, extract_features, squared_distance
from .graph import Graph, encode_graph6
from .parallel import pmap

LINES_MAX_N = 6
LINES_CSV_HEADER = ["i_graph6", "j_graph6", "mid_graph6", "d_ij", "d_imid", "d_jmid", "residual"]


def _sqrt(x: Label) -> float:
    if isinstance(x, Fraction):
        return math.sqrt(x.numerator) / math.sqrt(x.denominator)
    return math.sqrt(x)


def vector_distance(x: FeatureVector, y: FeatureVector) -> float:
    """Euclidean distance, exact up to the final square root.

    The squared distance is accumulated exactly, so the result does not
    depend on argument order.
    """
    if x.n != y.n or x.k != y.k:
        raise ValueError(f"feature vectors differ in shape: n={x.n},k={x.k} vs n={y.n},k={y.k}")
    return _sqrt(squared_distance(x.values, y.values))


def glg_distance(g: Graph, h: Graph, k: int = 2, normalize: bool = False, params: GameParams = LIFE) -> float:
    if g.n != h.n:
        raise ValueError(f"GLG-distance needs equal vertex counts, got {g.n} and {h.n}")
    return vector_distance(extract_features(g, k, normalize, params), extract_features(h, k, normalize, params))


def distance_matrix(vectors: Sequence[FeatureVector]) -> np.ndarray:
    size = len(vectors)
    out = np.zeros((size, size))
    for i in range(size):
        for j in range(i + 1, size):
            out[i, j] = out[j, i] = vector_distance(vectors[i], vectors[j])
    return out


def on_segment(x: Sequence[Label], y: Sequence[Label], mid: Sequence[Label]) -> bool:
    """Exact test that ``mid`` lies strictly between distinct points ``x`` and ``y``."""
    u = [a - b for a, b in zip(mid, x)]
    w = [a - b for a, b in zip(y, x)]
    uw = sum(a * b for a, b in zip(u, w))
    uu = sum(a * a for a in u)
    ww = sum(a * a for a in w)
    # Cauchy-Schwarz equality means u is parallel to w.
    return ww > 0 and uw * uw == uu * ww and 0 < uw < ww


@dataclass(frozen=True)
class LineTriple:
    i: int
    j: int
    mid: int
    d_ij: float
    d_imid: float
    d_jmid: float
    residual: float
    exact: bool


def find_lines(
    corpus: Sequence[Graph],
    k: int = 2,
    normalize: bool = False,
    tol: float = 1e-9,
    params: GameParams = LIFE,
    allow_large: bool = False,
    threads: int | None = 1,
) -> list[LineTriple]:
    """Triples ``(i, j, mid)``, ``i < j``, with ``d(i,j) = d(i,mid) + d(j,mid)``.

    A triple is reported when the residual is at most ``tol * d(i,j)`` and all
    three distances are positive. ``exact`` marks triples whose feature
    vectors are exactly collinear with ``mid`` between the endpoints.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not corpus:
        return []
    sizes = {g.n for g in corpus}
    if len(sizes) > 1:
        raise ValueError(f"corpus mixes vertex counts {sorted(sizes)}")
    n = sizes.pop()
    if n > LINES_MAX_N and not allow_large:
        raise ValueError(f"line search over n={n} graphs is cubic in corpus size; pass allow_large (--allow-large) to force it")
    vectors = list(pmap(partial(extract_features, k=k, normalize=normalize, params=params), corpus, threads))
    dist = distance_matrix(vectors)
    size = len(corpus)
    upper = np.triu(np.ones((size, size), dtype=bool), 1) & (dist > 0)
    found = []
    for mid in range(size):
        to_mid = dist[:, mid]
        residual = np.abs(dist - to_mid[:, None] - to_mid[None, :])
        mask = upper & (residual <= tol * dist) & (to_mid[:, None] > 0) & (to_mid[None, :] > 0)
        for i, j in zip(*np.nonzero(mask)):
            i, j = int(i), int(j)
            exact = on_segment(vectors[i].values, vectors[j].values, vectors[mid].values)
            found.append(
                LineTriple(i, j, mid, float(dist[i, j]), float(dist[i, mid]), float(dist[j, mid]),
                           float(residual[i, j]), exact)
            )
    found.sort(key=lambda t: (t.residual, t.i, t.j, t.mid))
    return found


def write_lines_csv(path: str | Path, corpus: Sequence[Graph], lines: Sequence[LineTriple]) -> None:
    codes = [encode_graph6(g) for g in corpus]
    with open(path, "w", newline="", encoding="ascii") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(LINES_CSV_HEADER)
        for t in lines:
            writer.writerow([codes[t.i], codes[t.j], codes[t.mid], repr(t.d_ij), repr(t.d_imid),
                             repr(t.d_jmid), repr(t.residual)])
