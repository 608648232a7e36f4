"""``glg`` command line.

Exit codes: 0 success (or likely-isomorphic), 1 certified non-isomorphic,
2 usage or parse error, 3 step cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import corpus as corpora
from .conway import PATTERNS, run_pattern
from .engine import LIFE, CapExceeded, GameParams, simulate
from .experiments import exhaustive_complexity, parse_m_values, peak_edge_count, random_ensemble, write_density_csv
from .features import extract_features
from .graph import Graph, GraphFormatError, encode_graph6, load_graphs
from .iso import scan_file, test_isomorphism
from .metric import find_lines, glg_distance, write_lines_csv
from .parallel import resolve_threads

EXIT_OK, EXIT_NONISO, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

log = logging.getLogger("glg")


class UsageError(Exception):
    pass


def corpus_source(arg: str) -> Path:
    """A graph6/edge-list path, or the name of a shipped corpus."""
    path = Path(arg)
    if path.exists():
        return path
    try:
        return corpora.corpus_path(arg)
    except KeyError:
        raise UsageError(f"no such file or shipped corpus: {arg}") from None


def load_one(arg: str, index: int = 0) -> Graph:
    graphs = load_graphs(corpus_source(arg))
    if not 0 <= index < len(graphs):
        raise UsageError(f"{arg} holds {len(graphs)} graph(s); index {index} out of range")
    return graphs[index]


def parse_grid(text: str) -> tuple[int, int]:
    try:
        w, h = text.lower().split("x")
        return int(w), int(h)
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like 8x8, got {text!r}") from None


def params_arg(text: str) -> GameParams:
    try:
        return GameParams.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(lines: list[str], out: str | None) -> None:
    text = "\n".join(lines) + "\n"
    sys.stdout.write(text)
    if out:
        Path(out).write_text(text, encoding="ascii")


# subcommands ----------------------------------------------------------------


def cmd_simulate(args) -> int:
    g = load_one(args.graph, args.index)
    if not 0 <= args.seed < g.n:
        raise UsageError(f"seed vertex {args.seed} outside 0..{g.n - 1}")
    traj = simulate(g, 1 << args.seed, args.params, args.cap)
    for t, alive in enumerate(traj.pattern_lists()):
        print(f"t={t} alive={alive}")
    print(traj.describe())
    if args.json:
        record = {
            "n": g.n, "seed": args.seed, "params": str(args.params), "outcome": traj.outcome,
            "end": traj.end, "entry": traj.entry, "complexity": traj.complexity,
            "patterns": traj.pattern_lists(),
        }
        print(json.dumps(record, sort_keys=True))
    return EXIT_OK


def cmd_features(args) -> int:
    lines = [
        extract_features(g, args.k, args.normalize, args.params).serialize()
        for g in load_graphs(corpus_source(args.graph))
    ]
    _emit(lines, args.out)
    return EXIT_OK


def cmd_iso(args) -> int:
    verdict = test_isomorphism(load_one(args.g), load_one(args.h), args.k, args.params)
    print(verdict)
    return EXIT_OK if verdict.likely_isomorphic else EXIT_NONISO


def cmd_scan(args) -> int:
    report = scan_file(corpus_source(args.corpus), args.k, args.normalize, args.params,
                       resolve_threads(args.threads), args.chunk_size)
    _emit(report.lines(), args.out)
    return EXIT_OK


def cmd_distance(args) -> int:
    print(repr(glg_distance(load_one(args.g), load_one(args.h), args.k, args.normalize, args.params)))
    return EXIT_OK


def cmd_lines(args) -> int:
    graphs = load_graphs(corpus_source(args.corpus))
    found = find_lines(graphs, args.k, args.normalize, args.tol, args.params, args.allow_large,
                       resolve_threads(args.threads))
    out = args.out or f"lines_k{args.k}{'_norm' if args.normalize else ''}.csv"
    write_lines_csv(out, graphs, found)
    print(f"k={args.k} normalize={int(args.normalize)} tol={args.tol!r} graphs={len(graphs)}")
    print(f"lines={len(found)} exact={sum(t.exact for t in found)} csv={out}")
    return EXIT_OK


def phase_filename(args) -> str:
    p = f"p{args.params.a}-{args.params.d}-{args.params.r}"
    if args.corpus:
        return f"phase_exhaustive_{Path(args.corpus).stem}_{p}.csv"
    ms = parse_m_values(args.m)
    return f"phase_n{args.n}_m{ms[0]}-{ms[-1]}_s{args.samples}_seed{args.seed}_{p}.csv"


def cmd_phase(args) -> int:
    threads = resolve_threads(args.threads)
    if args.corpus:
        graphs = load_graphs(corpus_source(args.corpus))
        records = exhaustive_complexity(graphs, args.params, args.cap, threads)
        seed = None
        label = f"connected graphs, n={records[0].n}" if records else "empty corpus"
    else:
        if args.n is None:
            raise UsageError("phase needs --n (random ensemble) or --corpus (exhaustive)")
        samples = 100 if args.fast else args.samples
        args.samples = samples
        records = random_ensemble(args.n, parse_m_values(args.m), samples, args.seed, args.params,
                                  args.cap, threads)
        seed = args.seed
        label = f"G({args.n}, M), {samples} samples"
    out = args.out or phase_filename(args)
    write_density_csv(out, records, args.params, seed, args.per_graph)
    print(f"rows={len(records)} csv={out}")
    if records:
        print(f"peak_m={peak_edge_count(records)}")
    if args.plot:
        from .plotting import figure_path, plot_density

        fig = plot_density({label: records}, figure_path(out))
        print(f"figure={fig}")
    return EXIT_OK


def cmd_conway(args) -> int:
    width, height = args.grid
    print(run_pattern(args.pattern, width, height, args.cap).describe())
    return EXIT_OK


def cmd_corpus(args) -> int:
    if args.name is None:
        for name in sorted(corpora.CORPUS_FILES):
            print(f"{name} {corpora.corpus_path(name)}")
        return EXIT_OK
    if args.name not in corpora.CORPUS_FILES:
        raise UsageError(f"unknown corpus {args.name!r}")
    if args.regenerate:
        text = "".join(encode_graph6(g) + "\n" for g in corpora.generate(args.name))
    else:
        text = corpora.corpus_path(args.name).read_text(encoding="ascii")
    if args.out:
        Path(args.out).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)
    count = text.count("\n")
    print(f"graphs={count}", file=sys.stderr)
    return EXIT_OK


# parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="glg", description="Game of Life on Graphs toolkit")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, k=True, normalize=True):
        p.add_argument("--params", type=params_arg, default=LIFE, help="a,d,r (default 1,1,1)")
        if k:
            p.add_argument("--k", type=int, default=2, help="label propagation steps (default 2)")
        if normalize:
            p.add_argument("--normalize", action="store_true", help="normalize labels after every step")

    p = sub.add_parser("simulate", help="run one game and print its trajectory")
    p.add_argument("--graph", required=True)
    p.add_argument("--index", type=int, default=0, help="record index within a multi-graph file")
    p.add_argument("--seed", type=int, required=True, help="initially alive vertex (0-indexed)")
    p.add_argument("--cap", type=int, default=None, help="step cap (default min(2^n+1, 10^6))")
    p.add_argument("--json", action="store_true", help="also print a JSON record")
    common(p, k=False, normalize=False)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("features", help="print serialized feature vectors, one per graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--out")
    common(p)
    p.set_defaults(func=cmd_features)

    p = sub.add_parser("iso", help="test two graphs for isomorphism")
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    common(p, normalize=False)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("scan", help="group a graph6 corpus by feature vector")
    p.add_argument("--corpus", required=True, help="graph6 file or shipped corpus name")
    p.add_argument("--out", help="also write the report here")
    p.add_argument("--threads", type=int, default=None, help="worker processes (default $GLG_THREADS or 1)")
    p.add_argument("--chunk-size", type=int, default=500_000, help="records per external-sort run")
    common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("distance", help="GLG-distance between two graphs")
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    common(p)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("lines", help="find triangle-equality triples, write CSV")
    p.add_argument("--corpus", required=True)
    p.add_argument("--tol", type=float, default=1e-9, help="relative tolerance (default 1e-9)")
    p.add_argument("--out", help="CSV path (default lines_k<k>.csv)")
    p.add_argument("--allow-large", action="store_true", help="permit corpora with n > 6")
    p.add_argument("--threads", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_lines)

    p = sub.add_parser("phase", help="complexity/halting sweep over edge counts, write CSV")
    p.add_argument("--n", type=int, help="vertex count for G(n, m) sampling")
    p.add_argument("--m", default="1..60", help="edge counts, e.g. 1..60 or 0,5,10")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--fast", action="store_true", help="100 samples per edge count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--corpus", help="exhaustive mode over a graph6 corpus instead of sampling")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--per-graph", action="store_true", help="add per-graph complexity totals column")
    p.add_argument("--out", help="CSV path (default derived from the arguments)")
    p.add_argument("--plot", action="store_true", help="render a PNG next to the CSV")
    p.add_argument("--threads", type=int, default=None)
    common(p, k=False, normalize=False)
    p.set_defaults(func=cmd_phase)

    p = sub.add_parser("conway", help="run a Conway pattern on a torus via GLG(2,5,3)")
    p.add_argument("--pattern", choices=sorted(PATTERNS), required=True)
    p.add_argument("--grid", type=parse_grid, default=(8, 8))
    p.add_argument("--cap", type=int, default=10_000)
    p.set_defaults(func=cmd_conway)

    p = sub.add_parser("corpus", help="list shipped corpora or print one")
    p.add_argument("name", nargs="?")
    p.add_argument("--out")
    p.add_argument("--regenerate", action="store_true", help="enumerate from scratch instead of copying")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if getattr(args, "k", 1) < 1:
        parser.error("--k must be at least 1")
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, GraphFormatError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
