"""Command-line interface.

Each subcommand reads the artifact written by the previous stage, so the
pipeline can be run and inspected one step at a time, or all at once with
``netph run``.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .comparison import format_report, run_model_comparison, write_comparison_csv
from .complex import MAX_DIM, build_filtration
from .diagrams import TOTAL, bottleneck, diagrams_from_json
from .errors import NetPHError, ParseError
from .generators import FAMILIES, ModelSpec, standard_models
from .graph import read_edge_list_file, write_edge_list
from .persistence import Interval, compute_persistence
from .pipeline import (
    OUTPUT_DIR_ENV,
    PipelineConfig,
    StageError,
    dump_json,
    edge_scores,
    edge_weights_from_scores,
    filtration_from_edge_weights,
    fmt,
    persistence_json,
    read_barcode_csv,
    read_filtration_csv,
    read_scores_csv,
    read_weights_csv,
    run_pipeline,
    write_barcode_csv,
    write_filtration_csv,
    write_scores_csv,
    write_weights_csv,
)
from .svg import render_barcode_svg
from .weighting import DEFAULT_EPSILON

log = logging.getLogger("netph")


@contextlib.contextmanager
def _output(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _model_from_args(args) -> ModelSpec:
    fam = args.model
    if fam == "er":
        params = {"p": args.p}
    elif fam == "ws":
        params = {"k": None if args.k is None else int(args.k), "p": args.p}
    elif fam == "ba":
        params = {"m": args.m}
    elif fam == "hyp":
        params = {"k": args.k, "gamma": args.gamma, "T": 0}
    else:
        params = {"k": args.k}
    missing = [k for k, v in params.items() if v is None]
    if missing:
        raise SystemExit(f"--model {fam} requires --{' --'.join(missing)}")
    return ModelSpec(fam, args.n, params, args.seed)


def _add_model_args(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--model", choices=FAMILIES, required=required)
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--p", type=float, help="edge (ER) or rewiring (WS) probability")
    p.add_argument("--k", type=float, help="lattice degree (WS) or target mean degree (hyp, sph)")
    p.add_argument("--m", type=int, help="edges per new vertex (BA)")
    p.add_argument("--gamma", type=float, default=2.0, help="power-law exponent (hyp)")
    p.add_argument("--seed", type=int, default=0)


def cmd_generate(args) -> int:
    g = _model_from_args(args).generate()
    with _output(args.out) as fh:
        write_edge_list(g, fh)
    return 0


def cmd_curvature(args) -> int:
    g = read_edge_list_file(args.graph)
    with _output(args.out) as fh:
        write_scores_csv(edge_scores(g, "forman"), fh, "F")
    return 0


def cmd_ebc(args) -> int:
    g = read_edge_list_file(args.graph)
    with _output(args.out) as fh:
        write_scores_csv(edge_scores(g, "ebc", ordered_ebc=not args.unordered), fh, "ebc")
    return 0


def cmd_weights(args) -> int:
    g = read_edge_list_file(args.graph)
    with open(args.scores, encoding="utf-8") as fh:
        scores = read_scores_csv(fh)
    unknown = [e for e in scores if not g.has_edge(*e)]
    if unknown or len(scores) != g.num_edges:
        raise ParseError(f"score file does not match the graph's edges ({len(unknown)} unknown)")
    weights = edge_weights_from_scores(scores, args.scheme, args.epsilon)
    fc = filtration_from_edge_weights(g, weights, args.max_dim)
    with _output(args.out) as fh:
        write_weights_csv(dict(zip(fc.simplices, fc.weights.tolist())), fh)
    return 0


def cmd_filtration(args) -> int:
    with open(args.weights, encoding="utf-8") as fh:
        weights = read_weights_csv(fh)
    fc = build_filtration(list(weights), weights)
    with _output(args.out) as fh:
        write_filtration_csv(fc, fh)
    return 0


def cmd_persist(args) -> int:
    with open(args.filtration, encoding="utf-8") as fh:
        fc = read_filtration_csv(fh)
    pairs = compute_persistence(fc)
    with _output(args.out) as fh:
        write_barcode_csv(pairs, fc, fh)
    if args.json:
        with _output(args.json) as fh:
            dump_json(persistence_json(pairs, fc), fh)
    return 0


def cmd_barcode_svg(args) -> int:
    with open(args.barcode, encoding="utf-8") as fh:
        rows = read_barcode_csv(fh)
    bars: dict[int, list[Interval]] = {}
    for i, (d, b, de, ess) in enumerate(rows):
        bars.setdefault(d, []).append(Interval(d, b, de, ess, i, None))
    with _output(args.out) as fh:
        fh.write(render_barcode_svg(bars, args.dims, args.min_persistence))
    return 0


def cmd_bottleneck(args) -> int:
    key = int(args.dim) if args.dim.isdigit() else args.dim
    dgs = []
    for path in (args.a, args.b):
        with open(path, encoding="utf-8") as fh:
            try:
                payload = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ParseError(f"{path}: {exc}") from None
        dg = diagrams_from_json({k: v for k, v in payload.items() if k not in ("pairs", "meta")})
        if key not in dg:
            raise ParseError(f"{path}: no diagram {key!r}")
        dgs.append(dg[key])
    print(fmt(bottleneck(dgs[0], dgs[1])))
    return 0


def cmd_compare_models(args) -> int:
    specs = standard_models(args.n, args.k)
    if args.models:
        wanted = args.models.split(",")
        specs = [s for s in specs if s.family in wanted]
    labels = [s.label for s in specs]
    matrix = run_model_comparison(
        specs, args.samples, args.seed, args.scheme, args.epsilon, args.jobs
    )
    out = Path(args.out) if args.out else None
    if out:
        out.mkdir(parents=True, exist_ok=True)
        with open(out / "comparison.csv", "w", encoding="utf-8") as fh:
            write_comparison_csv(matrix, labels, fh)
        with open(out / "comparison_report.txt", "w", encoding="utf-8") as fh:
            fh.write(format_report(matrix, labels))
            fh.write(f"essential classes placed at death 1.0; {args.samples} samples per model\n")
    else:
        write_comparison_csv(matrix, labels, sys.stdout)
    sys.stderr.write(format_report(matrix, labels))
    return 0


def cmd_run(args) -> int:
    if (args.edge_list is None) == (args.model is None):
        raise SystemExit("give exactly one of --edge-list and --model")
    cfg = PipelineConfig(
        edge_list=args.edge_list,
        model=_model_from_args(args) if args.model else None,
        scheme=args.scheme,
        epsilon=args.epsilon,
        max_dim=args.max_dim,
        output_dir=args.out,
        emit_svg=args.svg,
        ordered_ebc=not args.unordered,
    )
    res = run_pipeline(cfg)
    for name, path in res.files.items():
        print(f"{name}\t{path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="netph",
        description="Persistent homology of unweighted networks via curvature or betweenness filtrations.",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="sample a random graph and write it as an edge list")
    _add_model_args(p, required=True)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("curvature", help="Forman-Ricci curvature per edge (u,v,F)")
    p.add_argument("graph")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_curvature)

    p = sub.add_parser("ebc", help="edge betweenness per edge (u,v,ebc)")
    p.add_argument("graph")
    p.add_argument("--unordered", action="store_true", help="count each vertex pair once")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_ebc)

    p = sub.add_parser("weights", help="filtration weight of every simplex")
    p.add_argument("graph")
    p.add_argument("--scores", required=True, help="output of `curvature` or `ebc`")
    p.add_argument("--scheme", choices=("forman", "ebc"), required=True)
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    p.add_argument("--max-dim", type=int, default=MAX_DIM)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("filtration", help="order simplices into a filtration")
    p.add_argument("weights")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_filtration)

    p = sub.add_parser("persist", help="barcode CSV (and diagram JSON) of a filtration")
    p.add_argument("filtration")
    p.add_argument("-o", "--out")
    p.add_argument("--json", help="also write diagram JSON here")
    p.set_defaults(func=cmd_persist)

    p = sub.add_parser("barcode-svg", help="render a barcode CSV as SVG")
    p.add_argument("barcode")
    p.add_argument("--dims", type=int, nargs="+", default=[0, 1])
    p.add_argument("--min-persistence", type=float, default=None)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_barcode_svg)

    p = sub.add_parser("bottleneck", help="bottleneck distance between two diagram JSON files")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--dim", default=TOTAL, help="0-3 or 'total'")
    p.set_defaults(func=cmd_bottleneck)

    p = sub.add_parser("compare-models", help="mean bottleneck distance matrix of the five models")
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scheme", choices=("forman", "ebc"), default="forman")
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    p.add_argument("--models", help="comma-separated subset of " + ",".join(FAMILIES))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="directory for comparison.csv and comparison_report.txt")
    p.set_defaults(func=cmd_compare_models)

    p = sub.add_parser("run", help="whole pipeline into one output directory")
    p.add_argument("--edge-list")
    _add_model_args(p, required=False)
    p.add_argument("--scheme", choices=("forman", "ebc"), default="forman")
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    p.add_argument("--max-dim", type=int, default=MAX_DIM)
    p.add_argument("--unordered", action="store_true", help="halved betweenness convention")
    p.add_argument("--svg", action="store_true")
    p.add_argument("--out", help=f"output directory (default ${OUTPUT_DIR_ENV} or ./netph-out)")
    p.set_defaults(func=cmd_run)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except StageError as exc:
        log.error("%s", exc)
        return exc.exit_code
    except NetPHError as exc:
        log.error("%s", exc)
        return exc.exit_code
    except OSError as exc:
        log.error("%s", exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
