"""End-to-end pipeline: graph -> edge scores -> weights -> filtration -> persistence."""

from __future__ import annotations

import csv
import json
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, TextIO

import numpy as np

from .centrality import edge_betweenness_all
from .complex import MAX_DIM, FilteredComplex, build_filtration, enumerate_cliques
from .curvature import forman_ricci_all
from .diagrams import TOTAL, PersistenceDiagram, diagram_from_pairs, diagrams_to_json
from .errors import EmptyScoresError, NetPHError, ParseError
from .generators import ModelSpec
from .graph import Edge, Graph, read_edge_list_file, write_edge_list
from .persistence import ESSENTIAL_DEATH, PersistencePair, barcodes, compute_persistence
from .weighting import DEFAULT_EPSILON, extend_weights, normalize_ebc, normalize_forman

log = logging.getLogger(__name__)

SCHEMES = ("forman", "ebc")
SIG_DIGITS = 12
OUTPUT_DIR_ENV = "NETPH_OUTPUT_DIR"


def fmt(x: float) -> str:
    """Machine-output float format (12 significant digits)."""
    return f"{x:.{SIG_DIGITS}g}"


def canonical(x: float) -> float:
    """Round-trip ``x`` through its serialized form."""
    return float(fmt(x))


class StageError(NetPHError):
    """Wraps an error with the name of the pipeline stage that raised it."""

    def __init__(self, stage: str, cause: Exception):
        self.stage = stage
        self.cause = cause
        self.exit_code = getattr(cause, "exit_code", 1)
        super().__init__(f"stage {stage!r} failed: {cause}")


@dataclass
class PipelineConfig:
    edge_list: str | None = None
    model: ModelSpec | None = None
    scheme: str = "forman"
    epsilon: float = DEFAULT_EPSILON
    max_dim: int = MAX_DIM
    output_dir: str | None = None
    emit_barcode_csv: bool = True
    emit_diagram_json: bool = True
    emit_svg: bool = False
    ordered_ebc: bool = True

    def __post_init__(self):
        if (self.edge_list is None) == (self.model is None):
            raise ValueError("exactly one of edge_list and model must be given")
        if self.scheme not in SCHEMES:
            raise ValueError(f"scheme must be one of {SCHEMES}")

    def resolved_output_dir(self) -> Path:
        return Path(self.output_dir or os.environ.get(OUTPUT_DIR_ENV, "netph-out"))


@dataclass
class PipelineResult:
    graph: Graph
    scores: dict[Edge, float]
    edge_weights: dict[Edge, float]
    complex: FilteredComplex
    pairs: list[PersistencePair]
    files: dict[str, Path] = field(default_factory=dict)

    def diagram(self, dim=TOTAL) -> PersistenceDiagram:
        return diagram_from_pairs(self.pairs, self.complex, dim)

    def barcodes(self):
        return barcodes(self.pairs, self.complex)


def edge_scores(g: Graph, scheme: str, ordered_ebc: bool = True) -> dict[Edge, float]:
    """Curvature (exact ints) or betweenness rounded to serialized precision."""
    if scheme == "forman":
        return forman_ricci_all(g)
    if scheme == "ebc":
        return {e: canonical(b) for e, b in edge_betweenness_all(g, ordered=ordered_ebc).items()}
    raise ValueError(f"unknown scheme {scheme!r}")


def edge_weights_from_scores(
    scores: Mapping[Edge, float], scheme: str, epsilon: float = DEFAULT_EPSILON
) -> dict[Edge, float]:
    """Normalized edge weights, rounded to their serialized precision.

    Rounding makes a full run and a run resumed from saved intermediates
    see bit-identical weights, and merges betweenness values that differ
    only by summation noise.
    """
    if not scores:
        return {}
    norm = normalize_forman if scheme == "forman" else normalize_ebc
    return {e: canonical(w) for e, w in norm(scores, epsilon).items()}


def filtration_from_edge_weights(
    g: Graph, edge_weights: Mapping[Edge, float], max_dim: int = MAX_DIM
) -> FilteredComplex:
    simplices = enumerate_cliques(g, max_dim)
    return build_filtration(simplices, extend_weights(simplices, edge_weights))


def persistence_of_graph(
    g: Graph,
    scheme: str = "forman",
    epsilon: float = DEFAULT_EPSILON,
    max_dim: int = MAX_DIM,
    ordered_ebc: bool = True,
) -> PipelineResult:
    """Run every stage in memory and return all intermediates."""
    stage = "scores"
    try:
        scores = edge_scores(g, scheme, ordered_ebc)
        stage = "weights"
        try:
            weights = edge_weights_from_scores(scores, scheme, epsilon)
        except EmptyScoresError:
            weights = {}
        stage = "filtration"
        fc = filtration_from_edge_weights(g, weights, max_dim)
        stage = "persistence"
        pairs = compute_persistence(fc)
    except NetPHError as exc:
        raise StageError(stage, exc) from exc
    return PipelineResult(g, dict(scores), weights, fc, pairs)


# -- artifact I/O ------------------------------------------------------------


def write_scores_csv(scores: Mapping[Edge, float], stream: TextIO, column: str) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(["u", "v", column])
    for (u, v), s in sorted(scores.items()):
        w.writerow([u, v, s if isinstance(s, (int, np.integer)) else fmt(s)])


def read_scores_csv(stream: TextIO) -> dict[Edge, float]:
    reader = csv.reader(stream)
    header = next(reader, None)
    if header is None or len(header) != 3 or header[:2] != ["u", "v"]:
        raise ParseError("expected header u,v,<score>", 1)
    out: dict[Edge, float] = {}
    for lineno, row in enumerate(reader, start=2):
        if len(row) != 3:
            raise ParseError("expected 3 fields", lineno)
        try:
            u, v = int(row[0]), int(row[1])
            val = float(row[2])
        except ValueError:
            raise ParseError(f"bad row {row}", lineno) from None
        out[(u, v) if u < v else (v, u)] = val
    return out


def write_weights_csv(weights: Mapping[tuple[int, ...], float], stream: TextIO) -> None:
    stream.write("simplex_vertices;dim;weight\n")
    for s in sorted(weights, key=lambda s: (len(s), s)):
        stream.write(f"{','.join(map(str, s))};{len(s) - 1};{fmt(weights[s])}\n")


def read_weights_csv(stream: TextIO) -> dict[tuple[int, ...], float]:
    out: dict[tuple[int, ...], float] = {}
    for lineno, line in enumerate(stream, start=1):
        line = line.strip()
        if lineno == 1:
            if line != "simplex_vertices;dim;weight":
                raise ParseError("expected header simplex_vertices;dim;weight", 1)
            continue
        if not line:
            continue
        parts = line.split(";")
        if len(parts) != 3:
            raise ParseError("expected 3 ';'-separated fields", lineno)
        try:
            s = tuple(int(x) for x in parts[0].split(","))
            dim = int(parts[1])
            w = float(parts[2])
        except ValueError:
            raise ParseError(f"bad row {line!r}", lineno) from None
        if dim != len(s) - 1:
            raise ParseError("dimension does not match vertex count", lineno)
        out[s] = w
    return out


def write_filtration_csv(fc: FilteredComplex, stream: TextIO) -> None:
    stream.write("position,dim,vertices,weight\n")
    for pos, s in enumerate(fc.simplices):
        stream.write(f"{pos},{len(s) - 1},{' '.join(map(str, s))},{fmt(fc.weights[pos])}\n")


def read_filtration_csv(stream: TextIO) -> FilteredComplex:
    simplices = []
    weights = []
    for lineno, line in enumerate(stream, start=1):
        line = line.strip()
        if lineno == 1:
            if line != "position,dim,vertices,weight":
                raise ParseError("expected header position,dim,vertices,weight", 1)
            continue
        if not line:
            continue
        parts = line.split(",")
        if len(parts) != 4:
            raise ParseError("expected 4 fields", lineno)
        try:
            pos = int(parts[0])
            s = tuple(int(x) for x in parts[2].split())
            w = float(parts[3])
        except ValueError:
            raise ParseError(f"bad row {line!r}", lineno) from None
        if pos != len(simplices):
            raise ParseError("positions must be consecutive from 0", lineno)
        simplices.append(s)
        weights.append(w)
    return FilteredComplex(tuple(simplices), np.array(weights, dtype=np.float64))


def write_barcode_csv(pairs, fc: FilteredComplex, stream: TextIO) -> None:
    stream.write("dim,birth,death,essential\n")
    for dim, ivs in barcodes(pairs, fc).items():
        for iv in ivs:
            stream.write(f"{dim},{fmt(iv.birth)},{fmt(iv.death)},{int(iv.essential)}\n")


def read_barcode_csv(stream: TextIO) -> list[tuple[int, float, float, bool]]:
    rows = []
    for lineno, line in enumerate(stream, start=1):
        line = line.strip()
        if lineno == 1:
            if line != "dim,birth,death,essential":
                raise ParseError("expected header dim,birth,death,essential", 1)
            continue
        if not line:
            continue
        parts = line.split(",")
        try:
            rows.append((int(parts[0]), float(parts[1]), float(parts[2]), bool(int(parts[3]))))
        except (ValueError, IndexError):
            raise ParseError(f"bad row {line!r}", lineno) from None
    return rows


def persistence_json(pairs, fc: FilteredComplex, max_dim: int = MAX_DIM) -> dict:
    """Diagram JSON plus the underlying pairs with filtration indices."""
    dgs = {d: diagram_from_pairs(pairs, fc, d) for d in range(max_dim + 1)}
    dgs[TOTAL] = diagram_from_pairs(pairs, fc, TOTAL)
    payload: dict = diagrams_to_json(dgs)
    payload["pairs"] = [
        {
            "dim": pr.dim,
            "birth_index": pr.birth_index,
            "death_index": pr.death_index,
            "birth": float(fc.weights[pr.birth_index]),
            "death": ESSENTIAL_DEATH if pr.essential else float(fc.weights[pr.death_index]),
            "essential": pr.essential,
        }
        for pr in pairs
    ]
    payload["meta"] = {"essential_death": ESSENTIAL_DEATH, "field": 2}
    return payload


def dump_json(payload, stream: TextIO) -> None:
    json.dump(payload, stream, sort_keys=True, indent=1)
    stream.write("\n")


def run_pipeline(cfg: PipelineConfig) -> PipelineResult:
    """Execute every stage and write its artifact into ``cfg.output_dir``."""
    out = cfg.resolved_output_dir()
    out.mkdir(parents=True, exist_ok=True)
    try:
        g = read_edge_list_file(cfg.edge_list) if cfg.edge_list else cfg.model.generate()
    except (NetPHError, OSError) as exc:
        raise StageError("graph", exc) from exc
    res = persistence_of_graph(g, cfg.scheme, cfg.epsilon, cfg.max_dim, cfg.ordered_ebc)
    log.info(
        "graph n=%d m=%d, %d simplices, %d pairs", g.n, g.num_edges, len(res.complex), len(res.pairs)
    )

    def path(name: str) -> Path:
        p = out / name
        res.files[name] = p
        return p

    with open(path("graph.txt"), "w", encoding="utf-8") as fh:
        write_edge_list(g, fh)
    with open(path("vertex_map.csv"), "w", encoding="utf-8") as fh:
        fh.write("vertex,original\n")
        for v, lab in enumerate(g.labels):
            fh.write(f"{v},{lab}\n")
    score_name = "curvature.csv" if cfg.scheme == "forman" else "ebc.csv"
    with open(path(score_name), "w", encoding="utf-8") as fh:
        write_scores_csv(res.scores, fh, "F" if cfg.scheme == "forman" else "ebc")
    simplex_weights = dict(zip(res.complex.simplices, res.complex.weights.tolist()))
    with open(path("weights.csv"), "w", encoding="utf-8") as fh:
        write_weights_csv(simplex_weights, fh)
    with open(path("filtration.csv"), "w", encoding="utf-8") as fh:
        write_filtration_csv(res.complex, fh)
    if cfg.emit_barcode_csv:
        with open(path("barcode.csv"), "w", encoding="utf-8") as fh:
            write_barcode_csv(res.pairs, res.complex, fh)
    if cfg.emit_diagram_json:
        with open(path("diagram.json"), "w", encoding="utf-8") as fh:
            dump_json(persistence_json(res.pairs, res.complex, cfg.max_dim), fh)
    if cfg.emit_svg:
        from .svg import render_barcode_svg

        with open(path("barcode.svg"), "w", encoding="utf-8") as fh:
            fh.write(render_barcode_svg(res.barcodes(), dims=range(cfg.max_dim + 1)))
    return res
