"""Sample-based bottleneck comparison of random-graph models."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Iterable, Sequence, TextIO

import numpy as np

from .diagrams import TOTAL, PersistenceDiagram, bottleneck
from .generators import ModelSpec, sample_seed
from .pipeline import fmt, persistence_of_graph
from .weighting import DEFAULT_EPSILON


@dataclass(frozen=True)
class DistanceSummary:
    model_a: str
    model_b: str
    mean: float
    stderr: float
    n_pairs: int
    distances: tuple[float, ...] = ()


def summarize(model_a: str, model_b: str, distances: Sequence[float]) -> DistanceSummary:
    """Mean and standard error (sample std / sqrt(count)) of pooled distances."""
    d = np.asarray(distances, dtype=np.float64)
    if len(d) == 0:
        return DistanceSummary(model_a, model_b, math.nan, math.nan, 0)
    se = float(d.std(ddof=1) / math.sqrt(len(d))) if len(d) > 1 else 0.0
    return DistanceSummary(model_a, model_b, float(d.mean()), se, len(d), tuple(d.tolist()))


def _sample_diagram(args) -> PersistenceDiagram:
    spec, seed, key, scheme, epsilon = args
    g = spec.generate(sample_seed(seed, *key))
    return persistence_of_graph(g, scheme, epsilon).diagram(TOTAL)


def _bottleneck_pair(args) -> float:
    x, y = args
    return bottleneck(x, y)


def _map(fn: Callable, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def sample_diagrams(
    spec: ModelSpec,
    samples: int,
    seed: int,
    model_key: int = 0,
    scheme: str = "forman",
    epsilon: float = DEFAULT_EPSILON,
    jobs: int = 1,
) -> list[PersistenceDiagram]:
    """Total diagrams of ``samples`` graphs; sample ``i`` uses stream ``(model_key, i)``."""
    items = [(spec, seed, (model_key, i), scheme, epsilon) for i in range(samples)]
    return _map(_sample_diagram, items, jobs)


def pairwise_distances(
    xs: Sequence[PersistenceDiagram],
    ys: Sequence[PersistenceDiagram] | None = None,
    jobs: int = 1,
) -> list[float]:
    """All cross distances, or distinct unordered pairs when ``ys`` is None."""
    if ys is None:
        items = [(xs[i], xs[j]) for i, j in combinations(range(len(xs)), 2)]
    else:
        items = [(x, y) for x, y in product(xs, ys)]
    return _map(_bottleneck_pair, items, jobs)


def compare_models(
    spec_a: ModelSpec,
    spec_b: ModelSpec,
    samples: int = 10,
    seed: int = 0,
    scheme: str = "forman",
    epsilon: float = DEFAULT_EPSILON,
    jobs: int = 1,
) -> DistanceSummary:
    """Mean bottleneck distance between total diagrams of two models.

    Model A draws sample streams ``(0, i)`` and model B ``(1, i)`` under
    ``seed``; if the specs are equal, the same samples are reused and only
    distinct unordered pairs are compared.
    """
    xs = sample_diagrams(spec_a, samples, seed, 0, scheme, epsilon, jobs)
    if spec_a == spec_b:
        d = pairwise_distances(xs, None, jobs)
    else:
        ys = sample_diagrams(spec_b, samples, seed, 1, scheme, epsilon, jobs)
        d = pairwise_distances(xs, ys, jobs)
    return summarize(spec_a.label, spec_b.label, d)


def run_model_comparison(
    specs: Sequence[ModelSpec],
    samples: int = 10,
    seed: int = 0,
    scheme: str = "forman",
    epsilon: float = DEFAULT_EPSILON,
    jobs: int = 1,
    pairs: Iterable[tuple[int, int]] | None = None,
) -> dict[tuple[str, str], DistanceSummary]:
    """Distance matrix between models.

    Model ``k`` (position in ``specs``) samples streams ``(k, i)``, so every
    cell reuses the same graphs. Only the upper triangle (including the
    diagonal) is computed unless ``pairs`` restricts it further; the result
    maps both ``(a, b)`` and ``(b, a)`` to the same summary.
    """
    labels = [s.label for s in specs]
    if len(set(labels)) != len(labels):
        raise ValueError("model labels must be distinct")
    wanted = sorted(
        {tuple(sorted(p)) for p in pairs} if pairs is not None
        else {(i, j) for i in range(len(specs)) for j in range(i, len(specs))}
    )
    needed = sorted({k for p in wanted for k in p})
    dgs = {
        k: sample_diagrams(specs[k], samples, seed, k, scheme, epsilon, jobs) for k in needed
    }
    out: dict[tuple[str, str], DistanceSummary] = {}
    for i, j in wanted:
        d = pairwise_distances(dgs[i], None if i == j else dgs[j], jobs)
        s = summarize(labels[i], labels[j], d)
        out[(labels[i], labels[j])] = s
        out[(labels[j], labels[i])] = s
    return out


def write_comparison_csv(
    matrix: dict[tuple[str, str], DistanceSummary], labels: Sequence[str], stream: TextIO
) -> None:
    stream.write("modelA,modelB,mean,stderr,n_pairs\n")
    for i, a in enumerate(labels):
        for b in labels[i:]:
            s = matrix.get((a, b))
            if s is None:
                continue
            stream.write(f"{a},{b},{fmt(s.mean)},{fmt(s.stderr)},{s.n_pairs}\n")


def format_report(
    matrix: dict[tuple[str, str], DistanceSummary], labels: Sequence[str]
) -> str:
    """Human-readable matrix with two-decimal ``mean +/- se`` cells."""
    width = max(13, *(len(x) + 2 for x in labels))
    lines = ["".ljust(width) + "".join(l.rjust(width) for l in labels)]
    for a in labels:
        cells = []
        for b in labels:
            s = matrix.get((a, b))
            cells.append(("-" if s is None else f"{s.mean:.2f} ± {s.stderr:.2f}").rjust(width))
        lines.append(a.ljust(width) + "".join(cells))
    return "\n".join(lines) + "\n"
