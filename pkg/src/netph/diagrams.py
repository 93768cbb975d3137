"""Persistence diagrams and the bottleneck distance between them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

import numpy as np
from scipy.sparse import csr_array
from scipy.sparse.csgraph import maximum_flow

from .complex import MAX_DIM, FilteredComplex
from .persistence import ESSENTIAL_DEATH, PersistencePair, persistent_betti

Point = tuple[float, float, bool]  # birth, death, essential
DimSpec = Union[int, str]

TOTAL = "total"


@dataclass(frozen=True)
class PersistenceDiagram:
    """Multiset of (birth, death) points.

    ``points`` maps ``(birth, death, essential)`` to a positive multiplicity.
    ``dim`` is a homology dimension or ``"total"``.
    """

    points: dict[Point, int] = field(default_factory=dict)
    dim: DimSpec = TOTAL

    def __len__(self) -> int:
        return sum(self.points.values())

    def sorted_points(self) -> list[tuple[float, float, int, bool]]:
        return [(b, d, m, e) for (b, d, e), m in sorted(self.points.items())]

    def coordinates(self) -> tuple[np.ndarray, np.ndarray]:
        """Distinct ``(birth, death)`` locations and their total multiplicities."""
        merged: Counter[tuple[float, float]] = Counter()
        for (b, d, _), m in self.points.items():
            merged[(b, d)] += m
        if not merged:
            return np.empty((0, 2)), np.empty(0, dtype=np.int64)
        keys = sorted(merged)
        return np.array(keys, dtype=np.float64), np.array([merged[k] for k in keys], dtype=np.int64)

    def off_diagonal(self) -> PersistenceDiagram:
        return PersistenceDiagram({k: m for k, m in self.points.items() if k[1] > k[0]}, self.dim)

    @classmethod
    def from_points(
        cls, points: Iterable[Sequence[float]], dim: DimSpec = TOTAL
    ) -> PersistenceDiagram:
        """Build from ``(birth, death)`` or ``(birth, death, multiplicity[, essential])`` rows."""
        acc: Counter[Point] = Counter()
        for row in points:
            b, d = float(row[0]), float(row[1])
            mult = int(row[2]) if len(row) > 2 else 1
            ess = bool(row[3]) if len(row) > 3 else False
            if d < b:
                raise ValueError(f"point ({b}, {d}) lies below the diagonal")
            if mult < 1:
                raise ValueError("multiplicity must be positive")
            acc[(b, d, ess)] += mult
        return cls(dict(acc), dim)


def diagram_from_pairs(
    pairs: Sequence[PersistencePair], fc: FilteredComplex, dim: DimSpec = TOTAL
) -> PersistenceDiagram:
    """One point per pair at (birth weight, death weight); essential classes die at 1."""
    w = fc.weights
    acc: Counter[Point] = Counter()
    for pr in pairs:
        if dim != TOTAL and pr.dim != dim:
            continue
        if pr.dim > MAX_DIM:
            continue
        b = float(w[pr.birth_index])
        d = ESSENTIAL_DEATH if pr.essential else float(w[pr.death_index])
        acc[(b, d, pr.essential)] += 1
    return PersistenceDiagram(dict(acc), dim)


def multiplicity_oracle(
    pairs: Sequence[PersistencePair], fc: FilteredComplex, p: int, w_i: float, w_j: float
) -> int:
    """Multiplicity of the finite point ``(w_i, w_j)`` from persistent Betti numbers.

    Evaluates the alternating sum

        beta(w_i+, w_j-) - beta(w_i+, w_j+) + beta(w_i-, w_j+) - beta(w_i-, w_j-)

    where ``beta(x, y)`` is the rank of ``H_p(K(x)) -> H_p(K(y))`` and ``+/-``
    are one-sided limits. Because weights only change at ``fc.levels``,
    ``K(w+)`` is the stage of the last level ``<= w`` and ``K(w-)`` the stage
    of the last level ``< w``. Essential classes never contribute to a finite
    point.
    """
    if not w_i < w_j:
        raise ValueError("need w_i < w_j")
    levels = fc.levels

    def stage_plus(w: float) -> int:
        return int(np.searchsorted(levels, w, side="right"))

    def stage_minus(w: float) -> int:
        return int(np.searchsorted(levels, w, side="left"))

    def beta(x: int, y: int) -> int:
        if x > y:
            raise AssertionError("stage order violated")
        return persistent_betti(pairs, fc, x, y - x, p)

    ip, im = stage_plus(w_i), stage_minus(w_i)
    jp, jm = stage_plus(w_j), stage_minus(w_j)
    return beta(ip, jm) - beta(ip, jp) + beta(im, jp) - beta(im, jm)


def _feasible(
    xy: np.ndarray,
    x_half: np.ndarray,
    y_half: np.ndarray,
    x_mult: np.ndarray,
    y_mult: np.ndarray,
    delta: float,
) -> bool:
    """Is there a perfect matching of X + diag(Y) with Y + diag(X) at cost <= delta?

    Distinct points carry capacities equal to their multiplicity; all
    diagonal copies on each side are pooled into one node because they are
    interchangeable.
    """
    nx, ny = len(x_mult), len(y_mult)
    total_x, total_y = int(x_mult.sum()), int(y_mult.sum())
    big = total_x + total_y
    # nodes: 0 source, 1..nx X points, nx+1 diag-of-Y pool (left), then Y points, diag-of-X pool (right), sink
    src, dl = 0, nx + 1
    y0 = nx + 2
    dr = y0 + ny
    sink = dr + 1
    rows: list[np.ndarray] = []
    cols: list[np.ndarray] = []
    caps: list[np.ndarray] = []

    def add(r, c, cap):
        rows.append(np.atleast_1d(np.asarray(r, dtype=np.int32)))
        cols.append(np.atleast_1d(np.asarray(c, dtype=np.int32)))
        caps.append(np.broadcast_to(np.asarray(cap, dtype=np.int32), rows[-1].shape).copy())

    xs = np.arange(1, nx + 1)
    ys = np.arange(y0, y0 + ny)
    add(np.zeros(nx, int), xs, x_mult)
    add(src, dl, total_y)
    add(ys, np.full(ny, sink), y_mult)
    add(dr, sink, total_x)
    add(dl, dr, big)
    if nx and ny:
        ii, jj = np.nonzero(xy <= delta)
        add(xs[ii], ys[jj], big)
    ok_x = np.nonzero(x_half <= delta)[0]
    add(xs[ok_x], np.full(len(ok_x), dr), big)
    ok_y = np.nonzero(y_half <= delta)[0]
    add(np.full(len(ok_y), dl), ys[ok_y], big)

    r = np.concatenate(rows)
    c = np.concatenate(cols)
    v = np.concatenate(caps)
    graph = csr_array((v, (r, c)), shape=(sink + 1, sink + 1))
    flow = maximum_flow(graph, src, sink, method="dinic").flow_value
    return flow == big


def bottleneck(X: PersistenceDiagram, Y: PersistenceDiagram) -> float:
    """Exact bottleneck distance under the L-infinity ground metric.

    Candidate values are every point-to-point distance and every distance to
    the diagonal; the answer is the smallest candidate at which a perfect
    matching exists, found by binary search. Points on the diagonal are
    dropped first since they match the diagonal at no cost.
    """
    px, mx = X.off_diagonal().coordinates()
    py, my = Y.off_diagonal().coordinates()
    if len(mx) == 0 and len(my) == 0:
        return 0.0
    x_half = (px[:, 1] - px[:, 0]) / 2.0
    y_half = (py[:, 1] - py[:, 0]) / 2.0
    if len(mx) and len(my):
        xy = np.maximum(
            np.abs(px[:, None, 0] - py[None, :, 0]), np.abs(px[:, None, 1] - py[None, :, 1])
        )
    else:
        xy = np.empty((len(mx), len(my)))
    candidates = np.unique(np.concatenate([xy.ravel(), x_half, y_half]))
    # the largest half-persistence always admits a matching, so search only up to it
    upper = max(x_half.max(initial=0.0), y_half.max(initial=0.0))
    candidates = candidates[candidates <= upper]
    lo, hi = 0, len(candidates) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _feasible(xy, x_half, y_half, mx, my, candidates[mid]):
            hi = mid
        else:
            lo = mid + 1
    return float(candidates[lo])


def diagrams_to_json(diagrams: dict[DimSpec, PersistenceDiagram]) -> dict[str, list]:
    return {
        str(k): [[b, d, m, e] for b, d, m, e in dg.sorted_points()] for k, dg in diagrams.items()
    }


def diagrams_from_json(payload: dict[str, list]) -> dict[DimSpec, PersistenceDiagram]:
    out: dict[DimSpec, PersistenceDiagram] = {}
    for k, rows in payload.items():
        if k in ("meta",):
            continue
        key: DimSpec = int(k) if k.isdigit() else k
        out[key] = PersistenceDiagram.from_points(rows, key)
    return out
