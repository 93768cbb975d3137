"""Seeded generators for the five random-graph families.

Every generator takes ``seed`` as an int or a :class:`numpy.random.SeedSequence`
and draws from a PCG64 stream, so the same seed gives the same edge set on
any platform. Batches derive per-sample streams with
``SeedSequence(seed).spawn``-style keys; see :func:`sample_seed`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Union

import numpy as np

from .errors import CalibrationError
from .graph import Graph

SeedLike = Union[int, np.random.SeedSequence]

FAMILIES = ("er", "ws", "ba", "hyp", "sph")


def _rng(seed: SeedLike) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def sample_seed(seed: int, *key: int) -> np.random.SeedSequence:
    """Independent stream for ``key`` (e.g. model index, sample index) under ``seed``."""
    return np.random.SeedSequence(entropy=seed, spawn_key=tuple(int(k) for k in key))


def gen_er(n: int, p: float, seed: SeedLike) -> Graph:
    """G(n, p): every vertex pair independently with probability ``p``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = _rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(len(iu)) < p
    return Graph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def gen_ws(n: int, k: int, p: float, seed: SeedLike) -> Graph:
    """Watts-Strogatz small world.

    Start from a ring where each vertex links to its ``k/2`` nearest
    neighbours on each side; then, for each lattice edge ``(u, u+j)`` in
    order of ``j`` and ``u``, with probability ``p`` replace it by ``(u, w)``
    with ``w`` uniform among vertices that are neither ``u`` nor already
    adjacent to ``u``. The edge count stays ``n*k/2``.
    """
    if k % 2 or not 0 < k < n:
        raise ValueError("k must be even with 0 < k < n")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = _rng(seed)
    adj: list[set[int]] = [set() for _ in range(n)]
    for u in range(n):
        for j in range(1, k // 2 + 1):
            v = (u + j) % n
            adj[u].add(v)
            adj[v].add(u)
    for j in range(1, k // 2 + 1):
        for u in range(n):
            v = (u + j) % n
            if v not in adj[u] or rng.random() >= p:
                continue
            if len(adj[u]) >= n - 1:
                continue
            while True:
                w = int(rng.integers(n))
                if w != u and w not in adj[u]:
                    break
            adj[u].discard(v)
            adj[v].discard(u)
            adj[u].add(w)
            adj[w].add(u)
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in adj[u] if u < v))


def gen_ba(n: int, m: int, seed: SeedLike) -> Graph:
    """Barabasi-Albert preferential attachment.

    Seeded with a complete graph on ``m`` vertices. Each new vertex picks
    ``m`` distinct existing vertices with probability proportional to degree
    (uniformly while every existing degree is zero), so the result has
    ``m*(m-1)/2 + m*(n-m)`` edges.
    """
    if m < 1 or n <= m:
        raise ValueError("need m >= 1 and n > m")
    rng = _rng(seed)
    edges = [(u, v) for u in range(m) for v in range(u + 1, m)]
    # each vertex appears once per unit of degree
    repeated: list[int] = [x for e in edges for x in e]
    for new in range(m, n):
        if new == m:
            targets = list(range(m))
        else:
            chosen: set[int] = set()
            picks: list[int] = []
            while len(picks) < m:
                if repeated:
                    t = repeated[int(rng.integers(len(repeated)))]
                else:
                    t = int(rng.integers(new))
                if t not in chosen:
                    chosen.add(t)
                    picks.append(t)
            targets = picks
        for t in targets:
            edges.append((t, new))
            repeated.extend((t, new))
    return Graph.from_edges(n, edges)


# -- hyperbolic --------------------------------------------------------------

_QUAD_NODES = 400


def _radial_quantiles(alpha: float, radius: float, u: np.ndarray) -> np.ndarray:
    # inverse CDF of density proportional to sinh(alpha r) on [0, radius]
    return np.arccosh(1.0 + u * (math.cosh(alpha * radius) - 1.0)) / alpha


def _connect_angle(r1: np.ndarray, r2: np.ndarray, radius: float) -> np.ndarray:
    """Largest angular gap at which points at radii r1, r2 are within ``radius``."""
    num = np.cosh(r1) * np.cosh(r2) - math.cosh(radius)
    den = np.sinh(r1) * np.sinh(r2)
    with np.errstate(divide="ignore", invalid="ignore"):
        c = np.where(den > 0, num / den, np.where(num <= 0, -1.0, 1.0))
    return np.arccos(np.clip(c, -1.0, 1.0))


@lru_cache(maxsize=256)
def hyperbolic_connection_probability(alpha: float, radius: float) -> float:
    """P(distance <= radius) for two independent points of the radial model.

    Midpoint rule in quantile coordinates on a fixed grid; angles are uniform
    so the angular part is exact.
    """
    u = (np.arange(_QUAD_NODES) + 0.5) / _QUAD_NODES
    r = _radial_quantiles(alpha, radius, u)
    theta = _connect_angle(r[:, None], r[None, :], radius)
    return float(theta.mean() / math.pi)


def hyperbolic_radius(n: int, k_target: float, gamma: float, max_iter: int = 200) -> float:
    """Disk radius whose expected mean degree is ``k_target``, by bisection."""
    alpha = (gamma - 1.0) / 2.0

    def mean_degree(radius: float) -> float:
        return (n - 1) * hyperbolic_connection_probability(alpha, radius)

    lo = 2.0 * math.log(n / max(k_target, 1e-9)) if n > k_target else 1e-3
    lo = max(lo, 1e-3)
    hi = lo
    for _ in range(max_iter):
        if mean_degree(lo) >= k_target:
            break
        lo /= 2.0
    else:
        raise CalibrationError("could not bracket the hyperbolic radius from below")
    for _ in range(max_iter):
        hi *= 1.5
        if mean_degree(hi) <= k_target:
            break
    else:
        raise CalibrationError("could not bracket the hyperbolic radius from above")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mean_degree(mid) > k_target:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-10:
            break
    return 0.5 * (lo + hi)


def gen_hyperbolic(n: int, k_target: float, gamma: float, seed: SeedLike) -> Graph:
    """Random hyperbolic graph at zero temperature.

    Points have uniform angle and radial density proportional to
    ``sinh(alpha r)`` on ``[0, R]`` with ``alpha = (gamma - 1) / 2``; two
    points are joined when their hyperbolic distance is at most ``R``.
    """
    if not gamma > 1.0:
        raise ValueError("gamma must exceed 1")
    if k_target <= 0:
        raise ValueError("k_target must be positive")
    if k_target >= n - 1:
        return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))
    alpha = (gamma - 1.0) / 2.0
    radius = hyperbolic_radius(n, k_target, gamma)
    rng = _rng(seed)
    theta = rng.uniform(0.0, 2.0 * math.pi, n)
    r = _radial_quantiles(alpha, radius, rng.random(n))
    iu, ju = np.triu_indices(n, k=1)
    dtheta = math.pi - np.abs(math.pi - np.abs(theta[iu] - theta[ju]))
    cosh_d = np.cosh(r[iu]) * np.cosh(r[ju]) - np.sinh(r[iu]) * np.sinh(r[ju]) * np.cos(dtheta)
    keep = cosh_d <= math.cosh(radius)
    return Graph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def spherical_angle(n: int, k_target: float) -> float:
    """Cap angle giving expected degree ``k_target`` for uniform points on the sphere."""
    if not 0 < k_target <= n - 1:
        raise ValueError("k_target must lie in (0, n-1]")
    return math.acos(max(-1.0, 1.0 - 2.0 * k_target / (n - 1)))


def gen_spherical(n: int, k_target: float, seed: SeedLike) -> Graph:
    """Random geometric graph on the unit sphere.

    Vertices are uniform on the sphere; two are joined when their angular
    distance is at most ``arccos(1 - 2 k / (n - 1))``, the cap whose area
    fraction is ``k / (n - 1)``.
    """
    theta = spherical_angle(n, k_target)
    rng = _rng(seed)
    pts = rng.standard_normal((n, 3))
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    iu, ju = np.triu_indices(n, k=1)
    dots = np.clip(np.einsum("ij,ij->i", pts[iu], pts[ju]), -1.0, 1.0)
    keep = dots >= math.cos(theta) if theta < math.pi else np.ones(len(iu), bool)
    return Graph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


@dataclass(frozen=True)
class ModelSpec:
    """A random-graph family with its parameters and base seed."""

    family: str
    n: int
    params: dict = field(default_factory=dict, hash=False, compare=True)
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.n < 1:
            raise ValueError("n must be positive")
        p = self.params
        if self.family in ("er", "ws") and not 0.0 <= p.get("p", -1) <= 1.0:
            raise ValueError("probability p must lie in [0, 1]")
        if self.family == "ws" and (int(p.get("k", 0)) < 1):
            raise ValueError("k must be >= 1")
        if self.family == "ba" and int(p.get("m", 0)) < 1:
            raise ValueError("m must be >= 1")
        if self.family in ("hyp", "sph") and not p.get("k", 0) >= 1:
            raise ValueError("target degree k must be >= 1")
        if self.family == "hyp":
            if not p.get("gamma", 0) > 1:
                raise ValueError("gamma must exceed 1")
            if p.get("T", 0) != 0:
                raise ValueError("only zero temperature is supported")

    @property
    def label(self) -> str:
        return {"er": "ER", "ws": "WS", "ba": "BA", "hyp": "Hyperbolic", "sph": "Spherical"}[
            self.family
        ]

    def with_seed(self, seed: int) -> ModelSpec:
        return replace(self, seed=seed)

    def generate(self, seed: SeedLike | None = None) -> Graph:
        s = self.seed if seed is None else seed
        p = self.params
        if self.family == "er":
            return gen_er(self.n, p["p"], s)
        if self.family == "ws":
            return gen_ws(self.n, int(p["k"]), p["p"], s)
        if self.family == "ba":
            return gen_ba(self.n, int(p["m"]), s)
        if self.family == "hyp":
            return gen_hyperbolic(self.n, p["k"], p["gamma"], s)
        return gen_spherical(self.n, p["k"], s)


def standard_models(n: int = 1000, k: int = 4) -> list[ModelSpec]:
    """The five families at mean degree ``k``: ER, WS, BA, spherical, hyperbolic."""
    return [
        ModelSpec("er", n, {"p": k / n}),
        ModelSpec("ws", n, {"k": k, "p": 0.5}),
        ModelSpec("ba", n, {"m": k // 2}),
        ModelSpec("sph", n, {"k": k}),
        ModelSpec("hyp", n, {"k": k, "gamma": 2.0, "T": 0}),
    ]
