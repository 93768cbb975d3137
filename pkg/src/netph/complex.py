"""Clique complexes of graphs and their weight filtrations."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np

from .errors import StructuralError
from .graph import Graph

Simplex = tuple[int, ...]

MAX_DIM = 3


def facets(s: Simplex) -> list[Simplex]:
    """Codimension-one faces of ``s`` in lexicographic order of the removed vertex."""
    return [s[:i] + s[i + 1 :] for i in range(len(s))] if len(s) > 1 else []


def enumerate_cliques(g: Graph, max_dim: int = MAX_DIM) -> list[Simplex]:
    """All cliques of ``g`` with at most ``max_dim + 1`` vertices, as sorted tuples.

    Output is grouped by dimension; within a dimension it is lexicographic.
    """
    if not 0 <= max_dim <= MAX_DIM:
        raise ValueError(f"max_dim must lie in 0..{MAX_DIM}")
    out: list[Simplex] = [(v,) for v in range(g.n)]
    if max_dim == 0:
        return out
    out.extend(g.edges)
    if max_dim == 1:
        return out
    nbr = [frozenset(a) for a in g.adjacency]
    # only neighbours above the largest vertex, so each clique is built once
    triangles: list[Simplex] = []
    for u, v in g.edges:
        for w in sorted(x for x in nbr[u] & nbr[v] if x > v):
            triangles.append((u, v, w))
    out.extend(triangles)
    if max_dim == 2:
        return out
    tetra: list[Simplex] = []
    for u, v, w in triangles:
        common = nbr[u] & nbr[v] & nbr[w]
        for x in sorted(y for y in common if y > w):
            tetra.append((u, v, w, x))
    out.extend(tetra)
    return out


@dataclass(frozen=True)
class FilteredComplex:
    """Simplices in filtration order with their weights.

    ``levels`` holds the distinct weights in increasing order; stage ``i``
    (1-based) of the filtration is the subcomplex of simplices with weight at
    most ``levels[i - 1]``, and stage 0 is empty.
    """

    simplices: tuple[Simplex, ...]
    weights: np.ndarray = field(repr=False)

    @cached_property
    def dims(self) -> np.ndarray:
        return np.fromiter((len(s) - 1 for s in self.simplices), dtype=np.int64, count=len(self))

    @cached_property
    def index(self) -> dict[Simplex, int]:
        return {s: i for i, s in enumerate(self.simplices)}

    @cached_property
    def levels(self) -> np.ndarray:
        return np.unique(self.weights)

    @cached_property
    def filtration_index(self) -> np.ndarray:
        """Stage at which each simplex enters (1-based)."""
        return np.searchsorted(self.levels, self.weights) + 1

    def __len__(self) -> int:
        return len(self.simplices)

    @property
    def num_stages(self) -> int:
        return len(self.levels)

    @property
    def max_dim(self) -> int:
        return int(self.dims.max()) if len(self) else -1

    def count_by_dim(self, top: int = MAX_DIM) -> list[int]:
        counts = np.bincount(self.dims, minlength=top + 1) if len(self) else np.zeros(top + 1, int)
        return [int(c) for c in counts[: top + 1]]

    def prefix(self, r: float) -> tuple[Simplex, ...]:
        """Subcomplex ``K(r)``: every simplex of weight at most ``r``."""
        stop = int(np.searchsorted(self.weights, r, side="right"))
        return self.simplices[:stop]


def build_filtration(
    simplices: Sequence[Simplex], weights: Mapping[Simplex, float]
) -> FilteredComplex:
    """Sort simplices by (weight, dimension, vertex tuple).

    Weights must be monotone along faces; a face missing from the complex or
    weighted above one of its cofaces raises :class:`StructuralError`.
    """
    present = set(simplices)
    if len(present) != len(simplices):
        raise StructuralError("duplicate simplex in complex")
    for s in simplices:
        if s not in weights:
            raise StructuralError(f"simplex {s} has no weight")
        ws = weights[s]
        for f in facets(s):
            if f not in present:
                raise StructuralError(f"face {f} of {s} is missing from the complex")
            if weights[f] > ws:
                raise StructuralError(
                    f"face {f} (weight {weights[f]!r}) is heavier than coface {s} (weight {ws!r})"
                )
    order = sorted(simplices, key=lambda s: (weights[s], len(s), s))
    return FilteredComplex(
        simplices=tuple(order),
        weights=np.array([weights[s] for s in order], dtype=np.float64),
    )


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate_complex(fc: FilteredComplex, max_dim: int = MAX_DIM) -> ValidationReport:
    """Check closure under faces, face-before-coface order and weight monotonicity."""
    report = ValidationReport()
    seen: dict[Simplex, int] = {}
    w = fc.weights
    for pos, s in enumerate(fc.simplices):
        if len(s) == 0 or any(a >= b for a, b in zip(s, s[1:])):
            report.violations.append(f"position {pos}: {s} is not a strictly increasing tuple")
        if len(s) - 1 > max_dim:
            report.violations.append(f"position {pos}: {s} exceeds dimension cap {max_dim}")
        if s in seen:
            report.violations.append(f"position {pos}: {s} repeated")
        if pos and w[pos] < w[pos - 1]:
            report.violations.append(f"position {pos}: weight decreases along the order")
        for f in facets(s):
            fp = seen.get(f)
            if fp is None:
                report.violations.append(f"position {pos}: face {f} of {s} does not precede it")
            elif w[fp] > w[pos]:
                report.violations.append(f"position {pos}: face {f} heavier than {s}")
        seen[s] = pos
    return report
