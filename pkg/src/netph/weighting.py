"""Turn edge scores into filtration weights on the whole clique complex."""

from __future__ import annotations

from typing import Mapping, Sequence

from .errors import EmptyScoresError, StructuralError
from .graph import Edge

Simplex = tuple[int, ...]

DEFAULT_EPSILON = 1.0
# weight given to every vertex of a graph without edges
EDGELESS_WEIGHT = 1.0


def _bounds(scores: Mapping[Edge, float], epsilon: float) -> tuple[float, float]:
    if not scores:
        raise EmptyScoresError("no edges to weight")
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    values = scores.values()
    return min(values), max(values)


def normalize_forman(
    curvatures: Mapping[Edge, int], epsilon: float = DEFAULT_EPSILON
) -> dict[Edge, float]:
    """Map curvatures into (0, 1), increasing in curvature.

    ``w(e) = (F(e) - (F_min - eps)) / ((F_max + eps) - (F_min - eps))``, so
    the most negatively curved edges enter the filtration first.
    """
    lo, hi = _bounds(curvatures, epsilon)
    base = lo - epsilon
    span = (hi + epsilon) - base
    return {e: (f - base) / span for e, f in curvatures.items()}


def normalize_ebc(
    centralities: Mapping[Edge, float], epsilon: float = DEFAULT_EPSILON
) -> dict[Edge, float]:
    """Map betweenness into (0, 1), decreasing in betweenness.

    ``w(e) = ((B_max + eps) - B(e)) / ((B_max + eps) - (B_min - eps))``, so
    the most central edges enter the filtration first.
    """
    lo, hi = _bounds(centralities, epsilon)
    top = hi + epsilon
    span = top - (lo - epsilon)
    return {e: (top - b) / span for e, b in centralities.items()}


def extend_weights(
    simplices: Sequence[Simplex], edge_weights: Mapping[Edge, float]
) -> dict[Simplex, float]:
    """Assign a weight to every simplex from the weights of its edges.

    Vertices take the minimum over incident edges, simplices of dimension two
    and up take the maximum over their edges (which equals the maximum over
    their facets). Isolated vertices take the largest weight in the complex,
    or ``EDGELESS_WEIGHT`` if there are no edges at all.
    """
    out: dict[Simplex, float] = {}
    vertex_min: dict[int, float] = {}
    for s in simplices:
        if len(s) != 2:
            continue
        try:
            w = edge_weights[s]
        except KeyError:
            raise StructuralError(f"edge {s} has no weight") from None
        out[s] = w
        for v in s:
            cur = vertex_min.get(v)
            if cur is None or w < cur:
                vertex_min[v] = w

    top = max(out.values()) if out else EDGELESS_WEIGHT
    for s in simplices:
        k = len(s)
        if k == 1:
            out[s] = vertex_min.get(s[0], top)
        elif k > 2:
            try:
                out[s] = max(out[(s[i], s[j])] for i in range(k) for j in range(i + 1, k))
            except KeyError as exc:
                raise StructuralError(f"edge {exc.args[0]} of {s} has no weight") from None
    return out
