"""Forman-Ricci curvature of edges in an unweighted graph.

The triangle-augmented edge curvature with every cell weight set to one is

    F(e) = sum_{t > e} 1 + (1 + 1) - sum_{e' ~ e, e' not in a triangle with e} 1

where ``e' ~ e`` ranges over edges sharing exactly one endpoint with ``e``.
All terms are integers, so curvature is kept as ``int``.
"""

from __future__ import annotations

from math import isqrt

from .graph import Edge, Graph


def _common_count(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    # merge scan over two sorted neighbour lists
    i = j = c = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x == y:
            c += 1
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    return c


def _check_edge(g: Graph, e: Edge) -> tuple[int, int]:
    u, v = e
    if not g.has_edge(u, v):
        raise KeyError(f"edge {e} is not in the graph")
    return u, v


def triangles_on_edge(g: Graph, e: Edge) -> int:
    """Number of triangles containing edge ``e``."""
    u, v = _check_edge(g, e)
    return _common_count(g.adjacency[u], g.adjacency[v])


def forman_ricci(g: Graph, e: Edge) -> int:
    """Curvature of one edge, evaluated term by term at unit weights.

    Each term of the weighted formula is kept in its weighted shape with
    ``w_e = w_t = w_v = 1`` so that this routine serves as the reference the
    closed form in :func:`forman_ricci_all` is checked against.
    """
    u, v = _check_edge(g, e)
    w_e = w_t = w_v1 = w_v2 = w_other = 1
    nu = set(g.adjacency[u]) - {v}
    nv = set(g.adjacency[v]) - {u}
    apexes = nu & nv

    face_term = sum(w_e // w_t for _ in apexes)
    vertex_term = w_v1 // w_e + w_v2 // w_e
    # incident edges at each endpoint that do not bound a common triangle with e
    parallel_term = 0
    for x in sorted(nu):
        if x not in apexes:
            parallel_term += w_v1 // isqrt(w_e * w_other)
    for x in sorted(nv):
        if x not in apexes:
            parallel_term += w_v2 // isqrt(w_e * w_other)
    return w_e * (face_term + vertex_term - parallel_term)


def forman_ricci_all(g: Graph) -> dict[Edge, int]:
    """Curvature of every edge via ``4 - deg(u) - deg(v) + 3 * triangles(u, v)``."""
    adj = g.adjacency
    out: dict[Edge, int] = {}
    for u, v in g.edges:
        m = _common_count(adj[u], adj[v])
        out[(u, v)] = 4 - len(adj[u]) - len(adj[v]) + 3 * m
    return out
