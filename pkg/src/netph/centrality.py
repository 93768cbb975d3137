"""Edge betweenness centrality.

EBC(e) sums sigma_st(e) / sigma_st over *ordered* pairs s != t, so every
unordered pair contributes twice. Many libraries report half of this; pass
``ordered=False`` to get that convention.
"""

from __future__ import annotations

from collections import deque

from .graph import Edge, Graph

BRUTE_FORCE_MAX_N = 64


def _single_source(g: Graph, s: int):
    adj = g.adjacency
    dist = [-1] * g.n
    sigma = [0] * g.n
    preds: list[list[int]] = [[] for _ in range(g.n)]
    order: list[int] = []
    dist[s] = 0
    sigma[s] = 1
    queue = deque([s])
    while queue:
        v = queue.popleft()
        order.append(v)
        dv = dist[v] + 1
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dv
                queue.append(w)
            if dist[w] == dv:
                sigma[w] += sigma[v]
                preds[w].append(v)
    return order, sigma, preds


def edge_betweenness_all(g: Graph, ordered: bool = True) -> dict[Edge, float]:
    """Edge betweenness of every edge by per-source path counting.

    For each source a BFS counts shortest paths, then dependencies are
    accumulated in reverse BFS order and credited to the DAG edge they flow
    through. Sources are processed in ascending order, which fixes the
    floating-point summation order.
    """
    ebc: dict[Edge, float] = {e: 0.0 for e in g.edges}
    for s in range(g.n):
        order, sigma, preds = _single_source(g, s)
        delta = [0.0] * g.n
        for w in reversed(order):
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in preds[w]:
                c = sigma[v] * coeff
                ebc[(v, w) if v < w else (w, v)] += c
                delta[v] += c
    if not ordered:
        for e in ebc:
            ebc[e] *= 0.5
    return ebc


def _all_shortest_paths(preds: list[list[int]], s: int, t: int) -> list[list[int]]:
    paths: list[list[int]] = []
    stack = [(t, [t])]
    while stack:
        v, path = stack.pop()
        if v == s:
            paths.append(path[::-1])
            continue
        for u in preds[v]:
            stack.append((u, path + [u]))
    return paths


def ebc_brute_force(g: Graph, ordered: bool = True) -> dict[Edge, float]:
    """Reference edge betweenness by listing every shortest path explicitly.

    Only meant as a test oracle; refuses graphs above ``BRUTE_FORCE_MAX_N``
    vertices.
    """
    if g.n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute-force oracle limited to n <= {BRUTE_FORCE_MAX_N}")
    ebc: dict[Edge, float] = {e: 0.0 for e in g.edges}
    for s in range(g.n):
        # BFS layering gives the shortest-path DAG; paths are then expanded one by one
        dist = {s: 0}
        preds: list[list[int]] = [[] for _ in range(g.n)]
        frontier = [s]
        while frontier:
            nxt: list[int] = []
            for v in frontier:
                for w in g.adjacency[v]:
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
                    if dist[w] == dist[v] + 1:
                        preds[w].append(v)
            frontier = nxt
        for t in range(g.n):
            if t == s or t not in dist:
                continue
            paths = _all_shortest_paths(preds, s, t)
            counts: dict[Edge, int] = {}
            for path in paths:
                for a, b in zip(path, path[1:]):
                    e = (a, b) if a < b else (b, a)
                    counts[e] = counts.get(e, 0) + 1
            total = len(paths)
            for e, c in counts.items():
                ebc[e] += c / total
    if not ordered:
        for e in ebc:
            ebc[e] *= 0.5
    return ebc
