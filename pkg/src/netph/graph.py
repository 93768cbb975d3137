"""Finite simple undirected graphs and edge-list ingestion."""

from __future__ import annotations

import io
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, TextIO

import numpy as np

from .errors import ParseError

Edge = tuple[int, int]


def _canonical(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0 .. n-1``.

    Attributes
    ----------
    n : int
        Number of vertices.
    edges : tuple of (int, int)
        Each edge once as ``(u, v)`` with ``u < v``, sorted lexicographically.
    adjacency : tuple of tuple of int
        Sorted neighbour list per vertex.
    labels : tuple of int
        Original (input) id of every dense vertex id.
    """

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)
    labels: tuple[int, ...] = field(repr=False)

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[Edge], labels: Iterable[int] | None = None
    ) -> Graph:
        """Build a graph, dropping self-loops and collapsing duplicate edges."""
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        edge_set: set[Edge] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u != v:
                edge_set.add(_canonical(u, v))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edge_set:
            nbrs[u].append(v)
            nbrs[v].append(u)
        labels = tuple(range(n)) if labels is None else tuple(int(x) for x in labels)
        if len(labels) != n:
            raise ValueError("labels must have one entry per vertex")
        return cls(
            n=n,
            edges=tuple(sorted(edge_set)),
            adjacency=tuple(tuple(sorted(a)) for a in nbrs),
            labels=labels,
        )

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")
        return len(self.adjacency[v])

    def degrees(self) -> np.ndarray:
        return np.fromiter((len(a) for a in self.adjacency), dtype=np.int64, count=self.n)

    def has_edge(self, u: int, v: int) -> bool:
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            return False
        a = self.adjacency[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adjacency[v]]

    def mean_degree(self) -> float:
        return 2.0 * self.num_edges / self.n if self.n else 0.0


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def connected_components(g: Graph) -> tuple[int, np.ndarray]:
    """Label connected components by breadth-first search.

    Returns ``(count, labels)`` where components are numbered in order of
    their smallest vertex.
    """
    labels = np.full(g.n, -1, dtype=np.int64)
    count = 0
    for s in range(g.n):
        if labels[s] >= 0:
            continue
        labels[s] = count
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if labels[w] < 0:
                    labels[w] = count
                    queue.append(w)
        count += 1
    return count, labels


def _parse_header(line: str, lineno: int) -> int | None:
    text = line.strip().replace(" ", "")
    if not text.lower().startswith("n="):
        return None
    try:
        n = int(text[2:])
    except ValueError:
        raise ParseError(f"bad vertex-count header {line.strip()!r}", lineno) from None
    if n < 0:
        raise ParseError("vertex count must be non-negative", lineno)
    return n


def load_edge_list(stream: TextIO | str, keep_isolated_hint: int | None = None) -> Graph:
    """Read a whitespace-separated edge list.

    Lines starting with ``#`` or ``%`` are comments. An optional first
    non-comment line ``n=<count>`` (or ``keep_isolated_hint``) declares the
    vertex universe ``0 .. count-1``: ids are then kept verbatim and ids that
    never occur in an edge become isolated vertices. Without a count, ids are
    re-indexed densely in order of first appearance and ``Graph.labels``
    records the original ids.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    hint = keep_isolated_hint
    raw: list[Edge] = []
    first_data = True
    for lineno, line in enumerate(stream, start=1):
        s = line.strip()
        if not s or s[0] in "#%":
            continue
        if first_data:
            first_data = False
            header = _parse_header(s, lineno)
            if header is not None:
                hint = header if hint is None else max(hint, header)
                continue
        parts = s.split()
        if len(parts) != 2:
            raise ParseError(f"expected 2 tokens, got {len(parts)}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex id in {s!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex id in {s!r}", lineno)
        if hint is not None and (u >= hint or v >= hint):
            raise ParseError(f"vertex id exceeds declared count n={hint}", lineno)
        raw.append((u, v))

    if hint is not None:
        return Graph.from_edges(hint, raw)

    index: dict[int, int] = {}
    for u, v in raw:
        for x in (u, v):
            if x not in index:
                index[x] = len(index)
    dense = [(index[u], index[v]) for u, v in raw]
    return Graph.from_edges(len(index), dense, labels=list(index))


def write_edge_list(g: Graph, stream: TextIO) -> None:
    """Write ``g`` in dense ids with an ``n=`` header so isolated vertices survive."""
    stream.write(f"n={g.n}\n")
    for u, v in g.edges:
        stream.write(f"{u} {v}\n")


def read_edge_list_file(path, keep_isolated_hint: int | None = None) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return load_edge_list(fh, keep_isolated_hint)
