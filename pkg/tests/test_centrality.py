import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netph.centrality import ebc_brute_force, edge_betweenness_all
from netph.graph import Graph, connected_components

from graphs import cycle, path, random_graph, star, triangle


def hop_distances(g: Graph) -> np.ndarray:
    from collections import deque

    d = np.full((g.n, g.n), -1, dtype=np.int64)
    for s in range(g.n):
        d[s, s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for v in g.adjacency[u]:
                if d[s, v] < 0:
                    d[s, v] = d[s, u] + 1
                    q.append(v)
    return d


@pytest.mark.parametrize("fn", [edge_betweenness_all, ebc_brute_force])
def test_examples(fn):
    assert fn(path(3))[(0, 1)] == pytest.approx(4.0)
    assert all(v == pytest.approx(2.0) for v in fn(triangle()).values())
    assert fn(Graph.from_edges(2, [(0, 1)]))[(0, 1)] == pytest.approx(2.0)
    assert all(v == pytest.approx(4.0) for v in fn(cycle(4)).values())
    # three leaves: each spoke carries the hub pair plus two leaf pairs, both directions
    assert all(v == pytest.approx(6.0) for v in fn(star(3)).values())
    assert all(v == pytest.approx(8.0) for v in fn(star(4)).values())


def test_unordered_is_half():
    g = random_graph(np.random.default_rng(1), 20, 0.2)
    full = edge_betweenness_all(g)
    half = edge_betweenness_all(g, ordered=False)
    for e in g.edges:
        assert half[e] == pytest.approx(full[e] / 2)


def test_repeat_calls_identical():
    g = random_graph(np.random.default_rng(2), 30, 0.15)
    assert edge_betweenness_all(g) == edge_betweenness_all(g)


def test_brute_force_size_limit():
    with pytest.raises(ValueError):
        ebc_brute_force(path(200))


@given(st.integers(0, 2**32 - 1), st.integers(2, 14), st.floats(0.05, 0.7))
@settings(max_examples=60, deadline=None)
def test_sum_rule(seed, n, p):
    g = random_graph(np.random.default_rng(seed), n, p)
    total = sum(edge_betweenness_all(g).values())
    d = hop_distances(g)
    assert total == pytest.approx(float(d[d > 0].sum()), abs=1e-9)


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_bridge_contributes_exactly_one_per_direction(seed):
    # two random blobs joined by one bridge
    rng = np.random.default_rng(seed)
    a = random_graph(rng, 6, 0.6)
    b = random_graph(rng, 6, 0.6)
    edges = list(a.edges) + [(u + 6, v + 6) for u, v in b.edges] + [(0, 6)]
    g = Graph.from_edges(12, edges)
    _, lab = connected_components(g)
    side_a = int((lab[:6] == lab[0]).sum())
    side_b = int((lab[6:] == lab[0]).sum())
    assert edge_betweenness_all(g)[(0, 6)] == pytest.approx(2.0 * side_a * side_b)


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_nonnegative(seed):
    g = random_graph(np.random.default_rng(seed), 15, 0.25)
    assert all(v >= 0 for v in edge_betweenness_all(g).values())
