import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netph.centrality import edge_betweenness_all
from netph.complex import enumerate_cliques, facets
from netph.curvature import forman_ricci_all
from netph.errors import EmptyScoresError, StructuralError
from netph.graph import Graph
from netph.weighting import extend_weights, normalize_ebc, normalize_forman

from graphs import complete, path, random_graph, triangle


def test_forman_examples():
    assert set(normalize_forman(forman_ricci_all(path(3))).values()) == {0.5}
    w = normalize_forman(forman_ricci_all(path(4)))
    assert [w[e] for e in path(4).edges] == pytest.approx([2 / 3, 1 / 3, 2 / 3])
    assert set(normalize_forman(forman_ricci_all(triangle())).values()) == {0.5}


def test_ebc_examples():
    assert set(normalize_ebc(edge_betweenness_all(triangle())).values()) == {0.5}
    assert set(normalize_ebc(edge_betweenness_all(path(3))).values()) == {0.5}
    scores = edge_betweenness_all(path(4))
    assert [scores[e] for e in path(4).edges] == pytest.approx([6, 8, 6])
    w = normalize_ebc(scores)
    assert [w[e] for e in path(4).edges] == pytest.approx([0.75, 0.25, 0.75])


def test_extremal_edge_weight():
    scores = {(0, 1): -3, (1, 2): 5, (2, 3): 0}
    w = normalize_forman(scores, epsilon=0.5)
    assert w[(0, 1)] == pytest.approx(0.5 / (8 + 1))
    e = normalize_ebc({(0, 1): 10.0, (1, 2): 2.0}, epsilon=2.0)
    assert e[(0, 1)] == pytest.approx(2.0 / (8 + 4))


def test_empty_scores_rejected():
    with pytest.raises(EmptyScoresError):
        normalize_forman({})
    with pytest.raises(EmptyScoresError):
        normalize_ebc({})


def test_nonpositive_epsilon_rejected():
    with pytest.raises(ValueError):
        normalize_forman({(0, 1): 1}, epsilon=0)


def test_extend_triangle():
    s = enumerate_cliques(triangle())
    w = extend_weights(s, {e: 0.5 for e in triangle().edges})
    assert set(w.values()) == {0.5} and len(w) == 7


def test_extend_p4():
    g = path(4)
    w = extend_weights(enumerate_cliques(g), dict(zip(g.edges, [2 / 3, 1 / 3, 2 / 3])))
    assert [w[(v,)] for v in range(4)] == pytest.approx([2 / 3, 1 / 3, 1 / 3, 2 / 3])


def test_isolated_vertex_gets_global_maximum():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3)])
    s = enumerate_cliques(g)
    w = extend_weights(s, normalize_forman(forman_ricci_all(g)))
    assert w[(4,)] == max(w.values())
    assert w[(4,)] == max(w[e] for e in g.edges)


def test_edgeless_vertices_weight_one():
    g = Graph.from_edges(3, [])
    assert extend_weights(enumerate_cliques(g), {}) == {(0,): 1.0, (1,): 1.0, (2,): 1.0}


def test_missing_edge_weight():
    with pytest.raises(StructuralError):
        extend_weights(enumerate_cliques(path(3)), {(0, 1): 0.5})


def test_higher_simplex_is_max_of_edges():
    g = complete(4)
    ew = {e: 0.1 * (i + 1) for i, e in enumerate(g.edges)}
    w = extend_weights(enumerate_cliques(g), ew)
    assert w[(0, 1, 2, 3)] == pytest.approx(0.6)
    assert w[(0, 1, 2)] == pytest.approx(max(ew[(0, 1)], ew[(0, 2)], ew[(1, 2)]))


seeds = st.integers(0, 2**32 - 1)


@given(seeds, st.sampled_from(["forman", "ebc"]))
@settings(max_examples=50, deadline=None)
def test_range_and_face_monotonicity(seed, scheme):
    rng = np.random.default_rng(seed)
    g = random_graph(rng, int(rng.integers(2, 16)), float(rng.uniform(0.1, 0.8)))
    if not g.edges:
        return
    if scheme == "forman":
        ew = normalize_forman(forman_ricci_all(g))
    else:
        ew = normalize_ebc(edge_betweenness_all(g))
    assert all(0 < x < 1 for x in ew.values())
    s = enumerate_cliques(g)
    w = extend_weights(s, ew)
    top = max(ew.values())
    assert all(0 < x <= top for x in w.values())
    for simplex in s:
        for f in facets(simplex):
            assert w[f] <= w[simplex]


@given(seeds, st.integers(-50, 50))
@settings(max_examples=50, deadline=None)
def test_shift_preserves_edge_order(seed, shift):
    g = random_graph(np.random.default_rng(seed), 12, 0.35)
    if not g.edges:
        return
    f = forman_ricci_all(g)
    a = normalize_forman(f)
    b = normalize_forman({e: x + shift for e, x in f.items()})
    key = lambda w: sorted(g.edges, key=lambda e: (w[e], e))
    assert key(a) == key(b)
