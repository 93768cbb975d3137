import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netph.complex import FilteredComplex, build_filtration, enumerate_cliques, validate_complex
from netph.curvature import triangles_on_edge
from netph.errors import StructuralError
from netph.pipeline import persistence_of_graph

from graphs import complete, cycle, fig1_like, path, random_graph, triangle
from oracles import closure_prefix


def test_counts():
    assert len(enumerate_cliques(complete(4))) == 15
    assert len(enumerate_cliques(cycle(4))) == 8
    assert len(enumerate_cliques(complete(5))) == 30
    assert (0, 1, 2, 3, 4) not in enumerate_cliques(complete(5))


def test_dimension_cap_argument():
    assert len(enumerate_cliques(complete(4), 1)) == 10
    with pytest.raises(ValueError):
        enumerate_cliques(complete(4), 4)


def test_triangle_tie_break_order():
    s = enumerate_cliques(triangle())
    fc = build_filtration(s, {x: 0.5 for x in s})
    assert fc.simplices == ((0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2))
    assert fc.num_stages == 1


def test_p4_middle_edge_first():
    fc = persistence_of_graph(path(4)).complex
    edges = [s for s in fc.simplices if len(s) == 2]
    assert edges[0] == (1, 2)


def test_isolated_vertex_enters_at_last_stage():
    fc = persistence_of_graph(fig1_like()).complex
    pos = fc.index[(9,)]
    assert fc.weights[pos] == fc.weights.max()
    assert fc.filtration_index[pos] == fc.num_stages


def test_cycle_edge_stage():
    # hand-chosen weights: square edges (3,5) (5,6) (4,6) at stages 1-3, then (3,4) at stage 4
    g = fig1_like()
    ew = {e: 0.9 for e in g.edges}
    ew.update({(3, 5): 0.1, (5, 6): 0.2, (4, 6): 0.3, (3, 4): 0.4})
    from netph.pipeline import filtration_from_edge_weights
    from netph.persistence import compute_persistence

    fc = filtration_from_edge_weights(g, ew)
    (h1,) = [p for p in compute_persistence(fc) if p.dim == 1 and p.essential]
    assert fc.simplices[h1.birth_index] == (3, 4)
    assert fc.filtration_index[h1.birth_index] == 4


def test_rejects_bad_input():
    s = enumerate_cliques(triangle())
    w = {x: 0.5 for x in s}
    with pytest.raises(StructuralError):
        build_filtration(s + [(0,)], w)
    with pytest.raises(StructuralError):
        build_filtration([x for x in s if x != (0, 2)], w)
    with pytest.raises(StructuralError):
        build_filtration(s, {**w, (0,): 0.9})
    with pytest.raises(StructuralError):
        build_filtration(s, {k: v for k, v in w.items() if k != (1, 2)})


def test_validate_flags_triangle_before_edge():
    bad = FilteredComplex(
        ((0,), (1,), (2,), (0, 1), (0, 1, 2), (0, 2), (1, 2)), np.full(7, 0.5)
    )
    assert not validate_complex(bad).ok
    fc = build_filtration(list(bad.simplices), {s: 0.5 for s in bad.simplices})
    assert validate_complex(fc).ok


def _random_fc(seed):
    rng = np.random.default_rng(seed)
    g = random_graph(rng, int(rng.integers(3, 12)), float(rng.uniform(0.2, 0.8)))
    return g, persistence_of_graph(g, rng.choice(["forman", "ebc"])).complex


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_shuffled_order_detected(seed):
    g, fc = _random_fc(seed)
    if fc.max_dim < 1:
        return
    perm = list(range(len(fc)))
    random.Random(seed).shuffle(perm)
    shuffled = FilteredComplex(tuple(fc.simplices[i] for i in perm), fc.weights[perm])
    assert validate_complex(fc).ok
    # a shuffle passes only if it keeps faces first and weights sorted
    ok = validate_complex(shuffled).ok
    pos = {s: k for k, s in enumerate(shuffled.simplices)}
    expected = all(np.diff(shuffled.weights) >= 0) and all(
        pos[s[:i] + s[i + 1 :]] < pos[s] for s in shuffled.simplices if len(s) > 1 for i in range(len(s))
    )
    assert ok == expected


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_prefix_is_generated_subcomplex(seed):
    g, fc = _random_fc(seed)
    for r in list(fc.levels) + [0.0, 1.0]:
        assert set(fc.prefix(r)) == closure_prefix(fc.simplices, fc.weights, r)


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_counting(seed):
    g, fc = _random_fc(seed)
    counts = fc.count_by_dim()
    assert counts[0] == g.n
    assert counts[1] == g.num_edges
    assert 3 * counts[2] == sum(triangles_on_edge(g, e) for e in g.edges)
