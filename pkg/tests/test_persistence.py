import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netph.complex import build_filtration, enumerate_cliques
from netph.generators import gen_ba
from netph.graph import Graph, connected_components
from netph.persistence import (
    barcodes,
    betti_numbers,
    boundary_matrix,
    boundary_squared_is_zero,
    compute_persistence,
    euler_characteristic,
    pairing_counts_consistent,
    persistent_betti,
)
from netph.pipeline import persistence_of_graph

from graphs import cycle, random_graph, triangle
from oracles import betti_by_rank, persistent_betti_by_rank


def uniform(g, w=0.5):
    s = enumerate_cliques(g)
    return build_filtration(s, {x: w for x in s})


def test_boundary_columns_of_triangle():
    fc = uniform(triangle())
    m = boundary_matrix(fc)
    cols = [len(c) for c in m.columns]
    assert all(all(r < j for r in c) for j, c in enumerate(m.columns))
    assert cols == [0, 0, 0, 2, 2, 2, 3]
    assert boundary_squared_is_zero(m)


def test_triangle_pairs():
    fc = uniform(triangle())
    pairs = compute_persistence(fc)
    by_dim = {d: [p for p in pairs if p.dim == d] for d in range(3)}
    assert len(by_dim[0]) == 3
    assert sum(p.essential for p in by_dim[0]) == 1
    assert sorted(fc.simplices[p.death_index] for p in by_dim[0] if not p.essential) == [(0, 1), (0, 2)]
    (cyc,) = by_dim[1]
    assert fc.simplices[cyc.birth_index] == (1, 2)
    assert fc.simplices[cyc.death_index] == (0, 1, 2)
    assert by_dim[2] == []


def test_c4_betti():
    pairs = compute_persistence(uniform(cycle(4)))
    assert betti_numbers(pairs)[:2] == [1, 1]


def test_single_vertex():
    pairs = compute_persistence(uniform(Graph.from_edges(1, [])))
    assert len(pairs) == 1 and pairs[0].essential and pairs[0].dim == 0


def test_persistent_betti_examples():
    fc = uniform(cycle(4))
    pairs = compute_persistence(fc)
    n = fc.num_stages
    assert persistent_betti(pairs, fc, n, 0, 0) == 1
    assert persistent_betti(pairs, fc, n, 0, 1) == 1
    assert all(persistent_betti(pairs, fc, 0, 0, p) == 0 for p in range(4))
    with pytest.raises(IndexError):
        persistent_betti(pairs, fc, n, 1, 0)


def test_persistent_betti_filled_triangle():
    s = enumerate_cliques(triangle())
    w = {(0,): 0.1, (1,): 0.1, (2,): 0.1, (0, 1): 0.1, (0, 2): 0.1, (1, 2): 0.2, (0, 1, 2): 0.3}
    fc = build_filtration(s, w)
    pairs = compute_persistence(fc)
    # stage 2 has the hollow cycle; stage 3 fills it
    assert persistent_betti(pairs, fc, 2, 0, 1) == 1
    assert persistent_betti(pairs, fc, 2, 1, 1) == 0


def test_triangle_barcode():
    fc = uniform(triangle())
    bars = barcodes(compute_persistence(fc), fc)
    ess = [iv for iv in bars[0] if iv.essential]
    assert [(iv.birth, iv.death) for iv in ess] == [(0.5, 1.0)]
    zero = [iv for iv in bars[0] if not iv.essential]
    assert all(iv.birth == iv.death == 0.5 for iv in zero) and len(zero) == 2


def test_ba_single_essential_h0():
    res = persistence_of_graph(gen_ba(1000, 2, 0))
    ess = [iv for iv in res.barcodes()[0] if iv.essential]
    assert len(ess) == 1


def random_fc(seed):
    rng = np.random.default_rng(seed)
    g = random_graph(rng, int(rng.integers(1, 13)), float(rng.choice([0.2, 0.4, 0.6, 0.8])))
    return g, persistence_of_graph(g, str(rng.choice(["forman", "ebc"]))).complex


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=80, deadline=None)
def test_structural_identities(seed):
    g, fc = random_fc(seed)
    pairs = compute_persistence(fc)
    assert boundary_squared_is_zero(boundary_matrix(fc))
    assert euler_characteristic(fc.count_by_dim()) == euler_characteristic(betti_numbers(pairs))
    assert pairing_counts_consistent(pairs, fc)
    assert betti_numbers(pairs) == betti_by_rank(fc.simplices)
    assert betti_numbers(pairs)[0] == connected_components(g)[0]
    for p in pairs:
        if not p.essential:
            assert p.birth_index < p.death_index
            assert len(fc.simplices[p.death_index]) == len(fc.simplices[p.birth_index]) + 1


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_persistent_betti_matches_rank_oracle(seed):
    rng = np.random.default_rng(seed)
    g = random_graph(rng, int(rng.integers(3, 9)), float(rng.uniform(0.3, 0.8)))
    fc = persistence_of_graph(g, str(rng.choice(["forman", "ebc"]))).complex
    pairs = compute_persistence(fc)
    n = fc.num_stages
    for i in range(n + 1):
        for j in range(n - i + 1):
            for p in range(3):
                assert persistent_betti(pairs, fc, i, j, p) == persistent_betti_by_rank(fc, i, j, p)


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_barcode_weights_normalized(seed):
    _, fc = random_fc(seed)
    for ivs in barcodes(compute_persistence(fc), fc).values():
        for iv in ivs:
            assert 0 <= iv.birth <= iv.death <= 1
            assert iv.essential == (iv.death_index is None)
