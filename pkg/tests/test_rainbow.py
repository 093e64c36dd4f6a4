from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from rslab.construct import build_G_star, build_H, build_H_star, build_rainbow_K
from rslab.graphcore import empty_graph, from_edge_list, witness_from_vertices
from rslab.rainbow import (
    contains_rainbow_path,
    enumerate_rainbow_paths_from,
    find_rainbow_path,
    naive_contains_rainbow_path,
    through_edge_colors,
)

from conftest import brute_rainbow, colored_graphs, random_graph


def test_H5_has_no_rainbow_P5():
    assert find_rainbow_path(build_H(5), 5) is None


@pytest.mark.parametrize("ell", range(5, 11))
def test_H_rainbow_free(ell):
    assert not contains_rainbow_path(build_H(ell), ell)


def test_rainbow_K4_witness():
    w = find_rainbow_path(build_rainbow_K(4, 6), 4)
    assert w is not None and w.vertices == (0, 1, 2, 3)


def test_small_cases():
    assert contains_rainbow_path(from_edge_list(2, 1, [(0, 1, 1)]), 2)
    mono = from_edge_list(3, 1, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    assert not contains_rainbow_path(mono, 3)
    assert find_rainbow_path(empty_graph(3, 1), 4) is None


def test_required_edge_between_copies():
    # copy j of v_i is vertex 5*j + i
    g = build_G_star(2, 5).with_edge(1, 6, 2)
    w = find_rainbow_path(g, 5, require_edge=(1, 6))
    assert w is not None
    w.validate(g)
    assert w.is_rainbow
    assert {w.vertices[i:i + 2] for i in range(4)} & {(1, 6), (6, 1)}
    assert w.vertices == (0, 1, 6, 7, 8)
    # the trace v2, v3, v1 of copy 1 then v1, v2 of copy 2 is another witness
    other = witness_from_vertices(g, [2, 3, 1, 6, 7])
    assert other.is_rainbow and sorted(other.colors) == [2, 3, 4, 5]


def test_required_edge_must_exist():
    with pytest.raises(ValueError):
        find_rainbow_path(build_H(5), 5, require_edge=(0, 3))


def test_enumerate_H_star5_v1():
    ws = enumerate_rainbow_paths_from(build_H_star(5), 1, 4)
    assert [w.vertices for w in ws] == [(1, 0, 2, 3), (1, 3, 2, 0)]
    assert [w.colors for w in ws] == [(1, 2, 5), (4, 5, 2)]


def _brute_paths_from(g, v, order):
    out = set()
    others = [w for w in range(g.n) if w != v]
    for rest in permutations(others, order - 1):
        seq = (v,) + rest
        cols = [g.color(a, b) for a, b in zip(seq, seq[1:])]
        if None not in cols and len(set(cols)) == len(cols):
            out.add(frozenset(cols))
    return out


def test_enumerate_H_star6_v2_against_brute_force():
    g = build_H_star(6)
    expected = {frozenset({1, 2, 4, 7}), frozenset({1, 3, 6, 7}), frozenset({1, 4, 6, 7})}
    assert _brute_paths_from(g, 2, 5) == expected
    ws = enumerate_rainbow_paths_from(g, 2, 5)
    assert len(ws) == 3
    assert {frozenset(w.colors) for w in ws} == expected


def test_trivial_path():
    ws = enumerate_rainbow_paths_from(empty_graph(1, 1), 0, 1)
    assert len(ws) == 1 and ws[0].vertices == (0,) and ws[0].colors == ()


def test_naive_agrees_on_fixed_cases():
    assert naive_contains_rainbow_path(build_H(5), 5) is False
    assert naive_contains_rainbow_path(build_rainbow_K(4, 6), 4) is True


def test_naive_guard():
    with pytest.raises(ValueError):
        naive_contains_rainbow_path(empty_graph(11, 1), 3)
    with pytest.raises(ValueError):
        naive_contains_rainbow_path(empty_graph(10, 1), 10)


def test_differential_random(rng):
    for _ in range(200):
        n = rng.randint(1, 8)
        t = rng.randint(1, 8)
        g = random_graph(rng, n, t, 0.4)
        for order in range(3, 7):
            assert contains_rainbow_path(g, order) == naive_contains_rainbow_path(g, order)


@settings(max_examples=150)
@given(colored_graphs(max_n=7), st.integers(2, 6))
def test_witness_validity(g, order):
    w = find_rainbow_path(g, order)
    assert (w is not None) == brute_rainbow(g, order)
    if w is not None:
        w.validate(g)
        assert w.order == order and w.is_rainbow


@settings(max_examples=100)
@given(colored_graphs(max_n=7), st.integers(2, 6))
def test_witness_is_lexicographically_least(g, order):
    w = find_rainbow_path(g, order)
    best = None
    for seq in permutations(range(g.n), order):
        cols = [g.color(a, b) for a, b in zip(seq, seq[1:])]
        if None not in cols and len(set(cols)) == len(cols):
            best = seq
            break
    assert (w.vertices if w else None) == best


@given(colored_graphs(max_n=7), st.integers(3, 6))
def test_monotone_in_order(g, order):
    if contains_rainbow_path(g, order):
        assert all(contains_rainbow_path(g, k) for k in range(2, order))


@given(colored_graphs(max_n=7), st.integers(2, 6), st.randoms())
def test_permutation_invariance(g, order, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    colors = list(range(1, g.t + 1))
    rnd.shuffle(colors)
    cmap = dict(zip(range(1, g.t + 1), colors))
    base = contains_rainbow_path(g, order)
    assert contains_rainbow_path(g.relabel(perm), order) == base
    assert contains_rainbow_path(g.relabel(range(g.n), cmap), order) == base


@settings(max_examples=150)
@given(colored_graphs(max_n=7, min_n=2), st.integers(2, 6), st.data())
def test_new_edge_locality(g, order, data):
    if contains_rainbow_path(g, order) or not g.non_edges():
        return
    u, v = data.draw(st.sampled_from(g.non_edges()))
    c = data.draw(st.integers(1, g.t))
    h = g.with_edge(u, v, c)
    w = find_rainbow_path(h, order, require_edge=(u, v))
    assert (w is not None) == contains_rainbow_path(h, order)
    good = through_edge_colors(g, u, v, order, (1 << (g.t + 1)) - 2)
    assert bool(good >> c & 1) == (w is not None)


@settings(max_examples=100)
@given(colored_graphs(max_n=7, min_n=2), st.integers(2, 6), st.data())
def test_required_edge_witness(g, order, data):
    if not g.edges:
        return
    u, v = data.draw(st.sampled_from(sorted(g.edges)))
    w = find_rainbow_path(g, order, require_edge=(u, v))
    expected = None
    for seq in permutations(range(g.n), order):
        cols = [g.color(a, b) for a, b in zip(seq, seq[1:])]
        steps = set(zip(seq, seq[1:]))
        if None not in cols and len(set(cols)) == len(cols) and ((u, v) in steps or (v, u) in steps):
            expected = seq
            break
    assert (w.vertices if w else None) == expected
