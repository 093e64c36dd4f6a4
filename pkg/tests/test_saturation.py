from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from rslab.construct import build_G_star, build_H, build_H_star, build_rainbow_K
from rslab.graphcore import empty_graph, from_edge_list
from rslab.rainbow import find_rainbow_path, naive_contains_rainbow_path
from rslab.saturation import (
    ALL_BLOCKED,
    Defect,
    NotRainbowFreeError,
    blocked_pendant_colors,
    blocked_table,
    first_defect,
    format_blocked,
    is_rainbow_free,
    is_saturated,
    saturation_defects,
)

from conftest import brute_saturated, colored_graphs


def test_rainbow_free_examples():
    assert is_rainbow_free(build_H(6), 6)
    assert not is_rainbow_free(build_rainbow_K(4, 6), 4)
    assert is_rainbow_free(empty_graph(10, 5), 5)


def test_defects_of_saturated_graphs():
    assert saturation_defects(build_G_star(2, 5), 5, 5) == []
    assert saturation_defects(build_H(7), 7, 9) == []


def test_defects_of_empty_graph():
    d = saturation_defects(empty_graph(5, 5), 5, 5)
    assert len(d) == 50
    assert d[0] == Defect(0, 1, 1) and d == sorted(d)


def test_defects_require_rainbow_free():
    with pytest.raises(NotRainbowFreeError):
        saturation_defects(build_rainbow_K(4, 6), 4)


def test_defects_parallel_matches_serial():
    g = empty_graph(6, 4).with_edge(0, 1, 1)
    assert saturation_defects(g, 4, jobs=3) == saturation_defects(g, 4)


def test_is_saturated_examples():
    assert is_saturated(build_G_star(2, 6), 6, 7)
    assert not is_saturated(build_rainbow_K(5, 10), 5, 10)
    assert is_saturated(from_edge_list(3, 2, [(0, 1, 1), (1, 2, 1), (0, 2, 1)]), 3, 2)


def test_mono_triangle_by_enumeration():
    # every 2-coloring of every graph on 3 labeled vertices
    pairs = [(0, 1), (0, 2), (1, 2)]
    saturated = []
    for m in range(4):
        for chosen in combinations(pairs, m):
            for cols in product((1, 2), repeat=m):
                g = from_edge_list(3, 2, [(u, v, c) for (u, v), c in zip(chosen, cols)])
                if brute_saturated(g, 3):
                    saturated.append(g)
                    assert is_saturated(g, 3, 2)
    assert min(g.m for g in saturated) == 3
    assert all(len(set(g.edges.values())) == 1 for g in saturated)


def test_blocked_examples():
    assert blocked_pendant_colors(build_H_star(5), 1, 4) == {2, 5}
    assert blocked_pendant_colors(build_H(5), 1, 4) == {2}
    assert blocked_pendant_colors(build_H(5), 0, 4) == frozenset()
    edge = from_edge_list(2, 7, [(0, 1, 7)])
    assert blocked_pendant_colors(edge, 0, 2) == {7}


def test_all_blocked_marker():
    g = from_edge_list(3, 2, [(0, 1, 1)])
    assert blocked_pendant_colors(g, 2, 2) is ALL_BLOCKED
    assert format_blocked(ALL_BLOCKED) == "ALL"
    with pytest.raises(ValueError):
        blocked_pendant_colors(g, 3, 2)


def _table(g, order):
    return {v: (b if b is ALL_BLOCKED else set(b)) for v, b in blocked_table(g, order).items()}


def test_blocked_tables():
    assert _table(build_H_star(6), 5) == {0: set(), 1: set(), 2: {1, 7}, 3: {1, 6}, 4: set()}
    assert _table(build_H(6), 5) == {0: set(), 1: set(), 2: {1}, 3: {1}, 4: set(), 5: set()}
    assert _table(build_H_star(7), 6) == {0: set(), 1: set(), 2: set(), 3: {9}, 4: {8}, 5: set()}


@pytest.mark.parametrize("ell", range(7, 12))
def test_blocked_pattern_both_parities(ell):
    table = _table(build_H_star(ell), ell - 1)
    expected = {v: set() for v in range(ell - 1)}
    expected[ell - 4] = {2 * ell - 5}
    expected[ell - 3] = {2 * ell - 6}
    assert table == expected


def _pendant_oracle(g, v, order, c):
    """Hang a new vertex off v in color c and look for a rainbow path through it."""
    h = from_edge_list(g.n + 1, max(g.t, c), g.edge_list() + [(v, g.n, c)])
    return find_rainbow_path(h, order + 1, require_edge=(v, g.n)) is None


@settings(max_examples=80)
@given(colored_graphs(max_n=6, min_n=1), st.data())
def test_pendant_consistency(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    order = data.draw(st.integers(1, g.n))
    b = blocked_pendant_colors(g, v, order)
    for c in range(1, g.t + 1):
        blocked = b is ALL_BLOCKED or c in b
        assert blocked == _pendant_oracle(g, v, order, c)


@settings(max_examples=60, deadline=None)
@given(colored_graphs(max_n=6, max_t=4), st.integers(3, 5))
def test_defect_soundness(g, ell):
    if not is_rainbow_free(g, ell):
        return
    defects = set(saturation_defects(g, ell))
    for u, v in g.non_edges():
        for c in range(1, g.t + 1):
            creates = naive_contains_rainbow_path(g.with_edge(u, v, c), ell)
            assert (Defect(u, v, c) in defects) == (not creates)
    first = first_defect(g, ell)
    assert first == (min(defects) if defects else None)


@settings(max_examples=60)
@given(colored_graphs(max_n=6, max_t=4), st.integers(3, 5), st.randoms())
def test_color_permutation_equivariance(g, ell, rnd):
    colors = list(range(1, g.t + 1))
    rnd.shuffle(colors)
    pi = dict(zip(range(1, g.t + 1), colors))
    h = g.relabel(range(g.n), pi)
    assert is_saturated(h, ell) == is_saturated(g, ell)
    order = min(3, g.n)
    for v in range(g.n):
        b, bh = blocked_pendant_colors(g, v, order), blocked_pendant_colors(h, v, order)
        if b is ALL_BLOCKED:
            assert bh is ALL_BLOCKED
        else:
            assert bh == {pi[c] for c in b}
