import pytest
from hypothesis import given, strategies as st

from rslab.construct import build_H
from rslab.graphcore import (
    ColorRangeError,
    DuplicateEdgeError,
    ECGSyntaxError,
    PaletteMismatchError,
    PathWitness,
    SelfLoopError,
    VertexRangeError,
    colors_of,
    colorset,
    disjoint_union,
    from_edge_list,
    full_palette,
    is_proper_coloring,
    parse_ecg,
    write_ecg,
)

from conftest import colored_graphs

H5_EDGES = [(0, 1, 1), (0, 2, 2), (1, 2, 3), (3, 2, 5), (3, 1, 4), (4, 2, 4), (4, 1, 5)]


def test_rainbow_triangle():
    g = from_edge_list(3, 3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)])
    assert g.n == 3 and g.m == 3
    assert sorted(g.edges.values()) == [1, 2, 3]


def test_edge_list_matches_H5():
    assert from_edge_list(5, 5, H5_EDGES) == build_H(5)


@pytest.mark.parametrize(
    "n, t, edges, err",
    [
        (2, 1, [(0, 1, 1), (0, 1, 1)], DuplicateEdgeError),
        (2, 1, [(0, 1, 1), (1, 0, 1)], DuplicateEdgeError),
        (2, 1, [(1, 1, 1)], SelfLoopError),
        (2, 1, [(0, 2, 1)], VertexRangeError),
        (2, 2, [(0, 1, 3)], ColorRangeError),
        (2, 2, [(0, 1, 0)], ColorRangeError),
    ],
)
def test_rejections(n, t, edges, err):
    with pytest.raises(err):
        from_edge_list(n, t, edges)


def test_palette_cap():
    with pytest.raises(ColorRangeError):
        from_edge_list(2, 65, [])
    from_edge_list(2, 64, [(0, 1, 64)])


def test_colorset_helpers():
    m = colorset([1, 5, 3])
    assert colors_of(m) == (1, 3, 5)
    assert colors_of(full_palette(4)) == (1, 2, 3, 4)
    assert colors_of(m & colorset([3, 4])) == (3,)


def test_disjoint_union_two_H5():
    g = disjoint_union([build_H(5), build_H(5)])
    assert (g.n, g.m) == (10, 14)
    assert g.color(5 + 1, 5 + 4) == 5


def test_disjoint_union_identity_and_edges():
    h = build_H(6)
    assert disjoint_union([h]) == h
    e = from_edge_list(2, 3, [(0, 1, 2)])
    g = disjoint_union([e, e, e])
    assert (g.n, g.m) == (6, 3)
    assert g.edge_list() == [(0, 1, 2), (2, 3, 2), (4, 5, 2)]


def test_disjoint_union_palette_mismatch():
    with pytest.raises(PaletteMismatchError):
        disjoint_union([from_edge_list(2, 3, []), from_edge_list(2, 4, [])])


@given(colored_graphs(max_n=5), colored_graphs(max_n=5))
def test_disjoint_union_additive(a, b):
    b = from_edge_list(b.n, a.t, [(u, v, min(c, a.t)) for u, v, c in b.edge_list()])
    g = disjoint_union([a, b])
    assert g.n == a.n + b.n and g.m == a.m + b.m
    assert all((u < a.n) == (v < a.n) for u, v in g.edges)


def test_proper_coloring():
    assert is_proper_coloring(build_H(7))
    assert not is_proper_coloring(from_edge_list(3, 2, [(0, 1, 1), (1, 2, 1), (0, 2, 2)]))
    assert is_proper_coloring(from_edge_list(2, 1, [(0, 1, 1)]))


@pytest.mark.parametrize("ell", range(5, 13))
def test_H_is_proper(ell):
    assert is_proper_coloring(build_H(ell))


@given(colored_graphs(), st.randoms())
def test_proper_invariant_under_relabel(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert is_proper_coloring(g.relabel(perm)) == is_proper_coloring(g)


def test_parse_ecg_triangle():
    g = parse_ecg("3 3\n0 1 1\n0 2 3\n1 2 2\n")
    assert g == from_edge_list(3, 3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)])


def test_write_ecg_H5():
    text = write_ecg(build_H(5))
    lines = text.splitlines()
    assert lines[0] == "5 5" and len(lines) == 8
    assert text.endswith("\n")
    assert lines[1:] == [f"{u} {v} {c}" for u, v, c in sorted(
        (min(u, v), max(u, v), c) for u, v, c in H5_EDGES)]


def test_parse_comments():
    g = parse_ecg("# header comment\n2 1\n# edge\n0 1 1\n")
    assert g.m == 1


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("3 2\n0 1 3\n", 2, "exceeds palette 2"),
        ("3 2\n0 1\n", 2, "u v c"),
        ("3 2\n1 0 1\n", 2, "u < v"),
        ("3 2\n0 3 1\n", 2, "out of range"),
        ("3 2\n0 1 1\n0 1 2\n", 3, "duplicate"),
        ("3\n", 1, "header"),
        ("3 2\n0 x 1\n", 2, "non-integer"),
        ("3 2\r\n0 1 1\n", 1, "LF"),
        ("# only a comment\n", 1, "missing header"),
    ],
)
def test_parse_errors(text, line, fragment):
    with pytest.raises(ECGSyntaxError) as info:
        parse_ecg(text)
    assert info.value.line == line
    assert fragment in str(info.value)


@given(colored_graphs(max_n=9, max_t=12))
def test_ecg_round_trip(g):
    text = write_ecg(g)
    assert parse_ecg(text) == g
    assert write_ecg(parse_ecg(text)) == text


def test_witness_validation():
    g = build_H(5)
    PathWitness((1, 0, 2, 3), (1, 2, 5)).validate(g)
    with pytest.raises(ValueError):
        PathWitness((1, 0, 2, 3), (1, 2, 4)).validate(g)
    with pytest.raises(ValueError):
        PathWitness((0, 3), (1,)).validate(g)
    with pytest.raises(ValueError):
        PathWitness((0, 1, 0), (1, 1)).validate(g)
    assert not PathWitness((0, 1, 2), (1, 1)).is_rainbow
