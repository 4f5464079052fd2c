from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from conftest import load_corpus, valid_pairs
from gpstab.cycles import enumerate_cycles
from gpstab.graphs import (
    GpParams,
    Graph,
    ParameterError,
    apply_vertex_map,
    components,
    double_cover,
    is_bipartite,
    is_connected,
    is_vertex_determining,
    make_dgp,
    make_gp,
    odd_cover_map,
    odd_cover_target,
    split_cover,
    two_coloring,
)

pairs = st.integers(3, 40).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, (n - 1) // 2)))


def test_petersen_graph():
    g = make_gp((5, 2))
    assert (g.vertex_count, g.edge_count) == (10, 15)
    assert all(g.degree(x) == 3 for x in range(10))
    assert not list(enumerate_cycles(g, 3)) and not list(enumerate_cycles(g, 4))
    assert list(enumerate_cycles(g, 5))


def test_prism():
    g = make_gp((3, 1))
    assert (g.vertex_count, g.edge_count) == (6, 9)


@pytest.mark.parametrize("n,k", [(4, 2), (2, 1), (7, 0), (6, 3), (7, -1)])
def test_invalid_params(n, k):
    with pytest.raises(ParameterError):
        make_gp((n, k))


def test_error_names_bound():
    with pytest.raises(ParameterError, match="n/2"):
        GpParams(4, 2)


def test_vertex_layout():
    g = make_gp((7, 3))
    assert g.has_edge(0, 1) and g.has_edge(0, 7) and g.has_edge(7, 10)
    d = make_dgp((7, 3))
    # (u0, layer 0) -- (u1, layer 1)
    assert d.has_edge(0, 14 + 1) and not d.has_edge(0, 1)


def test_double_cover_sizes():
    d = double_cover(make_gp((5, 2)))
    assert (d.vertex_count, d.edge_count) == (20, 30)


def test_double_cover_of_bipartite_splits():
    d = make_dgp((6, 1))
    comps = components(d)
    assert len(comps) == 2
    gp = make_gp((6, 1))
    split = split_cover((6, 1))
    for part, m in ((split.part1, split.map1), (split.part2, split.map2)):
        sub = d.induced(part)
        pos = sorted(part)
        assert apply_vertex_map(sub, gp, [m[x] for x in pos])


def test_odd_cover_is_isomorphism_7_3():
    d = make_dgp((7, 3))
    assert is_connected(d)
    assert odd_cover_target((7, 3)) == GpParams(14, 3)
    assert apply_vertex_map(d, make_gp((14, 3)), odd_cover_map((7, 3)))


def test_odd_cover_is_isomorphism_9_2():
    d = make_dgp((9, 2))
    assert odd_cover_target((9, 2)) == GpParams(18, 7)
    assert apply_vertex_map(d, make_gp((18, 7)), odd_cover_map((9, 2)))


@pytest.mark.parametrize("n,k,expected", [(6, 1, True), (5, 2, False), (6, 2, False), (8, 3, True)])
def test_bipartite_examples(n, k, expected):
    assert is_bipartite(make_gp((n, k))) is expected


def test_connectivity_examples():
    assert is_connected(make_gp((9, 2)))
    assert len(components(make_dgp((6, 1)))) == 2
    assert is_connected(make_dgp((9, 2)))


def test_vertex_determining_examples():
    assert is_vertex_determining(make_gp((4, 1)))
    assert not is_vertex_determining(Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3)]))
    assert is_vertex_determining(make_dgp((8, 2)))


def test_identity_map_and_bad_maps():
    g = make_gp((5, 2))
    assert apply_vertex_map(g, g, list(range(10)))
    with pytest.raises(ValueError):
        apply_vertex_map(g, g, [0] * 10)
    with pytest.raises(ValueError):
        apply_vertex_map(g, g, {0: 0})


def test_split_cover_examples():
    s = split_cover((6, 1))
    assert len(s.part1) == len(s.part2) == 12
    assert split_cover((8, 3)).crossing_edges == 0
    with pytest.raises(ParameterError):
        split_cover((8, 2))
    with pytest.raises(ParameterError):
        odd_cover_map((8, 3))


def test_multigraph_rejected():
    with pytest.raises(ValueError):
        Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])


@given(pairs)
def test_gp_is_cubic(p):
    g = make_gp(p)
    assert g.edge_count == 3 * p[0]
    assert all(g.degree(x) == 3 for x in range(g.vertex_count))


@given(pairs)
def test_double_cover_bipartite_with_layer_coloring(p):
    g = make_gp(p)
    d = double_cover(g)
    assert d.edge_count == 2 * g.edge_count
    n = p[0]
    layer = [x // (2 * n) for x in range(4 * n)]
    assert all(layer[a] != layer[b] for a, b in d.edges())
    assert two_coloring(d) is not None


def test_double_cover_connectivity_rule_on_corpus():
    for name, g in load_corpus().items():
        d = double_cover(g)
        assert is_connected(d) == (is_connected(g) and not is_bipartite(g)), name


@pytest.mark.parametrize("n,k", [p for p in valid_pairs(3, 41) if p[0] % 2])
def test_odd_cover_map_all(n, k):
    tgt = odd_cover_target((n, k))
    assert apply_vertex_map(make_dgp((n, k)), make_gp(tgt), odd_cover_map((n, k)))


@pytest.mark.parametrize("n,k", [p for p in valid_pairs(4, 40) if p[0] % 2 == 0 and p[1] % 2])
def test_split_cover_all(n, k):
    s = split_cover((n, k))
    d, gp = make_dgp((n, k)), make_gp((n, k))
    assert s.crossing_edges == 0
    for part, m in ((s.part1, s.map1), (s.part2, s.map2)):
        assert apply_vertex_map(d.induced(part), gp, [m[x] for x in sorted(part)])


@given(pairs)
def test_text_round_trip(p):
    g = make_dgp(p)
    h = Graph.from_text(g.to_text())
    assert h.vertex_count == g.vertex_count and h.edges() == g.edges()


def test_text_format():
    text = make_gp((3, 1)).to_text().splitlines()
    assert text[0] == "p 6 9"
    assert text[1].startswith("# 0 ")
    assert text[-1] == "4 5"
    with pytest.raises(ValueError):
        Graph.from_text("p 3 5\n0 1\n")
