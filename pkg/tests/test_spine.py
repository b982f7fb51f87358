import json
from math import comb

import networkx as nx
import numpy as np
import pytest

from spinecalc.jsonio import graph_to_dict
from spinecalc.spine import (
    SpineEdge,
    SpinePoint,
    SpineVertex,
    VertexKind,
    build_spine,
    compositions,
    euler_characteristic,
    realize,
    snap,
    to_dot,
    vertex_degree,
)
from spinecalc.star import (
    CENTER,
    EPS,
    Configuration,
    NotRegularError,
    SpineError,
    StarParams,
    StarPoint,
    hausdorff_distance,
    is_regular,
)

I, II = VertexKind.TYPE_I, VertexKind.TYPE_II
SWEEP = [(n, k) for n in range(2, 9) for k in range(2, 7)]


def as_networkx(g):
    G = nx.MultiGraph()
    G.add_nodes_from(range(len(g.vertices)))
    G.add_edges_from(g.ends)
    return G


def conf(n, k, *pts):
    return Configuration(StarParams(n, k), tuple(StarPoint(a, d) for a, d in pts))


def test_compositions_lexicographic():
    got = list(compositions(2, 3))
    assert got == sorted(got)
    assert len(got) == comb(4, 2)
    assert got[0] == (0, 0, 2) and got[-1] == (2, 0, 0)


class TestBuild:
    def test_hexagon(self):
        g = build_spine(StarParams(3, 2))
        kinds = [v.kind for v in g.vertices]
        assert kinds.count(I) == 3 and kinds.count(II) == 3
        assert len(g.edges) == 6
        G = nx.Graph(as_networkx(g))
        assert nx.is_connected(G) and all(d == 2 for _, d in G.degree())
        assert len(nx.cycle_basis(G)) == 1

    def test_n4_k3_counts(self):
        g = build_spine(StarParams(4, 3))
        kinds = [v.kind for v in g.vertices]
        assert (kinds.count(I), kinds.count(II), len(g.edges)) == (10, 16, 36)

    def test_concentrated_vertex_neighbors(self):
        g = build_spine(StarParams(3, 2))
        v = SpineVertex(I, (1, 0, 0))
        nbrs = {g.vertices[g.other_end(e, g.index(v))].arms for e in g.incident[g.index(v)]}
        assert nbrs == {(1, 1, 0), (1, 0, 1)}
        with pytest.raises(SpineError):
            g.index(SpineVertex(II, (2, 0, 0)))

    def test_deterministic_indexing(self):
        a, b = build_spine(StarParams(4, 3)), build_spine(StarParams(4, 3))
        assert a == b
        type_i = [v.arms for v in a.vertices if v.kind is I]
        type_ii = [v.arms for v in a.vertices if v.kind is II]
        assert type_i == sorted(type_i) and type_ii == sorted(type_ii)
        assert all(v.kind is I for v in a.vertices[: len(type_i)])
        keys = [(a.ends[e][0], ed.slide_arm) for e, ed in enumerate(a.edges)]
        assert keys == sorted(keys)

    def test_rejects_bad_params(self):
        with pytest.raises(SpineError):
            build_spine(StarParams(1, 3))


@pytest.mark.parametrize("n,k", SWEEP)
def test_structure_sweep(n, k):
    g = build_spine(StarParams(n, k))
    n1 = sum(1 for v in g.vertices if v.kind is I)
    assert n1 == comb(n + k - 2, n - 1)
    assert len(g.vertices) - n1 == comb(n + k - 1, n - 1) - n
    assert len(g.edges) == n * comb(n + k - 2, n - 1) - n
    for a, b in g.ends:
        assert g.vertices[a].kind is I and g.vertices[b].kind is II
    # each edge has exactly one type I end, so type I degrees sum to |E|
    assert sum(len(g.incident[i]) for i in range(n1)) == len(g.edges)
    for i, v in enumerate(g.vertices):
        if v.kind is I:
            assert vertex_degree(g, v) == (n - 1 if v.is_concentrated else n)
        else:
            assert vertex_degree(g, v) == sum(1 for x in v.arms if x)
    G = as_networkx(g)
    assert nx.is_connected(G)
    assert nx.is_bipartite(nx.Graph(G))
    assert euler_characteristic(g) == G.number_of_nodes() - G.number_of_edges()


class TestDegree:
    def test_concentrated(self):
        g = build_spine(StarParams(5, 4))
        assert vertex_degree(g, SpineVertex(I, (3, 0, 0, 0, 0))) == 4

    def test_spread(self):
        g = build_spine(StarParams(5, 4))
        assert vertex_degree(g, SpineVertex(I, (2, 1, 0, 0, 0))) == 5

    def test_type_ii(self):
        g = build_spine(StarParams(3, 3))
        assert vertex_degree(g, SpineVertex(II, (2, 1, 0))) == 2

    def test_missing_vertex(self):
        g = build_spine(StarParams(3, 3))
        with pytest.raises(SpineError):
            vertex_degree(g, SpineVertex(I, (1, 0, 0)))


class TestEuler:
    def test_hexagon(self):
        assert euler_characteristic(build_spine(StarParams(3, 2))) == 0

    def test_n4_k3(self):
        assert euler_characteristic(build_spine(StarParams(4, 3))) == -10

    @pytest.mark.parametrize("k", range(2, 7))
    def test_n2_is_tree(self, k):
        assert euler_characteristic(build_spine(StarParams(2, k))) == 1


class TestRealize:
    def test_type_i(self):
        c = realize(StarParams(3, 3), SpinePoint(vertex=SpineVertex(I, (1, 1, 0))))
        assert set(c) == {CENTER, StarPoint(1, 1.0), StarPoint(2, 1.0)}

    def test_type_ii(self):
        c = realize(StarParams(3, 2), SpinePoint(vertex=SpineVertex(II, (1, 1, 0))))
        assert set(c) == {StarPoint(1, 0.5), StarPoint(2, 0.5)}

    def test_edge_midpoint(self):
        e = SpineEdge(SpineVertex(I, (0, 1, 0)), SpineVertex(II, (1, 1, 0)), 1)
        c = realize(StarParams(3, 2), SpinePoint(edge=e, s=0.5))
        assert set(c) == {StarPoint(1, 0.25), StarPoint(2, 0.75)}

    def test_edge_parameter_is_twice_center_distance(self):
        p = StarParams(4, 4)
        g = build_spine(p)
        rng = np.random.default_rng(1)
        for _ in range(200):
            e = g.edges[rng.integers(len(g.edges))]
            s = float(rng.uniform(0.01, 0.99))
            c = realize(p, SpinePoint(edge=e, s=s))
            assert abs(2 * min(x.dist for x in c) - s) <= EPS

    def test_edge_endpoints_are_vertices(self):
        p = StarParams(4, 3)
        g = build_spine(p)
        for e in g.edges:
            assert realize(p, SpinePoint.on_edge(e, 0.0)) == realize(p, SpinePoint(vertex=e.c0))
            c1 = realize(p, SpinePoint(vertex=e.c1))
            near = realize(p, SpinePoint(edge=e, s=1 - 1e-7))
            assert hausdorff_distance(c1, near) < 1e-6

    @pytest.mark.parametrize("n,k", [(2, 5), (3, 4), (5, 3), (6, 2)])
    def test_realizations_regular_and_within_arm(self, n, k):
        p = StarParams(n, k)
        g = build_spine(p)
        for v in g.vertices:
            c = realize(p, SpinePoint(vertex=v))
            assert is_regular(c)[0]
            assert max(x.dist for x in c) <= p.kappa
        for e in g.edges:
            c = realize(p, SpinePoint(edge=e, s=0.37))
            assert is_regular(c)[0]
            assert max(x.dist for x in c) <= p.kappa

    def test_bad_edge(self):
        with pytest.raises(SpineError):
            SpineEdge(SpineVertex(I, (1, 0, 0)), SpineVertex(II, (1, 1, 0)), 1)


class TestSnap:
    def test_vertex_round_trip(self):
        p = StarParams(4, 3)
        g = build_spine(p)
        for v in g.vertices:
            assert snap(p, realize(p, SpinePoint(vertex=v))) == SpinePoint(vertex=v)

    def test_edge_point(self):
        p = StarParams(3, 3)
        sp = snap(p, conf(3, 3, (1, 0.25), (2, 0.75), (2, 1.75)))
        assert sp.edge.slide_arm == 1
        assert sp.edge.c1.arms == (1, 2, 0)
        assert sp.s == pytest.approx(0.5)

    def test_one_arm_rejected(self):
        with pytest.raises(NotRegularError, match="two arms"):
            snap(StarParams(3, 2), conf(3, 2, (1, 0.5), (1, 1.0)))

    def test_chain_violation_rejected(self):
        with pytest.raises(NotRegularError, match="chain"):
            snap(StarParams(3, 2), conf(3, 2, (1, 0.3), (2, 0.3)))

    def test_round_trips(self):
        p = StarParams(5, 4)
        g = build_spine(p)
        rng = np.random.default_rng(2)
        for _ in range(300):
            e = g.edges[rng.integers(len(g.edges))]
            sp = SpinePoint.on_edge(e, float(rng.uniform(0, 1)))
            c = realize(p, sp)
            back = snap(p, c)
            assert back.vertex == sp.vertex and back.edge == sp.edge
            if sp.edge is not None:
                assert abs(back.s - sp.s) <= EPS
            assert hausdorff_distance(realize(p, back), c) <= EPS


class TestExport:
    def test_dot(self):
        text = to_dot(build_spine(StarParams(3, 2)))
        assert text.count("style=filled") == 3
        assert text.count("style=solid") == 3
        assert text.count(" -- ") == 6
        assert 'label="I:1,0,0"' in text and 'label="II:1,1,0"' in text

    def test_json(self):
        g = build_spine(StarParams(3, 2))
        doc = json.loads(json.dumps(graph_to_dict(g)))
        assert doc["schema"] == "spinecalc/1"
        assert (doc["n"], doc["k"]) == (3, 2)
        assert doc["vertices"][0] == {"kind": "I", "arms": [0, 0, 1]}
        assert len(doc["edges"]) == 6
        e = doc["edges"][0]
        assert doc["vertices"][e["c0"]]["kind"] == "I"
        c0, c1 = doc["vertices"][e["c0"]]["arms"], doc["vertices"][e["c1"]]["arms"]
        assert c1[e["slide_arm"] - 1] == c0[e["slide_arm"] - 1] + 1
