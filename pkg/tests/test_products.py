"""Graph operations: vertex-sum, rooted product, corona, lexicographic."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symbreak.errors import InvalidInputError, PreconditionError
from symbreak.graphs import (RootedGraph, asymmetric6, build_graph, complete,
                             cycle, disjoint_union, is_connected,
                             is_isomorphic, path, star)
from symbreak.products import (all_automorphisms_natural, corona, fibers,
                               lexicographic, rooted_product_smooth,
                               vertex_sum, vertex_sum_power)

from conftest import random_graph


def k4_minus_edge():
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


class TestVertexSum:
    def test_bowtie(self):
        g, layout = vertex_sum([RootedGraph(complete(3), 0),
                                RootedGraph(complete(3), 0)])
        assert (g.n, g.m) == (5, 6)
        assert g.degree(0) == 4  # the identified central vertex
        assert layout.special == 0
        assert is_connected(g)

    def test_roots_identified_once(self):
        g, _ = vertex_sum([RootedGraph(path(3), 1),
                           RootedGraph(path(2), 0),
                           RootedGraph(cycle(3), 2)])
        assert g.n == 3 + 2 + 3 - 3 + 1

    def test_power(self):
        g, _ = vertex_sum_power(cycle(4), 0, 3)
        assert g.n == 3 * 3 + 1
        assert g.degree(0) == 6

    def test_layout_maps_factor_vertices(self):
        factors = [RootedGraph(path(3), 0), RootedGraph(path(3), 2)]
        g, layout = vertex_sum(factors)
        for i, f in enumerate(factors):
            for v in range(f.graph.n):
                w = layout.position(i, v)
                assert 0 <= w < g.n
                assert f.graph.degree(v) <= g.degree(w)
            assert layout.position(i, f.root) == 0

    def test_needs_two_factors(self):
        with pytest.raises(InvalidInputError):
            vertex_sum([RootedGraph(path(2), 0)])

    def test_rejects_disconnected_factor(self):
        scattered, _ = disjoint_union([path(2), path(2)])
        with pytest.raises(PreconditionError):
            vertex_sum([RootedGraph(scattered, 0),
                        RootedGraph(path(2), 0)])

    def test_power_validates_t(self):
        with pytest.raises(InvalidInputError):
            vertex_sum_power(cycle(3), 0, 1)


class TestRootedProduct:
    def test_path_times_path_is_longer_path(self):
        # one copy of P3 rooted at an end hangs off each vertex of P2
        g, _ = rooted_product_smooth(path(2), RootedGraph(path(3), 0))
        assert is_isomorphic(g, path(6))
        g, _ = rooted_product_smooth(path(2), RootedGraph(path(2), 0))
        assert is_isomorphic(g, path(4))

    def test_block_structure(self):
        base, h = cycle(4), RootedGraph(path(3), 1)
        g, layout = rooted_product_smooth(base, h)
        assert g.n == base.n * h.graph.n
        assert layout.special == tuple(i * h.graph.n for i in range(base.n))
        # roots inherit base adjacency plus copy adjacency
        r0, r1 = layout.special[0], layout.special[1]
        assert g.has_edge(r0, r1)

    def test_identity_copy(self):
        g, _ = rooted_product_smooth(cycle(5), RootedGraph(complete(1), 0))
        assert is_isomorphic(g, cycle(5))

    def test_rejects_disconnected(self):
        scattered, _ = disjoint_union([path(2), path(2)])
        with pytest.raises(PreconditionError):
            rooted_product_smooth(scattered, RootedGraph(path(2), 0))
        with pytest.raises(PreconditionError):
            rooted_product_smooth(path(2), RootedGraph(scattered, 0))


class TestCorona:
    def test_small_identities(self):
        g, _ = corona(complete(1), complete(2))
        assert is_isomorphic(g, complete(3))
        g, _ = corona(path(2), complete(1))
        assert is_isomorphic(g, path(4))

    def test_shape(self):
        g, layout = corona(cycle(3), path(2))
        assert g.n == 3 * (1 + 2)
        # base triangle first, then copies fully joined to their base vertex
        assert layout.special == (0, 1, 2)
        for i in range(3):
            copy = [layout.position(i, y + 1) for y in range(2)]
            for w in copy:
                assert g.has_edge(i, w)
            assert g.has_edge(copy[0], copy[1])
        # apex vertices of different copies are never adjacent
        assert not g.has_edge(layout.position(0, 1), layout.position(1, 1))

    def test_disconnected_copy_allowed(self):
        scattered, _ = disjoint_union([complete(1), complete(1)])
        g, _ = corona(complete(2), scattered)
        assert g.n == 2 * 3 and is_connected(g)

    def test_empty_factor_rejected(self):
        with pytest.raises(InvalidInputError):
            corona(build_graph(0, []), path(2))


class TestLexicographic:
    def test_k2_lex_k2_is_k4(self):
        g, _ = lexicographic(path(2), complete(2))
        assert g == complete(4)

    def test_identity_factors(self):
        g, _ = lexicographic(complete(1), petersen_like := cycle(5))
        assert is_isomorphic(g, petersen_like)
        g, _ = lexicographic(cycle(5), complete(1))
        assert is_isomorphic(g, cycle(5))

    def test_edge_count(self):
        g, h = path(3), cycle(4)
        prod, _ = lexicographic(g, h)
        assert prod.n == g.n * h.n
        assert prod.m == g.m * h.n * h.n + g.n * h.m

    def test_fiber_layout(self):
        g, h = path(3), path(2)
        prod, layout = lexicographic(g, h)
        for x in range(g.n):
            for y in range(h.n):
                assert layout.position(x, y) == x * h.n + y
        blocks = fibers(g, h)
        assert blocks == ((0, 1), (2, 3), (4, 5))

    def test_adjacency_rule(self):
        g, h = path(2), path(3)
        prod, _ = lexicographic(g, h)
        # cross edges regardless of inner adjacency
        assert prod.has_edge(0, 3) and prod.has_edge(0, 5)
        # inner edges only along h
        assert prod.has_edge(0, 1) and not prod.has_edge(0, 2)

    def test_naturality(self):
        assert not all_automorphisms_natural(path(2), complete(2))
        assert all_automorphisms_natural(path(3), path(3))
        assert all_automorphisms_natural(cycle(5), complete(1))
        assert all_automorphisms_natural(complete(1), cycle(5))
        assert all_automorphisms_natural(asymmetric6(), path(2))


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4), st.integers(1, 3), st.randoms(use_true_random=False))
def test_lexicographic_size_property(ng, nh, rnd):
    g, h = random_graph(rnd, ng), random_graph(rnd, nh)
    prod, _ = lexicographic(g, h)
    assert prod.n == ng * nh
    assert prod.m == g.m * nh * nh + ng * h.m


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 4), st.integers(1, 3), st.randoms(use_true_random=False))
def test_corona_size_property(ng, nh, rnd):
    g, h = random_graph(rnd, ng), random_graph(rnd, nh)
    prod, _ = corona(g, h)
    assert prod.n == ng * (nh + 1)
    assert prod.m == g.m + ng * (h.m + nh)
