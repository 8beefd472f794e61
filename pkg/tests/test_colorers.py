import random

import pytest
from hypothesis import given, settings

from starcolor.colorers import (
    NotTFreeReport,
    TFreeColoring,
    c_bound,
    color_dfs_levels,
    color_square_greedy,
    color_star_tfree,
)
from starcolor.colorings import is_dist2_coloring, is_star_coloring
from starcolor.errors import ConditionViolated, DomainError
from starcolor.generators import (
    complete_graph,
    cycle_graph,
    gen_gmn,
    gen_random_ffree,
    path_graph,
    spider_graph,
    star_graph,
)
from starcolor.graphs import Graph, contains_subgraph

from .conftest import random_graph, small_graphs


class TestSquareGreedy:
    def test_is_always_a_star_and_dist2_coloring(self):
        for g in (cycle_graph(5), complete_graph(4), star_graph(6), path_graph(9)):
            c = color_square_greedy(g)
            assert is_star_coloring(g, c)
            assert is_dist2_coloring(g, c)
            assert c.palette_size <= g.max_degree ** 2 + 1

    @given(small_graphs())
    @settings(max_examples=80, deadline=None)
    def test_property(self, g):
        c = color_square_greedy(g)
        assert is_star_coloring(g, c)
        assert c.palette_size <= g.max_degree ** 2 + 1

    def test_seeded_random_graphs(self):
        rng = random.Random(7)
        for _ in range(20):
            g = random_graph(rng, 12, 0.3)
            c = color_square_greedy(g)
            assert is_star_coloring(g, c)


class TestDfsLevels:
    def test_path_uses_full_ladder(self):
        c = color_dfs_levels(path_graph(5))
        assert c.colors == (1, 2, 3, 4, 5)
        assert is_star_coloring(path_graph(5), c)

    def test_handles_components_independently(self):
        g = Graph.build(5, [(0, 1), (2, 3), (3, 4)])
        c = color_dfs_levels(g)
        assert is_star_coloring(g, c)
        assert c.colors[0] == 1 and c.colors[2] == 1

    def test_palette_bounded_by_longest_path(self):
        # a star has no path past the center, so levels stop at 2
        c = color_dfs_levels(star_graph(8))
        assert c.palette_size == 2

    @given(small_graphs())
    @settings(max_examples=80, deadline=None)
    def test_always_star_valid(self, g):
        c = color_dfs_levels(g)
        assert is_star_coloring(g, c)


class TestCBound:
    def test_path_and_star_bases(self):
        assert c_bound(path_graph(5)).c_value == 4
        assert c_bound(star_graph(4)).c_value == 10
        assert c_bound(path_graph(2)).c_value == 1

    def test_spider_chain(self):
        lg = c_bound(spider_graph(2, 2, 2))
        assert lg.c_value == 25328
        top = lg.records[0]
        assert (top.t_star_size, top.d, top.q) == (4, 19, 73)
        mid = lg.records[1]
        assert (mid.t_star_size, mid.d, mid.q) == (3, 15, 29)
        assert lg.records[2].kind == "path" and lg.records[2].c_at_level == 4

    def test_records_multiply_out(self):
        lg = c_bound(spider_graph(2, 2, 2))
        inner = lg.records[-1].c_at_level
        for rec in reversed(lg.records[:-1]):
            assert rec.kind == "recurse"
            inner = inner * rec.q + rec.d ** 2 + 1
        assert inner == lg.c_value

    def test_rejects_bad_patterns(self):
        with pytest.raises(ConditionViolated):
            c_bound(cycle_graph(4))
        with pytest.raises(ConditionViolated):
            c_bound(Graph.build(7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6)]))
        with pytest.raises(DomainError):
            c_bound(Graph.build(1, []))


class TestColorStarTfree:
    def test_path_pattern_uses_levels(self):
        g = Graph.build(6, [(0, 1), (1, 2), (3, 4)])
        out = color_star_tfree(g, path_graph(4))
        assert isinstance(out, TFreeColoring)
        assert is_star_coloring(g, out.coloring)
        assert out.coloring.palette_size <= 3

    def test_star_pattern_uses_square_greedy(self):
        g = cycle_graph(7)
        out = color_star_tfree(g, star_graph(4))
        assert isinstance(out, TFreeColoring)
        assert is_star_coloring(g, out.coloring)

    def test_low_degree_graph_with_spider_pattern(self):
        # all degrees below the threshold: the small side swallows everything
        g, _ = gen_gmn(4, 2)
        out = color_star_tfree(g, spider_graph(2, 2, 2))
        assert isinstance(out, TFreeColoring)
        assert is_star_coloring(g, out.coloring)
        assert out.coloring.palette_size <= out.ledger.c_value

    def test_product_step_engages_above_threshold(self):
        # hub degree 2*(m-1)*n = 40 > d = 19 forces a genuine big/small split
        g, _ = gen_gmn(5, 5)
        t = spider_graph(2, 2, 2)
        out = color_star_tfree(g, t)
        if isinstance(out, TFreeColoring):
            assert is_star_coloring(g, out.coloring)
            assert out.coloring.palette_size <= out.ledger.c_value
        else:
            assert out.t_witness is not None
            assert out.t_witness.is_valid(g, t)

    def test_dense_instance_yields_tree_witness(self):
        g, _ = gen_gmn(6, 5)
        t = spider_graph(2, 2, 2)
        out = color_star_tfree(g, t)
        assert isinstance(out, NotTFreeReport)
        assert out.skeleton is not None and out.skeleton_smalls is not None
        assert not out.incomplete and out.t_witness is not None
        assert out.t_witness.is_valid(g, t)

    def test_ffree_random_graphs_color_within_bound(self):
        t = spider_graph(2, 2, 2)
        for seed in range(3):
            g = gen_random_ffree(t, 18, target_edges=40, seed=seed)
            assert contains_subgraph(g, t) is None
            out = color_star_tfree(g, t)
            assert isinstance(out, TFreeColoring)
            assert is_star_coloring(g, out.coloring)
            assert out.coloring.palette_size <= out.ledger.c_value

    @given(small_graphs())
    @settings(max_examples=40, deadline=None)
    def test_success_always_validates(self, g):
        t = spider_graph(2, 2, 2)
        out = color_star_tfree(g, t)
        if isinstance(out, TFreeColoring):
            assert is_star_coloring(g, out.coloring)
            assert out.coloring.palette_size <= out.ledger.c_value
        else:
            # any witness offered must be genuine
            if out.t_witness is not None:
                assert out.t_witness.is_valid(g, t)
