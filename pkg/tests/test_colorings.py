import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starcolor.colorings import (
    Coloring,
    HClass,
    Verdict,
    acyclic_violation,
    classify_f,
    classify_h,
    dist2_violation,
    find_bicolored,
    is_acyclic_coloring,
    is_dist2_coloring,
    is_proper,
    is_star_coloring,
    proper_violation,
    star_violation,
)
from starcolor.errors import DisconnectedGraph, DomainError, SizeMismatch
from starcolor.generators import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    gen_gmn,
    path_graph,
    spider_graph,
    star_graph,
)
from starcolor.graphs import Graph

from .conftest import small_graphs
from .oracles import naive_has_bicolored, naive_is_proper


@st.composite
def colored_graphs(draw, max_vertices: int = 7, max_colors: int = 4):
    g = draw(small_graphs(max_vertices=max_vertices))
    colors = tuple(draw(st.integers(1, max_colors)) for _ in range(g.vertex_count))
    return g, Coloring(colors)


class TestProper:
    def test_reports_smallest_bad_edge(self):
        g = path_graph(4)
        c = Coloring((1, 1, 2, 2))
        assert proper_violation(g, c) == (0, 1)

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            is_proper(path_graph(3), Coloring((1, 2)))

    def test_rejects_nonpositive_colors(self):
        with pytest.raises(DomainError):
            Coloring((0, 1))

    @given(colored_graphs())
    @settings(max_examples=100, deadline=None)
    def test_agrees_with_oracle(self, gc):
        g, c = gc
        assert is_proper(g, c) == naive_is_proper(g, c.colors)


class TestStar:
    def test_two_coloring_of_p4_fails(self):
        g = path_graph(4)
        w = star_violation(g, Coloring((1, 2, 1, 2)))
        assert w is not None
        assert w.color_pair == (1, 2)
        assert tuple(w.subgraph.vertex_map[i] for i in range(4)) == (0, 1, 2, 3)

    def test_three_coloring_of_p4_passes(self):
        assert is_star_coloring(path_graph(4), Coloring((1, 2, 3, 1)))

    def test_c4_needs_more_than_alternation(self):
        assert not is_star_coloring(cycle_graph(4), Coloring((1, 2, 1, 2)))
        assert is_star_coloring(cycle_graph(4), Coloring((1, 2, 1, 3)))

    def test_requires_proper(self):
        with pytest.raises(DomainError):
            star_violation(path_graph(2), Coloring((1, 1)))

    @given(colored_graphs())
    @settings(max_examples=80, deadline=None)
    def test_matches_bicolored_path_search(self, gc):
        g, c = gc
        if not is_proper(g, c):
            return
        p4 = path_graph(4)
        direct = star_violation(g, c)
        generic = find_bicolored(g, c, p4)
        assert (direct is None) == (generic is None)
        assert (direct is None) == (not naive_has_bicolored(g, c.colors, p4))


class TestAcyclic:
    def test_alternating_c4_is_bicolored_cycle(self):
        cyc = acyclic_violation(cycle_graph(4), Coloring((1, 2, 1, 2)))
        assert cyc is not None and sorted(cyc) == [0, 1, 2, 3]

    def test_three_colors_on_c4_pass(self):
        assert is_acyclic_coloring(cycle_graph(4), Coloring((1, 2, 1, 3)))

    def test_returned_cycle_is_a_real_bicolored_cycle(self):
        g = Graph.build(6, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)])
        c = Coloring((1, 2, 1, 2, 1, 2))
        cyc = acyclic_violation(g, c)
        assert cyc is not None and len(cyc) >= 4
        assert len({c.colors[v] for v in cyc}) == 2
        for i, v in enumerate(cyc):
            assert g.has_edge(v, cyc[(i + 1) % len(cyc)])

    @given(colored_graphs())
    @settings(max_examples=80, deadline=None)
    def test_witness_cycles_verify(self, gc):
        g, c = gc
        if not is_proper(g, c):
            return
        cyc = acyclic_violation(g, c)
        if cyc is None:
            return
        assert len(cyc) >= 3
        assert len({c.colors[v] for v in cyc}) == 2
        for i, v in enumerate(cyc):
            assert g.has_edge(v, cyc[(i + 1) % len(cyc)])


class TestDist2:
    def test_star_needs_all_distinct(self):
        g = star_graph(3)
        assert dist2_violation(g, Coloring((1, 2, 2, 2))) is not None
        assert is_dist2_coloring(g, Coloring((1, 2, 3, 4)))

    def test_p4_with_three_colors(self):
        assert is_dist2_coloring(path_graph(4), Coloring((1, 2, 3, 1)))
        assert not is_dist2_coloring(path_graph(4), Coloring((1, 2, 1, 3)))


class TestClassifyH:
    def test_cases(self):
        assert classify_h(complete_graph(3)) is HClass.NOT_BIPARTITE
        assert classify_h(star_graph(4)) is HClass.STAR
        assert classify_h(path_graph(4)) is HClass.DEG_TWO_PART
        assert classify_h(cycle_graph(6)) is HClass.DEG_TWO_PART
        assert classify_h(complete_bipartite_graph(3, 3)) is HClass.OTHER_BIPARTITE

    def test_subdivided_k4_is_deg_two_part(self):
        g, _ = gen_gmn(4, 1)
        assert classify_h(g) is HClass.DEG_TWO_PART

    def test_edge_is_a_star(self):
        assert classify_h(path_graph(2)) is HClass.STAR

    def test_rejects_disconnected_or_trivial(self):
        with pytest.raises(DomainError):
            classify_h(Graph.build(1, []))
        with pytest.raises(DisconnectedGraph):
            classify_h(Graph.build(4, [(0, 1)]))


class TestClassifyF:
    def test_deg_two_part_cases(self):
        hc = HClass.DEG_TWO_PART
        assert classify_f(spider_graph(2, 2, 2), hc).verdict is Verdict.BOUNDED
        assert classify_f(path_graph(6), hc).verdict is Verdict.BOUNDED
        bad = Graph.build(7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6)])
        res = classify_f(bad, hc)
        assert res.verdict is Verdict.UNBOUNDED
        assert res.profile is not None and res.profile.failing_pair == (0, 1, 1)
        assert classify_f(cycle_graph(4), hc).verdict is Verdict.UNBOUNDED

    def test_star_pattern_cases(self):
        assert classify_f(star_graph(5), HClass.STAR).verdict is Verdict.BOUNDED
        assert classify_f(path_graph(5), HClass.STAR).verdict is Verdict.UNBOUNDED

    def test_not_bipartite_reduces_to_forest(self):
        assert classify_f(spider_graph(3, 3), HClass.NOT_BIPARTITE).verdict is Verdict.BOUNDED
        assert classify_f(cycle_graph(5), HClass.NOT_BIPARTITE).verdict is Verdict.UNBOUNDED

    def test_other_bipartite_unknown(self):
        assert classify_f(path_graph(4), HClass.OTHER_BIPARTITE).verdict is Verdict.UNKNOWN
