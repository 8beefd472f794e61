import pytest
from hypothesis import given, settings

from starcolor.colorings import Coloring
from starcolor.errors import GraphFormatError
from starcolor.generators import cycle_graph, path_graph
from starcolor.hypergraphs import Hypergraph
from starcolor.io import (
    format_coloring,
    format_edge_list,
    format_hypergraph,
    parse_coloring,
    parse_edge_list,
    parse_experiment_config,
    parse_hypergraph,
)

from .conftest import small_graphs


class TestEdgeList:
    def test_round_trip(self):
        g = cycle_graph(5)
        assert parse_edge_list(format_edge_list(g)) == g

    def test_comments_and_blank_lines_ignored(self):
        text = "# a corpus entry\n\np 3\n0 1\n# middle note\n1 2\n"
        assert parse_edge_list(text) == path_graph(3)

    def test_header_comments_survive_formatting(self):
        text = format_edge_list(path_graph(2), comments=("hello", "world"))
        assert text.startswith("# hello\n# world\n")
        assert parse_edge_list(text) == path_graph(2)

    @pytest.mark.parametrize("bad", [
        "",
        "0 1\n",
        "p x\n",
        "p -1\n",
        "p 3\n0 1 2\n",
        "p 3\n0 0\n",
        "p 3\n0 5\n",
        "p 3\n0 1\n1 0\n",
    ])
    def test_rejects_malformed(self, bad):
        with pytest.raises(GraphFormatError):
            parse_edge_list(bad)

    @given(small_graphs())
    @settings(max_examples=60, deadline=None)
    def test_round_trip_property(self, g):
        assert parse_edge_list(format_edge_list(g)) == g


class TestHypergraph:
    def test_round_trip(self):
        h = Hypergraph.build(4, [{0, 1, 2}, {2, 3}])
        assert parse_hypergraph(format_hypergraph(h)) == h

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphFormatError):
            parse_hypergraph("p 2\n0 5\n")


class TestColoring:
    def test_round_trip(self):
        c = Coloring((3, 1, 2))
        assert parse_coloring(format_coloring(c), 3) == c

    def test_rejects_partial_and_duplicates(self):
        with pytest.raises(GraphFormatError):
            parse_coloring("0 1\n", 2)
        with pytest.raises(GraphFormatError):
            parse_coloring("0 1\n0 2\n1 1\n", 2)
        with pytest.raises(GraphFormatError):
            parse_coloring("0 0\n1 1\n", 2)


class TestExperimentConfig:
    def test_top_level_and_runs(self):
        text = """
        # corpus sweep
        csv = out.csv
        seed = 9

        [run]
        generator = gmn
        params = 4,2

        [run]
        generator = path
        params = 6
        mode = exact-star
        """
        top, runs = parse_experiment_config(text)
        assert top == {"csv": "out.csv", "seed": "9"}
        assert len(runs) == 2
        assert runs[0]["generator"] == "gmn"
        assert runs[1]["mode"] == "exact-star"

    def test_rejects_unknown_section_and_bare_lines(self):
        with pytest.raises(GraphFormatError):
            parse_experiment_config("[fleet]\n")
        with pytest.raises(GraphFormatError):
            parse_experiment_config("justakey\n")
