from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from catlin.errors import CapacityError, FormatError, FormatWarning
from catlin.formats import (
    decode_graph6,
    decode_json_graph,
    encode_graph6,
    encode_json_graph,
    parse_dimacs,
    write_dimacs,
)
from catlin.generate import named
from catlin.graph import build_graph

from .oracles import graphs


class TestDecodeGraph6:
    def test_single_vertex(self):
        g = decode_graph6("@")
        assert g.n == 1
        assert g.edge_count == 0

    def test_single_edge(self):
        g = decode_graph6("A_")
        assert g.n == 2
        assert tuple(g.edges()) == ((0, 1),)

    def test_two_isolated_vertices(self):
        g = decode_graph6("A?")
        assert g.n == 2
        assert g.edge_count == 0

    def test_header_and_whitespace_tolerated(self):
        g = decode_graph6(">>graph6<<A_\n")
        assert tuple(g.edges()) == ((0, 1),)

    def test_empty_input(self):
        with pytest.raises(FormatError, match="empty"):
            decode_graph6("")

    def test_non_ascii(self):
        with pytest.raises(FormatError, match="ASCII"):
            decode_graph6("Ä")

    def test_byte_below_range(self):
        with pytest.raises(FormatError, match="range"):
            decode_graph6("A!")

    def test_truncated_body(self):
        with pytest.raises(FormatError, match="data bytes"):
            decode_graph6("B")

    def test_trailing_bytes(self):
        with pytest.raises(FormatError, match="data bytes"):
            decode_graph6("@@")

    def test_truncated_long_count(self):
        with pytest.raises(FormatError, match="truncated"):
            decode_graph6("~?")

    def test_truncated_very_long_count(self):
        with pytest.raises(FormatError, match="truncated"):
            decode_graph6("~~???")


class TestEncodeGraph6:
    def test_single_vertex(self):
        assert encode_graph6(build_graph(1, [])) == "@"

    def test_single_edge(self):
        assert encode_graph6(build_graph(2, [(0, 1)])) == "A_"

    def test_pendant_cycle_round_trip(self):
        g = named("pc5")
        text = encode_graph6(g)
        again = decode_graph6(text)
        assert again.n == g.n and again.adj == g.adj
        assert encode_graph6(again) == text

    def test_four_byte_form(self):
        g = build_graph(63, [(0, 62)])
        text = encode_graph6(g)
        assert text.startswith("~")
        back = decode_graph6(text)
        assert back.n == 63
        assert tuple(back.edges()) == ((0, 62),)

    def test_over_capacity(self):
        with pytest.raises(CapacityError):
            encode_graph6(build_graph(258_048, []))

    @given(graphs(max_n=12))
    @settings(max_examples=80, deadline=None)
    def test_round_trip_identity(self, g):
        back = decode_graph6(encode_graph6(g))
        assert back.n == g.n and back.adj == g.adj

    @given(graphs(max_n=10))
    @settings(max_examples=40, deadline=None)
    def test_agrees_with_networkx_both_ways(self, g):
        mine = encode_graph6(g)
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        theirs = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert mine == theirs
        reread = nx.from_graph6_bytes(mine.encode())
        assert sorted(reread.edges()) == list(g.edges())


class TestDimacs:
    def test_path(self):
        g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3")
        assert g.n == 3
        assert tuple(g.edges()) == ((0, 1), (1, 2))

    def test_comments_ignored(self):
        g = parse_dimacs("c x\np edge 2 1\ne 1 2")
        assert tuple(g.edges()) == ((0, 1),)

    def test_edge_before_problem_line(self):
        with pytest.raises(FormatError, match="line 1"):
            parse_dimacs("e 1 2")

    def test_missing_problem_line(self):
        with pytest.raises(FormatError, match="problem line"):
            parse_dimacs("c nothing else\n")

    def test_second_problem_line(self):
        with pytest.raises(FormatError, match="line 2"):
            parse_dimacs("p edge 2 0\np edge 2 0")

    def test_endpoint_out_of_range(self):
        with pytest.raises(FormatError, match="line 2") as info:
            parse_dimacs("p edge 2 1\ne 1 3")
        assert info.value.line == 2

    def test_loop_rejected(self):
        with pytest.raises(FormatError, match="loop"):
            parse_dimacs("p edge 2 1\ne 1 1")

    def test_malformed_integer(self):
        with pytest.raises(FormatError, match="integer"):
            parse_dimacs("p edge two 0")

    def test_unknown_record(self):
        with pytest.raises(FormatError, match="unrecognized"):
            parse_dimacs("p edge 2 0\nq 1 2")

    def test_count_mismatch_warns(self):
        with pytest.warns(FormatWarning, match="declares 3"):
            g = parse_dimacs("p edge 3 3\ne 1 2")
        assert g.edge_count == 1

    def test_duplicate_and_reversed_edges_collapse(self):
        with pytest.warns(FormatWarning):
            g = parse_dimacs("p edge 2 3\ne 1 2\ne 2 1\ne 1 2")
        assert tuple(g.edges()) == ((0, 1),)

    def test_write_exact(self):
        g = build_graph(3, [(1, 2), (0, 1)])
        assert write_dimacs(g) == "p edge 3 2\ne 1 2\ne 2 3\n"

    @given(graphs(max_n=10))
    @settings(max_examples=40, deadline=None)
    def test_round_trip(self, g):
        back = parse_dimacs(write_dimacs(g))
        assert back.n == g.n and back.adj == g.adj


class TestJsonGraph:
    def test_round_trip_literal(self):
        text = encode_json_graph(named("paw"))
        assert text == '{"n": 4, "edges": [[0, 1], [0, 2], [0, 3], [1, 2]]}'
        back = decode_json_graph(text)
        assert back.adj == named("paw").adj

    def test_edges_key_optional(self):
        g = decode_json_graph('{"n": 2}')
        assert g.n == 2 and g.edge_count == 0

    def test_invalid_json(self):
        with pytest.raises(FormatError, match="invalid JSON"):
            decode_json_graph("{")

    def test_wrong_shape(self):
        with pytest.raises(FormatError):
            decode_json_graph("[1, 2]")
        with pytest.raises(FormatError, match="pairs"):
            decode_json_graph('{"n": 3, "edges": [[0, 1, 2]]}')

    @given(graphs(max_n=10))
    @settings(max_examples=40, deadline=None)
    def test_round_trip(self, g):
        back = decode_json_graph(encode_json_graph(g))
        assert back.n == g.n and back.adj == g.adj
