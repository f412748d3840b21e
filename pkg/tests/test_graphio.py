import random
from fractions import Fraction
from itertools import combinations

import networkx as nx
import pytest

from paircanon.graphio import (
    ParseError,
    emit_graph6,
    emit_weighted,
    parse_graph6,
    parse_weighted,
)
from paircanon.pairgroup import EdgeVector, pair_index

from oracles import all_simple_vectors, random_rational_weights


# --------------------------------------------------------- weighted: parse


def test_parse_p4():
    text = "n 4\n1 2 1\n2 3 1\n3 4 1\n"
    assert parse_weighted(text).weights == tuple(map(Fraction, (1, 0, 0, 1, 0, 1)))


def test_parse_header_only_is_zero_vector():
    assert parse_weighted("n 4") == EdgeVector.zero(4)


def test_parse_exact_literals():
    x = parse_weighted("n 4\n1 2 1/3\n1 3 0.25\n1 4 -2\n")
    assert x.weights[0] == Fraction(1, 3)
    assert x.weights[1] == Fraction(1, 4)
    assert x.weights[2] == Fraction(-2)


def test_parse_comments_and_blank_lines():
    text = "# graph\n\nn 4   # header\n1 2 1\n  # done\n\n"
    assert parse_weighted(text).weights[0] == 1


@pytest.mark.parametrize(
    "text,line,needle",
    [
        ("n 4\n1 2 1\n1 2 2\n", 3, "duplicate"),
        ("n 4\n2 1 1\n", 2, "i < j"),
        ("n 4\n3 3 1\n", 2, "i < j"),
        ("n 4\n1 5 1\n", 2, "out of range"),
        ("n 4\n1 2 0.1.2\n", 2, "weight"),
        ("n 4\n1 2 1/0\n", 2, "weight"),
        ("n 2\n", 1, "at least 3"),
        ("n x\n", 1, "vertex count"),
        ("4\n1 2 1\n", 1, "header"),
        ("n 4\n1 2\n", 2, "i j w"),
    ],
)
def test_parse_errors_carry_line_numbers(text, line, needle):
    with pytest.raises(ParseError) as err:
        parse_weighted(text)
    assert err.value.line == line
    assert needle in str(err.value)


def test_parse_empty_input():
    with pytest.raises(ParseError):
        parse_weighted("# nothing here\n")


# ---------------------------------------------------------- weighted: emit


def test_emit_zero_vector():
    assert emit_weighted(EdgeVector.zero(4)) == "n 4\n"


def test_emit_p4_edge_order():
    x = EdgeVector(4, (1, 0, 0, 1, 0, 1))
    assert emit_weighted(x) == "n 4\n1 2 1\n2 3 1\n3 4 1\n"


def test_weighted_roundtrip_random():
    rng = random.Random(113)
    for _ in range(200):
        n = rng.randrange(3, 8)
        x = EdgeVector(n, random_rational_weights(rng, n * (n - 1) // 2))
        assert parse_weighted(emit_weighted(x)) == x


def test_parse_then_emit_normalizes():
    messy = "# c\nn 4\n2 3 1  # later pair listed first\n1 2 2/4\n"
    x = parse_weighted(messy)
    assert emit_weighted(x) == "n 4\n1 2 1/2\n2 3 1\n"
    assert parse_weighted(emit_weighted(x)) == x


# ------------------------------------------------------------------ graph6


def nx_graph6(x: EdgeVector) -> str:
    graph = nx.Graph()
    graph.add_nodes_from(range(x.n))
    for (i, j) in combinations(range(1, x.n + 1), 2):
        if x.weight(i, j):
            graph.add_edge(i - 1, j - 1)
    return nx.to_graph6_bytes(graph, header=False).decode().strip()


def test_k4_and_empty_roundtrip():
    k4 = EdgeVector(4, (1,) * 6)
    assert parse_graph6(emit_graph6(k4)) == k4
    empty = EdgeVector.zero(4)
    assert parse_graph6(emit_graph6(empty)) == empty
    assert emit_graph6(k4) == "C~"
    assert emit_graph6(empty) == "C?"


@pytest.mark.parametrize("n", (4, 5))
def test_exhaustive_roundtrip_and_reference_agreement(n):
    for w in all_simple_vectors(n):
        x = EdgeVector(n, w)
        encoded = emit_graph6(x)
        assert encoded == nx_graph6(x)  # independent reference implementation
        assert parse_graph6(encoded) == x


def test_sampled_roundtrip_n6():
    rng = random.Random(127)
    for _ in range(200):
        x = EdgeVector(6, tuple(Fraction(rng.randrange(2)) for _ in range(15)))
        encoded = emit_graph6(x)
        assert encoded == nx_graph6(x)
        assert parse_graph6(encoded) == x


@pytest.mark.parametrize("n", (4, 5, 6))
def test_single_edge_positions_transpose_correctly(n):
    # graph6 packs bits grouped by the larger endpoint; verify every single
    # edge lands on the right bit by locating it independently
    for i, j in combinations(range(1, n + 1), 2):
        m = n * (n - 1) // 2
        weights = [Fraction(0)] * m
        weights[pair_index(i, j, n) - 1] = Fraction(1)
        encoded = emit_graph6(EdgeVector(n, tuple(weights)))
        bitpos = (j - 1) * (j - 2) // 2 + (i - 1)  # rank of (i,j) in column order
        data = [ord(c) - 63 for c in encoded[1:]]
        bits = [(value >> shift) & 1 for value in data for shift in (5, 4, 3, 2, 1, 0)]
        assert bits[bitpos] == 1 and sum(bits) == 1


def test_header_strip():
    x = EdgeVector(4, (1, 0, 0, 1, 0, 1))
    assert parse_graph6(">>graph6<<" + emit_graph6(x)) == x


def test_large_n_size_field():
    x = EdgeVector.zero(63)
    encoded = emit_graph6(x)
    assert encoded.startswith(chr(126))
    assert parse_graph6(encoded) == x
    assert encoded == nx_graph6(x)


def test_emit_rejects_non_simple():
    with pytest.raises(ValueError):
        emit_graph6(EdgeVector(4, ("1/2", 0, 0, 0, 0, 0)))


def test_parse_graph6_malformed():
    with pytest.raises(ParseError):
        parse_graph6("")
    with pytest.raises(ParseError):
        parse_graph6("C")  # length mismatch: n=4 needs one data byte
    with pytest.raises(ParseError):
        parse_graph6("C??")  # too many data bytes
    with pytest.raises(ParseError):
        parse_graph6("C" + chr(20))  # data byte out of range
    with pytest.raises(ParseError):
        parse_graph6("A?")  # n=2 rejected
    with pytest.raises(ParseError):
        parse_graph6("Cü")
    assert parse_graph6("B?") == EdgeVector.zero(3)  # smallest accepted size


def test_parse_graph6_nonzero_padding():
    # n=4 has m=6 so there are no padding bits; n=5 has m=10, 2 padding bits
    good = emit_graph6(EdgeVector.zero(5))
    corrupted = good[:-1] + chr(ord(good[-1]) + 1)  # flips the lowest padding bit
    with pytest.raises(ParseError):
        parse_graph6(corrupted)
