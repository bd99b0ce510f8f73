import io
import random
from itertools import product

import pytest
from hypothesis import given

from quasirandic.constructions import complete, path
from quasirandic.graph import Graph, make_graph, pair_count
from quasirandic.graph6 import Graph6Error, decode, encode, read_file, read_lines, write_lines

from conftest import graphs


@pytest.mark.parametrize("text, G", [
    ("@", make_graph(1, [])),
    ("A_", make_graph(2, [(0, 1)])),
    ("Bw", complete(3)),
    ("Bg", path(3)),
])
def test_known_strings(text, G):
    assert decode(text) == G
    assert encode(G) == text


def test_header_is_accepted():
    assert decode(">>graph6<<Bw") == complete(3)


def test_exhaustive_round_trip_small():
    for n in range(1, 6):
        for mask in range(1 << pair_count(n)):
            G = Graph.from_mask(n, mask)
            assert decode(encode(G)) == G


def test_random_round_trip_up_to_64():
    rng = random.Random(7)
    for n in (10, 20, 62, 63, 64):
        mask = rng.getrandbits(pair_count(n))
        G = Graph.from_mask(n, mask)
        text = encode(G)
        assert (text[0] == "~") == (n >= 63)
        assert decode(text) == G


@given(graphs(max_n=12))
def test_round_trip_property(G):
    assert decode(encode(G)) == G


@pytest.mark.parametrize("text, offset", [
    ("!!", 0),
    ("B!", 1),
    ("C", 1),      # body missing
    ("Bww", 2),    # trailing byte
    ("Bx", 1),     # padding bit set
    ("?", 0),      # order 0
])
def test_errors_carry_offsets(text, offset):
    with pytest.raises(Graph6Error) as info:
        decode(text)
    assert info.value.offset == offset
    assert f"byte {offset}" in str(info.value)


def test_stream_errors_name_the_line():
    with pytest.raises(Graph6Error) as info:
        list(read_lines(["Bw", "", "A_", "B!"]))
    assert info.value.line == 4 and info.value.offset == 1


def test_stream_round_trip():
    gs = [complete(k) for k in range(1, 6)]
    buf = io.StringIO()
    assert write_lines(gs, buf) == 5
    buf.seek(0)
    assert list(read_file(buf)) == gs
