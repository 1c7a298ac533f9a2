import io
import math

import numpy as np
import pytest

from tapsp.core.engines import DistanceMatrix, TAEngine
from tapsp.core.exc import TAMalformedInputError, TANegativeCycleError
from tapsp.core.generators import TAGenerator
from tapsp.core.graphio import TAGraphIO


def parse(text):
    return TAGraphIO.parse_graph(io.StringIO(text))


def write(graph):
    stream = io.StringIO()
    TAGraphIO.write_graph(graph, stream)
    return stream.getvalue()


def test_parse_graph():
    graph = parse("2\n0 1.5\ninf 0\n")
    assert graph.v_count == 2
    assert graph.weights[0, 1] == 1.5
    assert math.isinf(graph.weights[1, 0])


def test_parse_single_vertex():
    assert parse("1\n0\n").weights.tolist() == [[0.0]]


def test_parse_forces_zero_diagonal():
    assert parse("2\n3 1\n1 4\n").weights.tolist() == [[0, 1], [1, 0]]


def test_parse_skips_comments_and_blank_lines():
    graph = parse("# generated\n\n2\n  # row 0\n0 1\n\n2 0\n# end\n")
    assert graph.weights.tolist() == [[0, 1], [2, 0]]


def test_parse_reads_files(three_node_file):
    assert TAGraphIO.read_graph(three_node_file).weights[0, 2] == 5


@pytest.mark.parametrize('text,line,column', [
    ("", 1, None),
    ("2 2\n0 1\n1 0\n", 1, None),
    ("two\n", 1, 1),
    ("0\n", 1, 1),
    ("2\n0 1\n", 3, None),
    ("2\n0 1 2\n1 0\n", 2, None),
    ("2\n0 x\n1 0\n", 2, 3),
    ("2\n0 1\nnan 0\n", 3, 1),
    ("2\n0 1\n1 -inf\n", 3, 3),
    ("2\n0 1\n1 0\n1 0\n", 4, None),
])
def test_parse_reports_position(text, line, column):
    with pytest.raises(TAMalformedInputError) as err:
        parse(text)
    assert err.value.line == line
    assert err.value.column == column
    assert str(err.value).startswith("line {0}".format(line))


def test_parse_huge_header_reports_missing_rows():
    with pytest.raises(TAMalformedInputError) as err:
        parse("4000000000\n0 1\n")
    assert err.value.line == 2
    assert "expected 4000000000 values" in str(err.value)
    with pytest.raises(TAMalformedInputError) as err:
        parse("4000000000\n")
    assert err.value.line == 2
    assert "found 0" in str(err.value)


def test_parse_rejects_invalid_utf8(tmp_path):
    path = tmp_path / "binary.txt"
    path.write_bytes(b"2\n0 1\n\xff\xfe 0\n")
    with pytest.raises(TAMalformedInputError) as err:
        TAGraphIO.read_graph(str(path))
    assert err.value.line == 3
    assert err.value.column == 1


def test_parse_reports_undecodable_stream():
    stream = io.TextIOWrapper(io.BytesIO(b"2\n0 \xff\n1 0\n"),
                              encoding="utf-8")
    with pytest.raises(TAMalformedInputError) as err:
        TAGraphIO.parse_graph(stream)
    assert err.value.line == 1
    assert str(err.value).startswith("line 1: not UTF-8 text")


def test_parse_negative_self_loop():
    with pytest.raises(TANegativeCycleError):
        parse("2\n-1 1\n1 0\n")


def test_write_format():
    text = write(parse("3\n0 -0.25 inf\n1e-3 0 2\ninf inf 0\n"))
    assert text == "3\n0.0 -0.25 inf\n0.001 0.0 2.0\ninf inf 0.0\n"


def test_write_distances():
    distances = TAEngine.floyd_warshall(parse("2\n0 0.1\n0.2 0\n"))
    stream = io.StringIO()
    TAGraphIO.write_distances(distances, stream)
    assert stream.getvalue() == "2\n0.0 0.1\n0.2 0.0\n"
    assert isinstance(distances, DistanceMatrix)


def test_round_trip_is_exact():
    rng = np.random.default_rng(21)
    for trial in range(100):
        v = int(rng.integers(1, 30))
        graph = TAGenerator.gen_uniform_graph(v, [21, trial], low=-0.3)
        weights = graph.weights.copy()
        weights[rng.random((v, v)) < 0.2] = np.inf
        np.fill_diagonal(weights, 0.0)
        graph.weights = weights
        assert parse(write(graph)) == graph


def test_negative_cycle_file_parses(negative_cycle_file):
    graph = TAGraphIO.read_graph(negative_cycle_file)
    assert graph.weights.tolist() == [[0, -1], [-1, 0]]
    with pytest.raises(TANegativeCycleError):
        TAEngine.floyd_warshall(graph)
