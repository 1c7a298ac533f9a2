"""tapsp graph file format.

Plain text: the first line holds V, then V rows of V whitespace separated
weights. ``inf`` marks a missing edge, lines starting with ``#`` and blank
lines are ignored. Finite values are written with ``repr`` so reading a
written file gives back the same floats bit for bit.
"""
import math

import numpy as np
from cement.utils.misc import minimal_logger

from tapsp.core.engines import Graph
from tapsp.core.exc import TAMalformedInputError
from tapsp.core.variables import TAVar

LOG = minimal_logger(__name__)


def _content_lines(stream):
    """(line number, text) of lines that carry data"""
    number = 0
    lines = iter(stream)
    while True:
        try:
            line = next(lines)
        except StopIteration:
            return
        except UnicodeDecodeError as e:
            # raised per decoded block, the bad byte is at or after this line
            raise TAMalformedInputError(
                "not UTF-8 text: {0}".format(e.reason), number + 1)
        number += 1
        text = line.rstrip('\r\n')
        try:
            text.encode('utf-8')
        except UnicodeEncodeError as e:
            # undecodable bytes kept as surrogates by surrogateescape
            raise TAMalformedInputError("not UTF-8 text", number, e.start + 1)
        stripped = text.strip()
        if not stripped or stripped.startswith(TAVar.ta_comment_prefix):
            continue
        yield number, text


def _tokens(text):
    """(column, token) pairs, columns are 1-based"""
    column = 0
    for token in text.split():
        column = text.index(token, column)
        yield column + 1, token
        column += len(token)


class TAGraphIO():
    """Read and write weight matrices"""

    @staticmethod
    def parse_value(token, line, column):
        if token == TAVar.ta_inf_token:
            return math.inf
        try:
            value = float(token)
        except ValueError:
            raise TAMalformedInputError(
                "not a number: {0!r}".format(token), line, column)
        if not math.isfinite(value):
            raise TAMalformedInputError(
                "only finite numbers or {0!r} are allowed, got {1!r}"
                .format(TAVar.ta_inf_token, token), line, column)
        return value

    @staticmethod
    def parse_graph(stream):
        """Graph from a text stream, diagonal forced to 0"""
        lines = _content_lines(stream)
        try:
            number, text = next(lines)
        except StopIteration:
            raise TAMalformedInputError("empty graph file", 1)
        header = list(_tokens(text))
        if len(header) != 1:
            raise TAMalformedInputError(
                "first line must hold only the vertex count", number)
        column, token = header[0]
        try:
            v = int(token)
        except ValueError:
            raise TAMalformedInputError(
                "vertex count is not an integer: {0!r}".format(token),
                number, column)
        if v < 1:
            raise TAMalformedInputError(
                "vertex count must be positive, got {0}".format(v),
                number, column)

        # rows are collected before allocating, a header alone never sizes
        # the matrix
        rows = []
        last = number
        for row in range(v):
            try:
                number, text = next(lines)
            except StopIteration:
                raise TAMalformedInputError(
                    "expected {0} rows, found {1}".format(v, row), last + 1)
            last = number
            tokens = list(_tokens(text))
            if len(tokens) != v:
                raise TAMalformedInputError(
                    "expected {0} values, found {1}".format(v, len(tokens)),
                    number)
            rows.append([TAGraphIO.parse_value(token, number, column)
                         for column, token in tokens])
        for number, text in lines:
            raise TAMalformedInputError(
                "unexpected data after {0} rows".format(v), number)
        LOG.debug("parsed graph with %d vertices" % v)
        return Graph(np.array(rows, dtype=np.float64))

    @staticmethod
    def read_graph(path):
        with open(path, encoding='utf-8', errors='surrogateescape',
                  mode='r') as stream:
            return TAGraphIO.parse_graph(stream)

    @staticmethod
    def format_value(value):
        if value == math.inf:
            return TAVar.ta_inf_token
        return repr(float(value))

    @staticmethod
    def write_matrix(matrix, stream):
        matrix = np.asarray(matrix)
        stream.write("{0}\n".format(matrix.shape[0]))
        for row in matrix:
            stream.write(" ".join(TAGraphIO.format_value(value)
                                  for value in row))
            stream.write("\n")

    @staticmethod
    def write_graph(graph, stream):
        TAGraphIO.write_matrix(graph.weights, stream)

    @staticmethod
    def write_distances(distances, stream):
        TAGraphIO.write_matrix(distances.entries, stream)
