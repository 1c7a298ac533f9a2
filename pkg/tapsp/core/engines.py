"""tapsp all-pairs shortest-path engines"""
from dataclasses import dataclass, field

import numpy as np
from cement.utils.misc import minimal_logger
from numba import njit, prange

from tapsp.core.exc import TAInputError, TANegativeCycleError, TATooLargeError
from tapsp.core.kernel import TAKernel, minplus_select_raw, naive_select_raw
from tapsp.core.variables import TAVar

LOG = minimal_logger(__name__)


class Graph():
    """
    Dense weighted digraph, weights[u, v] = e(u, v) or +inf when there is
    no edge. The diagonal is forced to 0, a negative self-loop is a
    negative cycle on its own.
    """

    def __init__(self, weights):
        try:
            matrix = np.array(weights, dtype=np.float64)
        except (TypeError, ValueError) as e:
            raise TAInputError("graph weights are not numeric: {0}".format(e))
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise TAInputError("graph weights must be a square matrix, "
                               "got shape {0}".format(matrix.shape))
        if matrix.shape[0] < 1:
            raise TAInputError("graph needs at least one vertex")
        if np.isnan(matrix).any():
            raise TAInputError("graph weights contain NaN")
        if np.isneginf(matrix).any():
            raise TAInputError("graph weights contain -inf")
        loops = np.flatnonzero(np.diagonal(matrix) < 0)
        if loops.size:
            raise TANegativeCycleError(
                "negative self-loop on vertex {0}".format(loops[0]),
                vertex=int(loops[0]))
        np.fill_diagonal(matrix, 0.0)
        self.weights = matrix

    @property
    def v_count(self):
        return self.weights.shape[0]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self.weights, other.weights)


@dataclass
class DistanceMatrix:
    """d(u, v) over paths of at most 2**level edges"""
    entries: np.ndarray
    level: int = 0

    @classmethod
    def from_graph(cls, graph):
        return cls(entries=graph.weights.copy(), level=0)

    @property
    def v_count(self):
        return self.entries.shape[0]


@dataclass
class ProductStats:
    """Kernel iteration counts of one funny product"""
    total_iterations: int = 0
    entries_computed: int = 0
    histogram: list = field(
        default_factory=lambda: [0] * (len(TAVar.ta_histogram_edges) + 1))
    level: int = 0

    @classmethod
    def from_iterations(cls, iterations, level=0):
        """Summarise a matrix of per-entry iteration counts"""
        counts = np.asarray(iterations).ravel()
        buckets = np.searchsorted(TAVar.ta_histogram_edges, counts,
                                  side='left')
        histogram = np.bincount(buckets,
                                minlength=len(TAVar.ta_histogram_edges) + 1)
        return cls(total_iterations=int(counts.sum()),
                   entries_computed=int(counts.size),
                   histogram=[int(c) for c in histogram], level=level)

    def merge(self, other):
        """Combined stats, level of the left operand"""
        return ProductStats(
            total_iterations=self.total_iterations + other.total_iterations,
            entries_computed=self.entries_computed + other.entries_computed,
            histogram=[a + b for a, b in zip(self.histogram,
                                             other.histogram)],
            level=self.level)

    @property
    def mean_iterations(self):
        if not self.entries_computed:
            return 0.0
        return self.total_iterations / self.entries_computed

    @staticmethod
    def header():
        labels = ['le_{0}'.format(edge) for edge in TAVar.ta_histogram_edges]
        labels.append('gt_{0}'.format(TAVar.ta_histogram_edges[-1]))
        return ['level', 'total_iterations', 'entries_computed',
                'mean_iterations'] + labels

    def as_row(self):
        return ([self.level, self.total_iterations, self.entries_computed,
                 repr(self.mean_iterations)] + list(self.histogram))


@njit(parallel=True, cache=True)
def _product_naive(a, b_t, out, iterations):
    n = a.shape[0]
    for u in prange(n):
        for v in range(n):
            _, value, count = naive_select_raw(a[u], b_t[v])
            out[u, v] = value
            iterations[u, v] = count


@njit(parallel=True, cache=True)
def _product_sorted(a, b_t, pa, ia, pb, ib, out, iterations):
    n = a.shape[0]
    for u in prange(n):
        for v in range(n):
            _, value, count = minplus_select_raw(a[u], b_t[v], pa[u], ia[u],
                                                 pb[v], ib[v])
            out[u, v] = value
            iterations[u, v] = count


class TAEngine():
    """APSP solvers: Floyd-Warshall, repeated squaring, path enumeration"""

    kernels = ('naive', 'fast')

    @staticmethod
    def _operands(a, b):
        if a.entries.shape != b.entries.shape:
            raise TAInputError("cannot multiply {0} by {1} matrices"
                               .format(a.entries.shape, b.entries.shape))
        if a.level != b.level:
            raise TAInputError("operands are at levels {0} and {1}"
                               .format(a.level, b.level))
        n = a.v_count
        left = np.ascontiguousarray(a.entries, dtype=np.float64)
        # columns of b as contiguous rows
        right = np.ascontiguousarray(b.entries.T, dtype=np.float64)
        out = np.empty((n, n), dtype=np.float64)
        iterations = np.empty((n, n), dtype=np.int64)
        return left, right, out, iterations

    @staticmethod
    def funny_product_naive(a, b):
        """(min, +) product by linear scans"""
        left, right, out, iterations = TAEngine._operands(a, b)
        _product_naive(left, right, out, iterations)
        level = a.level + 1
        return (DistanceMatrix(entries=out, level=level),
                ProductStats.from_iterations(iterations, level=level))

    @staticmethod
    def funny_product_fast(a, b):
        """(min, +) product by the sorted kernel, rows of a and columns of
        b are sorted once per product"""
        left, right, out, iterations = TAEngine._operands(a, b)
        pa, ia = TAKernel.sort_rows(left)
        pb, ib = TAKernel.sort_rows(right)
        _product_sorted(left, right, pa, ia, pb, ib, out, iterations)
        level = a.level + 1
        return (DistanceMatrix(entries=out, level=level),
                ProductStats.from_iterations(iterations, level=level))

    @staticmethod
    def check_negative_cycle(distances):
        """Raise TANegativeCycleError on a negative diagonal entry"""
        vertices = np.flatnonzero(np.diagonal(distances.entries) < 0)
        if vertices.size:
            vertex = int(vertices[0])
            raise TANegativeCycleError(
                "negative cycle through vertex {0} (d({0},{0}) = {1!r})"
                .format(vertex, float(distances.entries[vertex, vertex])),
                vertex=vertex)

    @staticmethod
    def floyd_warshall(graph):
        """Exact distances, k-outer relaxation"""
        d = graph.weights.copy()
        for k in range(graph.v_count):
            np.minimum(d, d[:, k, None] + d[None, k, :], out=d)
        distances = DistanceMatrix(entries=d,
                                   level=TAVar.squaring_levels(graph.v_count))
        TAEngine.check_negative_cycle(distances)
        return distances

    @staticmethod
    def apsp_squaring(graph, kernel='fast', stop_at_fixed_point=False):
        """
        Repeated (min, +) squaring from d(., ., 0) = e(., .).

        Runs ceil(log2 V) levels, fewer when stop_at_fixed_point is set and
        a level leaves the matrix unchanged. Returns the final distances
        and one ProductStats per level run.
        """
        if kernel == 'naive':
            product = TAEngine.funny_product_naive
        elif kernel == 'fast':
            product = TAEngine.funny_product_fast
        else:
            raise TAInputError("unknown squaring kernel {0!r}, expected one "
                               "of {1}".format(kernel, TAEngine.kernels))
        distances = DistanceMatrix.from_graph(graph)
        stats = []
        for _ in range(TAVar.squaring_levels(graph.v_count)):
            squared, level_stats = product(distances, distances)
            stats.append(level_stats)
            LOG.debug("level %d: %d kernel iterations over %d entries"
                      % (squared.level, level_stats.total_iterations,
                         level_stats.entries_computed))
            unchanged = np.array_equal(squared.entries, distances.entries)
            distances = squared
            if stop_at_fixed_point and unchanged:
                LOG.debug("fixed point reached at level %d" % squared.level)
                break
        TAEngine.check_negative_cycle(distances)
        return distances, stats

    @staticmethod
    def apsp_oracle(graph):
        """Exact distances by enumerating every simple path, V <= 8"""
        n = graph.v_count
        if n > TAVar.ta_oracle_max_v:
            raise TATooLargeError("path enumeration is limited to {0} "
                                  "vertices, graph has {1}"
                                  .format(TAVar.ta_oracle_max_v, n))
        weights = graph.weights.tolist()
        best = np.full((n, n), np.inf)
        np.fill_diagonal(best, 0.0)
        for source in range(n):
            stack = [(source, 0.0, 1 << source)]
            while stack:
                node, length, visited = stack.pop()
                for target in range(n):
                    weight = weights[node][target]
                    if target == node or weight == np.inf:
                        continue
                    total = length + weight
                    if target == source:
                        if total < 0:
                            raise TANegativeCycleError(
                                "negative cycle through vertex {0}"
                                .format(source), vertex=source)
                        continue
                    if visited & (1 << target):
                        continue
                    if total < best[source, target]:
                        best[source, target] = total
                    stack.append((target, total, visited | (1 << target)))
        return DistanceMatrix(entries=best,
                              level=TAVar.squaring_levels(n))

    @staticmethod
    def solve(graph, algorithm, stop_at_fixed_point=False):
        """Dispatch on a CLI algorithm id: fw, naive-dc or fast-dc"""
        if algorithm == 'fw':
            return TAEngine.floyd_warshall(graph), []
        if algorithm in TAVar.ta_squaring_kernels:
            return TAEngine.apsp_squaring(
                graph, TAVar.ta_squaring_kernels[algorithm],
                stop_at_fixed_point=stop_at_fixed_point)
        raise TAInputError("unknown algorithm {0!r}, expected one of {1}"
                           .format(algorithm, ', '.join(TAVar.ta_algorithms)))

    @staticmethod
    def checksum(distances):
        """Sum of the finite distances"""
        entries = distances.entries
        return float(entries[np.isfinite(entries)].sum())
