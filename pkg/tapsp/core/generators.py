"""tapsp seeded instance generators"""
import math
from dataclasses import dataclass

import numpy as np
from cement.utils.misc import minimal_logger

from tapsp.core.engines import Graph, TAEngine
from tapsp.core.exc import TAInputError, TANegativeCycleError
from tapsp.core.variables import TAVar

LOG = minimal_logger(__name__)


@dataclass(frozen=True)
class GenSpec:
    """One generator call: kind, size and the parameters it reads"""
    kind: str
    v: int
    density: float = 1.0
    correlation: float = 0.0
    seed: int = 0
    low: float = 0.0

    def __post_init__(self):
        if self.kind not in TAVar.ta_generator_kinds:
            raise TAInputError("unknown generator kind {0!r}, expected one "
                               "of {1}".format(self.kind, ', '.join(
                                   TAVar.ta_generator_kinds)))
        TAGenerator.check_v(self.v)
        TAGenerator.check_density(self.density)
        TAGenerator.check_correlation(self.correlation)
        TAGenerator.check_seed(self.seed)

    def generate(self):
        if self.kind == 'uniform-graph':
            return TAGenerator.gen_uniform_graph(self.v, self.seed,
                                                 low=self.low)
        if self.kind == 'sparse-graph':
            return TAGenerator.gen_sparse_graph(self.v, self.density,
                                                self.seed)
        if self.kind == 'uniform-lists':
            return TAGenerator.gen_uniform_lists(self.v, self.seed)
        if self.kind == 'gaussian-lists':
            return TAGenerator.gen_correlated_lists(self.v, self.correlation,
                                                    self.seed)
        return TAGenerator.gen_permutation(self.v, self.seed)


class TAGenerator():
    """Random graphs, list pairs and permutations, pure in (args, seed)"""

    @staticmethod
    def check_v(v):
        if int(v) != v or v < 1:
            raise TAInputError("V must be a positive integer, got {0!r}"
                               .format(v))

    @staticmethod
    def check_density(density):
        if not 0.0 < density <= 1.0:
            raise TAInputError("density must lie in (0, 1], got {0!r}"
                               .format(density))

    @staticmethod
    def check_correlation(correlation):
        if not -1.0 <= correlation <= 1.0:
            raise TAInputError("correlation must lie in [-1, 1], got {0!r}"
                               .format(correlation))

    @staticmethod
    def check_seed(seed):
        if int(seed) != seed or seed < 0:
            raise TAInputError("seed must be a non-negative integer, got "
                               "{0!r}".format(seed))

    @staticmethod
    def trial_seed(seed, trial):
        """Seed of one trial, independent of the order trials run in.
        seed may itself be a trial seed."""
        if isinstance(seed, (list, tuple)):
            return [int(s) for s in seed] + [int(trial)]
        return [int(seed), int(trial)]

    @staticmethod
    def rng(seed):
        return np.random.default_rng(seed)

    @staticmethod
    def _graph(weights):
        np.fill_diagonal(weights, 0.0)
        return Graph(weights)

    @staticmethod
    def gen_uniform_graph(v, seed, low=0.0, high=1.0):
        """Dense graph, off-diagonal weights iid uniform in [low, high)"""
        TAGenerator.check_v(v)
        if not low < high:
            raise TAInputError("empty weight range [{0}, {1})"
                               .format(low, high))
        weights = TAGenerator.rng(seed).uniform(low, high, size=(v, v))
        return TAGenerator._graph(weights)

    @staticmethod
    def gen_sparse_graph(v, density, seed):
        """Each off-diagonal edge present with probability density"""
        TAGenerator.check_v(v)
        TAGenerator.check_density(density)
        rng = TAGenerator.rng(seed)
        weights = rng.random((v, v))
        weights[rng.random((v, v)) >= density] = np.inf
        return TAGenerator._graph(weights)

    @staticmethod
    def gen_screened_graph(v, seed, low=-0.1, high=1.0, attempts=None):
        """
        Negative-edge uniform graph, redrawn until Floyd-Warshall finds no
        negative cycle
        """
        attempts = attempts or TAVar.ta_screening_attempts
        for attempt in range(attempts):
            graph = TAGenerator.gen_uniform_graph(
                v, TAGenerator.trial_seed(seed, attempt), low=low, high=high)
            try:
                TAEngine.floyd_warshall(graph)
            except TANegativeCycleError:
                continue
            LOG.debug("screened graph V=%d accepted after %d draws"
                      % (v, attempt + 1))
            return graph
        raise TAInputError("no graph without negative cycle in {0} draws "
                           "(V={1}, weights in [{2}, {3}))"
                           .format(attempts, v, low, high))

    @staticmethod
    def gen_reweighted_graph(v, seed, shift=0.5):
        """
        Uniform [0, 1) graph reweighted by vertex potentials phi in
        [0, shift): w(u, v) + phi(u) - phi(v). Cycle weights do not change,
        so edges turn negative without creating a negative cycle.
        """
        TAGenerator.check_v(v)
        rng = TAGenerator.rng(seed)
        weights = rng.random((v, v))
        phi = rng.random(v) * shift
        weights += phi[:, None] - phi[None, :]
        return TAGenerator._graph(weights)

    @staticmethod
    def gen_uniform_lists(v, seed):
        """2V uniform [0, 1) samples as a list pair"""
        TAGenerator.check_v(v)
        values = TAGenerator.rng(seed).random((2, v))
        return values[0].copy(), values[1].copy()

    @staticmethod
    def gen_correlated_lists(v, correlation, seed):
        """
        V pairs from the standard bivariate normal with correlation c:
        a = z1, b = c z1 + sqrt(1 - c^2) z2
        """
        TAGenerator.check_v(v)
        TAGenerator.check_correlation(correlation)
        z = TAGenerator.rng(seed).standard_normal((2, v))
        v_a = z[0].copy()
        v_b = correlation * z[0] + math.sqrt(1.0 - correlation ** 2) * z[1]
        return v_a, v_b

    @staticmethod
    def gen_permutation(v, seed):
        """Uniform random permutation of range(v)"""
        TAGenerator.check_v(v)
        return TAGenerator.rng(seed).permutation(v)
