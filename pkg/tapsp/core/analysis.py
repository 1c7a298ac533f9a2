"""tapsp crossing-rank probability analysis.

M is the crossing rank of a uniformly random permutation p of [0, V): the
smallest m such that some j < m has p[j] < m, i.e. the side of the
smallest top-left square of the permutation grid holding an entry. It is
the iteration count of the sorted argmin kernel on uncorrelated lists.
"""
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np
from cement.utils.misc import minimal_logger
from scipy.special import gammaln

from tapsp.core.exc import TAInputError
from tapsp.core.generators import TAGenerator

LOG = minimal_logger(__name__)


@dataclass
class ProbabilityCurve:
    """Tail P(M > m), E(M) and the sqrt(V) bound for one V"""
    v: int
    tail: dict = field(default_factory=dict)
    expected_m: float = 1.0
    upper_bound: float = 1.0


@lru_cache(maxsize=8)
def _log_factorials(n):
    """log(k!) for k = 0 .. n"""
    table = gammaln(np.arange(n + 1, dtype=np.float64) + 1.0)
    table.setflags(write=False)
    return table


def _table_size(v):
    # shared tables for nearby sizes keep the cache small
    return 1 << max(10, int(v).bit_length())


class TAAnalysis():
    """Exact tail, expectation and bounds of the crossing rank"""

    @staticmethod
    def _check_v(v):
        if int(v) != v or v < 1:
            raise TAInputError("V must be a positive integer, got {0!r}"
                               .format(v))
        return int(v)

    @staticmethod
    def _log_tails(v, m):
        """log P(M > m) for an integer array m with 2m <= v"""
        logf = _log_factorials(_table_size(v))
        return 2.0 * logf[v - m] - logf[v - 2 * m] - logf[v]

    @staticmethod
    def tail_probability(v, m):
        """P(M > m) = (V-m)!^2 / ((V-2m)! V!), 0 once 2m > V"""
        v = TAAnalysis._check_v(v)
        if m < 0:
            raise TAInputError("m must not be negative, got {0!r}".format(m))
        m = int(m)
        if m == 0:
            return 1.0
        if 2 * m > v:
            return 0.0
        return float(np.exp(TAAnalysis._log_tails(v, np.int64(m))))

    @staticmethod
    def tail_probabilities(v):
        """P(M > m) for m = 0 .. floor(V/2)"""
        v = TAAnalysis._check_v(v)
        m = np.arange(v // 2 + 1)
        tails = np.exp(TAAnalysis._log_tails(v, m))
        tails[0] = 1.0
        return tails

    @staticmethod
    def exact_expected_M(v):
        """E(M) as the sum of the tail over m = 0 .. floor(V/2)"""
        return float(TAAnalysis.tail_probabilities(v).sum())

    @staticmethod
    def sampling_tail_no_replacement(v, m, f):
        """prod_{i=0..m} (1 - f / (V - i)), factors clamped at 0"""
        if f < 0:
            raise TAInputError("f must not be negative, got {0!r}".format(f))
        if f == 0:
            return 1.0
        result = 1.0
        for i in range(int(m) + 1):
            remaining = v - i
            if f >= remaining:
                return 0.0
            result *= 1.0 - f / remaining
        return result

    @staticmethod
    def sampling_tail_with_replacement(v, m, f):
        """(1 - f / V) ** m"""
        if not 0 <= f <= v:
            raise TAInputError("f must lie in [0, {0}], got {1!r}"
                               .format(v, f))
        return (1.0 - f / v) ** int(m)

    @staticmethod
    def geometric_upper_bound(v, f):
        """sum over m of (1 - f/V) ** m, i.e. V / f"""
        if f <= 0:
            raise TAInputError("f must be positive, got {0!r}".format(f))
        return v / f

    @staticmethod
    def expected_upper_bound(v):
        """The O(sqrt V) bound, V / f(V) with f(V) = sqrt(V)"""
        v = TAAnalysis._check_v(v)
        return TAAnalysis.geometric_upper_bound(v, math.sqrt(v))

    @staticmethod
    def probability_curve(v):
        v = TAAnalysis._check_v(v)
        tails = TAAnalysis.tail_probabilities(v)
        return ProbabilityCurve(
            v=v, tail={m: float(t) for m, t in enumerate(tails)},
            expected_m=float(tails.sum()),
            upper_bound=TAAnalysis.expected_upper_bound(v))

    @staticmethod
    def crossing_rank(perm):
        """M of one permutation: min over j of max(j, perm[j]), plus one"""
        perm = np.asarray(perm)
        return int(np.maximum(np.arange(perm.size), perm).min()) + 1

    @staticmethod
    def enumerate_M(v):
        """Exact distribution {M: probability} over all V! permutations"""
        v = TAAnalysis._check_v(v)
        if v > 8:
            raise TAInputError("enumeration is limited to V <= 8")
        counts = {}
        for perm in itertools.permutations(range(v)):
            m = min(max(j, p) for j, p in enumerate(perm)) + 1
            counts[m] = counts.get(m, 0) + 1
        total = math.factorial(v)
        return {m: Fraction(c, total) for m, c in sorted(counts.items())}

    @staticmethod
    def monte_carlo_M(v, trials, seed):
        """Mean and standard error of M over seeded random permutations"""
        v = TAAnalysis._check_v(v)
        if trials < 1:
            raise TAInputError("trials must be at least 1, got {0!r}"
                               .format(trials))
        samples = np.array([
            TAAnalysis.crossing_rank(TAGenerator.gen_permutation(
                v, TAGenerator.trial_seed(seed, trial)))
            for trial in range(trials)], dtype=np.float64)
        mean = float(samples.mean())
        stderr = 0.0
        if trials > 1:
            stderr = float(samples.std(ddof=1) / math.sqrt(trials))
        LOG.debug("monte carlo V=%d over %d trials: %.4f +- %.4f"
                  % (v, trials, mean, stderr))
        return mean, stderr
