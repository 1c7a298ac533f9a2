"""tapsp min-plus argmin kernels.

Both kernels find ``i`` minimising ``v_a[i] + v_b[i]``. The sorted kernel
walks the two ascending orders in lockstep and stops at the first rank
``m`` where some index has been seen in both rank prefixes: nothing behind
that index in either list can give a smaller sum. The naive kernel reads
all V elements and is the oracle for the sorted one.
"""
from dataclasses import dataclass

import numpy as np
from numba import njit

from tapsp.core.exc import TAInputError


@dataclass(frozen=True)
class SortedIndex:
    """Ascending order of one vector: perm[r] is the rank-r index,
    inv[perm[r]] == r"""
    perm: np.ndarray
    inv: np.ndarray

    def __len__(self):
        return len(self.perm)


@dataclass(frozen=True)
class KernelResult:
    """Outcome of one argmin call, iterations is the crossing rank M"""
    best: int
    min_value: float
    iterations: int


@njit(cache=True, nogil=True)
def minplus_select_raw(va, vb, pa, ia, pb, ib):
    """Sorted early-termination argmin, inputs are not validated.

    Returns (best, min_value, iterations).
    """
    best = pa[0]
    best_value = va[best] + vb[best]
    j = pb[0]
    value = va[j] + vb[j]
    if value < best_value:
        best = j
        best_value = value
    # rank in a of b's smallest, rank in b of a's smallest
    end_a = ia[pb[0]]
    end_b = ib[pa[0]]
    start = 0
    while start < end_a or start < end_b:
        # unseen indices rank behind both frontiers, one infinite
        # frontier makes all of their sums infinite
        if va[pa[start]] == np.inf or vb[pb[start]] == np.inf:
            break
        start += 1

        i = pa[start]
        value = va[i] + vb[i]
        if value < best_value:
            best = i
            best_value = value
        if ib[i] < end_b:
            end_b = ib[i]

        j = pb[start]
        value = va[j] + vb[j]
        if value < best_value:
            best = j
            best_value = value
        if ia[j] < end_a:
            end_a = ia[j]
    # + 0.0 folds -0.0 into 0.0, the naive scan does the same
    return best, best_value + 0.0, start + 1


@njit(cache=True, nogil=True)
def naive_select_raw(va, vb):
    """Linear scan argmin, first index wins ties"""
    best = 0
    best_value = va[0] + vb[0]
    for x in range(1, va.shape[0]):
        value = va[x] + vb[x]
        if value < best_value:
            best = x
            best_value = value
    return best, best_value + 0.0, va.shape[0]


class TAKernel():
    """Validated entry points of the argmin kernels"""

    @staticmethod
    def as_vector(values, name='values'):
        """float64 copy of a weight vector, rejecting NaN and -inf"""
        try:
            vector = np.asarray(values, dtype=np.float64)
        except (TypeError, ValueError) as e:
            raise TAInputError("{0} is not numeric: {1}".format(name, e))
        if vector.ndim != 1:
            raise TAInputError("{0} must be one dimensional, got shape {1}"
                               .format(name, vector.shape))
        if vector.size == 0:
            raise TAInputError("{0} is empty".format(name))
        if np.isnan(vector).any():
            raise TAInputError("{0} contains NaN".format(name))
        if np.isneginf(vector).any():
            raise TAInputError("{0} contains -inf".format(name))
        return np.ascontiguousarray(vector)

    @staticmethod
    def sort_index(values):
        """Stable ascending order of values, +inf ranks last"""
        vector = TAKernel.as_vector(values)
        perm = np.argsort(vector, kind='stable')
        inv = np.empty_like(perm)
        inv[perm] = np.arange(perm.size)
        return SortedIndex(perm=perm, inv=inv)

    @staticmethod
    def sort_rows(matrix):
        """Stable ascending order of every row, as (perm, inv) matrices"""
        perm = np.argsort(matrix, axis=1, kind='stable')
        inv = np.empty_like(perm)
        ranks = np.broadcast_to(np.arange(perm.shape[1]), perm.shape)
        np.put_along_axis(inv, perm, ranks, axis=1)
        return perm, inv

    @staticmethod
    def check_index(values, index, name='sorted index'):
        """Raise TAInputError unless index sorts values"""
        size = values.size
        perm = np.asarray(index.perm)
        inv = np.asarray(index.inv)
        if perm.shape != (size,) or inv.shape != (size,):
            raise TAInputError("{0} has length {1}, vector has {2}"
                               .format(name, perm.size, size))
        if not (np.issubdtype(perm.dtype, np.integer) and
                np.issubdtype(inv.dtype, np.integer)):
            raise TAInputError("{0} must hold integer indices".format(name))
        if perm.min() < 0 or perm.max() >= size:
            raise TAInputError("{0} is not a permutation".format(name))
        if not np.array_equal(inv[perm], np.arange(size)):
            raise TAInputError("{0}: inv is not the inverse of perm"
                               .format(name))
        ordered = values[perm]
        if not (ordered[1:] >= ordered[:-1]).all():
            raise TAInputError("{0} does not sort its vector".format(name))
        return perm.astype(np.int64), inv.astype(np.int64)

    @staticmethod
    def _pair(v_a, v_b):
        va = TAKernel.as_vector(v_a, 'v_a')
        vb = TAKernel.as_vector(v_b, 'v_b')
        if va.size != vb.size:
            raise TAInputError("v_a has length {0}, v_b has length {1}"
                               .format(va.size, vb.size))
        return va, vb

    @staticmethod
    def minplus_select(v_a, v_b, sa, sb):
        """argmin of v_a + v_b by the sorted early-termination scan"""
        va, vb = TAKernel._pair(v_a, v_b)
        pa, ia = TAKernel.check_index(va, sa, 'sa')
        pb, ib = TAKernel.check_index(vb, sb, 'sb')
        best, value, iterations = minplus_select_raw(va, vb, pa, ia, pb, ib)
        return KernelResult(best=int(best), min_value=float(value),
                            iterations=int(iterations))

    @staticmethod
    def naive_select(v_a, v_b):
        """argmin of v_a + v_b by full scan"""
        va, vb = TAKernel._pair(v_a, v_b)
        best, value, iterations = naive_select_raw(va, vb)
        return KernelResult(best=int(best), min_value=float(value),
                            iterations=int(iterations))

    @staticmethod
    def select_lists(v_a, v_b):
        """Sort both lists then run the sorted kernel"""
        return TAKernel.minplus_select(v_a, v_b, TAKernel.sort_index(v_a),
                                       TAKernel.sort_index(v_b))
