"""tapsp parallelism settings"""
import os

import numba
import psutil
from cement.utils.misc import minimal_logger

from tapsp.core.exc import TAConfigError
from tapsp.core.variables import TAVar

LOG = minimal_logger(__name__)


class TAThreads():
    """Resolve and apply the worker thread cap"""

    @staticmethod
    def default_threads():
        """Physical cores, then logical cores, then 1"""
        count = psutil.cpu_count(logical=False) or psutil.cpu_count()
        return count or 1

    @staticmethod
    def resolve(configured=0, environ=None):
        """
        Thread count to use: APSP_THREADS wins over the configured value,
        0 or an empty setting means automatic.
        """
        environ = os.environ if environ is None else environ
        raw = environ.get(TAVar.ta_threads_env)
        source = TAVar.ta_threads_env
        if raw is None or raw.strip() == '':
            raw = configured
            source = 'threads setting'
        try:
            threads = int(raw)
        except (TypeError, ValueError):
            raise TAConfigError("{0} must be an integer, got {1!r}"
                                .format(source, raw))
        if threads < 0:
            raise TAConfigError("{0} must not be negative, got {1}"
                                .format(source, threads))
        if threads == 0:
            threads = TAThreads.default_threads()
        return threads

    @staticmethod
    def apply(threads):
        """Cap the compiled kernels' thread pool, returns the cap used"""
        threads = max(1, min(int(threads), numba.config.NUMBA_NUM_THREADS))
        numba.set_num_threads(threads)
        LOG.debug("numba thread pool capped at %d" % threads)
        return threads
