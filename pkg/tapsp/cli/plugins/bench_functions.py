"""Experiment campaigns shared by the bench and analyze plugins"""
import time
from typing import List, Optional, Sequence

from tapsp.core.analysis import TAAnalysis
from tapsp.core.engines import TAEngine
from tapsp.core.exc import TAArgumentError, TAConfigError
from tapsp.core.generators import TAGenerator
from tapsp.core.kernel import TAKernel
from tapsp.core.records import ExperimentRecord
from tapsp.core.variables import TAVar

BENCH_CONSTANTS = {
    'KERNEL_EXPERIMENT': 'kernel-bench',
    'APSP_EXPERIMENT': 'apsp-bench',
    'ANALYZE_EXPERIMENT': 'analyze',
    'SORTED_KERNEL': 'sorted',
    'NAIVE_KERNEL': 'naive',
    'DISTRIBUTIONS': ('uniform', 'gaussian'),
}


def experiment_id(name, **details):
    """Label of a CSV row, e.g. 'apsp-bench, trial=3'"""
    parts = [name] + ["{0}={1}".format(key, value)
                      for key, value in details.items()]
    return ", ".join(parts)


def parse_int_list(text, flag):
    """'64,128,256' -> [64, 128, 256], every value >= 1"""
    try:
        values = [int(item) for item in text.split(',') if item.strip()]
    except (AttributeError, ValueError):
        raise TAArgumentError("{0} expects comma separated integers, got "
                              "{1!r}".format(flag, text))
    if not values or min(values) < 1:
        raise TAArgumentError("{0} expects positive integers, got {1!r}"
                              .format(flag, text))
    return values


def parse_float_list(text, flag, low=-1.0, high=1.0):
    """'-0.9,0,0.9' -> [-0.9, 0.0, 0.9], every value in [low, high]"""
    try:
        values = [float(item) for item in text.split(',') if item.strip()]
    except (AttributeError, ValueError):
        raise TAArgumentError("{0} expects comma separated numbers, got "
                              "{1!r}".format(flag, text))
    if not values or any(not low <= value <= high for value in values):
        raise TAArgumentError("{0} expects values in [{1}, {2}], got {3!r}"
                              .format(flag, low, high, text))
    return values


def parse_algorithms(text):
    algorithms = [item.strip() for item in text.split(',') if item.strip()]
    unknown = [item for item in algorithms if item not in TAVar.ta_algorithms]
    if not algorithms or unknown:
        raise TAArgumentError("--algorithms expects a subset of {0}, got "
                              "{1!r}".format(','.join(TAVar.ta_algorithms),
                                             text))
    return algorithms


def check_count(value, flag, minimum=1):
    if value is None or value < minimum:
        raise TAArgumentError("{0} must be at least {1}, got {2!r}"
                              .format(flag, minimum, value))
    return value


def kernel_distribution(distribution, correlations):
    if distribution is None:
        if any(c != 0 for c in correlations):
            return 'gaussian'
        return 'uniform'
    return distribution


def _kernel_lists(distribution, v, correlation, seed):
    if distribution == 'uniform':
        return TAGenerator.gen_uniform_lists(v, seed)
    return TAGenerator.gen_correlated_lists(v, correlation, seed)


def kernel_bench(v_list: Sequence[int], trials: int,
                 correlations: Sequence[float] = (0.0,),
                 distribution: Optional[str] = None, seed: int = 0,
                 include_naive: bool = False) -> List[ExperimentRecord]:
    """
    Mean sorted-kernel iterations per (V, c) over seeded list pairs.
    Trial t of every (V, c) cell uses the seed (seed, t). Without a
    distribution, a non-zero correlation selects gaussian lists.
    """
    check_count(trials, '--trials')
    distribution = kernel_distribution(distribution, correlations)
    if distribution not in BENCH_CONSTANTS['DISTRIBUTIONS']:
        raise TAArgumentError("--distribution must be uniform or gaussian, "
                              "got {0!r}".format(distribution))
    if distribution == 'uniform' and any(c != 0 for c in correlations):
        raise TAArgumentError("--correlation-list needs "
                              "--distribution gaussian")
    records = []
    for v in v_list:
        exact = TAAnalysis.exact_expected_M(v)
        bound = TAAnalysis.expected_upper_bound(v)
        for correlation in correlations:
            sorted_iterations = 0
            sorted_ns = 0
            naive_ns = 0
            checksum = 0.0
            for trial in range(trials):
                v_a, v_b = _kernel_lists(distribution, v, correlation,
                                         TAGenerator.trial_seed(seed, trial))
                started = time.perf_counter_ns()
                result = TAKernel.select_lists(v_a, v_b)
                sorted_ns += time.perf_counter_ns() - started
                sorted_iterations += result.iterations
                checksum += result.min_value
                if include_naive:
                    started = time.perf_counter_ns()
                    TAKernel.naive_select(v_a, v_b)
                    naive_ns += time.perf_counter_ns() - started
            row_correlation = (correlation if distribution == 'gaussian'
                               else None)
            row_exact = exact if correlation == 0 else None
            records.append(ExperimentRecord(
                experiment_id=experiment_id(
                    BENCH_CONSTANTS['KERNEL_EXPERIMENT'],
                    distribution=distribution, trials=trials),
                v=v, algorithm=BENCH_CONSTANTS['SORTED_KERNEL'], seed=seed,
                correlation=row_correlation,
                mean_iterations=sorted_iterations / trials,
                exact_expectation=row_exact, upper_bound=bound,
                wall_clock_ns=sorted_ns, checksum=checksum))
            if include_naive:
                records.append(ExperimentRecord(
                    experiment_id=experiment_id(
                        BENCH_CONSTANTS['KERNEL_EXPERIMENT'],
                        distribution=distribution, trials=trials),
                    v=v, algorithm=BENCH_CONSTANTS['NAIVE_KERNEL'],
                    seed=seed, correlation=row_correlation,
                    mean_iterations=float(v), exact_expectation=row_exact,
                    upper_bound=bound, wall_clock_ns=naive_ns,
                    checksum=checksum))
    return records


def bench_graph(v, seed, trial, density=1.0):
    graph_seed = TAGenerator.trial_seed(seed, trial)
    if density < 1.0:
        return TAGenerator.gen_sparse_graph(v, density, graph_seed)
    return TAGenerator.gen_uniform_graph(v, graph_seed)


def apsp_bench(v_list: Sequence[int], trials: int,
               algorithms: Sequence[str], seed: int = 0,
               density: float = 1.0) -> List[ExperimentRecord]:
    """
    One row per (V, trial, algorithm). mean_iterations is the mean kernel
    iterations per computed entry over all levels (empty for fw);
    multiply by V^2 and the level count for the total.
    """
    check_count(trials, '--trials')
    TAGenerator.check_density(density)
    records = []
    for v in v_list:
        for trial in range(trials):
            graph = bench_graph(v, seed, trial, density)
            for algorithm in algorithms:
                started = time.perf_counter_ns()
                distances, stats = TAEngine.solve(graph, algorithm)
                elapsed = time.perf_counter_ns() - started
                mean_iterations = None
                if stats:
                    total = stats[0]
                    for level_stats in stats[1:]:
                        total = total.merge(level_stats)
                    mean_iterations = total.mean_iterations
                records.append(ExperimentRecord(
                    experiment_id=experiment_id(
                        BENCH_CONSTANTS['APSP_EXPERIMENT'], trial=trial,
                        density=density),
                    v=v, algorithm=algorithm, seed=seed,
                    mean_iterations=mean_iterations, wall_clock_ns=elapsed,
                    checksum=TAEngine.checksum(distances)))
    return records


def analyze(v_list: Sequence[int], monte_carlo: Optional[int] = None,
            seed: int = 0) -> List[ExperimentRecord]:
    """Exact E(M) and the sqrt bound per V, plus a Monte-Carlo row when
    asked; the Monte-Carlo standard error is carried in experiment_id"""
    if monte_carlo is not None:
        check_count(monte_carlo, '--monte-carlo')
    records = []
    for v in v_list:
        exact = TAAnalysis.exact_expected_M(v)
        bound = TAAnalysis.expected_upper_bound(v)
        records.append(ExperimentRecord(
            experiment_id=BENCH_CONSTANTS['ANALYZE_EXPERIMENT'], v=v,
            algorithm='exact', seed=seed, mean_iterations=exact,
            exact_expectation=exact, upper_bound=bound))
        if monte_carlo:
            started = time.perf_counter_ns()
            mean, stderr = TAAnalysis.monte_carlo_M(v, monte_carlo, seed)
            elapsed = time.perf_counter_ns() - started
            records.append(ExperimentRecord(
                experiment_id=experiment_id(
                    BENCH_CONSTANTS['ANALYZE_EXPERIMENT'],
                    trials=monte_carlo, stderr=repr(stderr)),
                v=v, algorithm='monte-carlo', seed=seed,
                mean_iterations=mean, exact_expectation=exact,
                upper_bound=bound, wall_clock_ns=elapsed))
    return records


def config_value(controller, section, key, fallback, cast=str):
    """Setting from a plugin config section, fallback when unset"""
    config = controller.app.config
    value = fallback
    if config.has_section(section) and key in config.keys(section):
        value = config.get(section, key)
    try:
        return cast(value)
    except (TypeError, ValueError):
        raise TAConfigError("[{0}] {1} = {2!r} is not a valid {3}"
                            .format(section, key, value, cast.__name__))
