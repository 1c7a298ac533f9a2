import numpy as np
import pytest

from tapsp.core.engines import DistanceMatrix, Graph, ProductStats, TAEngine
from tapsp.core.exc import TAInputError, TANegativeCycleError, TATooLargeError
from tapsp.core.generators import TAGenerator
from tapsp.core.variables import TAVar

INF = np.inf
TOLERANCE = TAVar.ta_engine_tolerance


def three_node():
    return Graph([[0, 1, 5], [INF, 0, 2], [INF, INF, 0]])


def level0(entries):
    return DistanceMatrix(entries=np.array(entries, dtype=float), level=0)


def test_graph_forces_zero_diagonal():
    graph = Graph([[7, 1], [2, 3]])
    assert graph.weights.tolist() == [[0, 1], [2, 0]]
    assert graph.v_count == 2


@pytest.mark.parametrize('weights', [
    [[0, np.nan], [1, 0]],
    [[0, -INF], [1, 0]],
    [[0, 1, 2], [1, 0, 2]],
    [],
])
def test_graph_rejects(weights):
    with pytest.raises(TAInputError):
        Graph(weights)


def test_graph_negative_self_loop_is_a_cycle():
    with pytest.raises(TANegativeCycleError) as err:
        Graph([[0, 1], [1, -0.5]])
    assert err.value.vertex == 1


def test_floyd_warshall_three_nodes():
    assert TAEngine.floyd_warshall(three_node()).entries[0, 2] == 3


def test_floyd_warshall_without_edges():
    d = TAEngine.floyd_warshall(Graph(np.full((4, 4), INF))).entries
    assert (np.diagonal(d) == 0).all()
    assert np.isinf(d[~np.eye(4, dtype=bool)]).all()


@pytest.mark.parametrize('solver', [
    TAEngine.floyd_warshall,
    lambda g: TAEngine.apsp_squaring(g, 'naive'),
    lambda g: TAEngine.apsp_squaring(g, 'fast'),
    TAEngine.apsp_oracle,
])
def test_engines_report_negative_cycle(solver):
    with pytest.raises(TANegativeCycleError):
        solver(Graph([[0, -1], [-1, 0]]))


@pytest.mark.parametrize('entries,expected', [
    ([[0, 1], [INF, 0]], [[0, 1], [INF, 0]]),
    ([[0, INF], [INF, 0]], [[0, INF], [INF, 0]]),
    ([[0, 2], [3, 0]], [[0, 2], [3, 0]]),
])
def test_funny_products(entries, expected):
    a = level0(entries)
    for product in (TAEngine.funny_product_naive,
                    TAEngine.funny_product_fast):
        result, stats = product(a, a)
        assert result.entries.tolist() == expected
        assert result.level == 1
        assert stats.entries_computed == 4
        assert stats.total_iterations >= stats.entries_computed


def test_funny_product_fast_matches_naive():
    rng = np.random.default_rng(5)
    a = level0(rng.random((64, 64)))
    b = level0(rng.random((64, 64)))
    fast, fast_stats = TAEngine.funny_product_fast(a, b)
    naive, naive_stats = TAEngine.funny_product_naive(a, b)
    assert np.array_equal(fast.entries, naive.entries)
    assert naive_stats.total_iterations == 64 ** 3
    assert fast_stats.total_iterations < naive_stats.total_iterations


def test_funny_products_identical_on_signed_zeros():
    a = level0(np.array([[-0.0, 1.0], [-0.0, -0.0]]))
    b = level0(np.array([[-0.0, -0.0], [-1.0, -0.0]]))
    fast, _ = TAEngine.funny_product_fast(a, b)
    naive, _ = TAEngine.funny_product_naive(a, b)
    assert fast.entries.tobytes() == naive.entries.tobytes()
    assert not np.signbit(fast.entries).any()


def test_funny_product_infinite_row():
    rng = np.random.default_rng(6)
    entries = rng.random((16, 16))
    entries[3] = INF
    a = level0(entries)
    result, _ = TAEngine.funny_product_fast(a, a)
    assert np.isinf(result.entries[3]).all()
    _, stats = TAEngine.funny_product_fast(level0(np.full((8, 8), INF)),
                                           level0(np.full((8, 8), INF)))
    assert stats.total_iterations == 64
    assert stats.histogram[0] == 64


def test_funny_product_rejects_mismatch():
    with pytest.raises(TAInputError):
        TAEngine.funny_product_naive(level0(np.zeros((2, 2))),
                                     level0(np.zeros((3, 3))))
    with pytest.raises(TAInputError):
        TAEngine.funny_product_fast(
            level0(np.zeros((2, 2))),
            DistanceMatrix(entries=np.zeros((2, 2)), level=1))


@pytest.mark.parametrize('kernel', ['naive', 'fast'])
def test_apsp_squaring_three_nodes(kernel):
    distances, stats = TAEngine.apsp_squaring(three_node(), kernel)
    assert distances.entries[0, 2] == 3
    assert distances.level == 2
    assert len(stats) == TAVar.squaring_levels(3) == 2


def test_apsp_squaring_single_vertex():
    distances, stats = TAEngine.apsp_squaring(Graph([[0]]), 'fast')
    assert distances.entries.tolist() == [[0]]
    assert stats == []


def test_apsp_squaring_rejects_unknown_kernel():
    with pytest.raises(TAInputError):
        TAEngine.apsp_squaring(three_node(), 'quick')


def test_squaring_levels():
    assert [TAVar.squaring_levels(v) for v in (1, 2, 3, 4, 5, 128, 129)] == \
        [0, 1, 2, 2, 3, 7, 8]


def test_apsp_squaring_stops_at_fixed_point():
    graph = Graph(np.ones((16, 16)))
    full, full_stats = TAEngine.apsp_squaring(graph, 'fast')
    early, early_stats = TAEngine.apsp_squaring(graph, 'fast',
                                                stop_at_fixed_point=True)
    assert np.array_equal(full.entries, early.entries)
    assert len(full_stats) == 4
    assert len(early_stats) == 1


def test_oracle_examples():
    assert TAEngine.apsp_oracle(three_node()).entries[0, 2] == 3
    complete = TAEngine.apsp_oracle(Graph(np.ones((4, 4)))).entries
    assert (complete[~np.eye(4, dtype=bool)] == 1).all()
    chain = Graph([[0, 5, INF], [INF, 0, -3], [INF, INF, 0]])
    assert TAEngine.apsp_oracle(chain).entries[0, 2] == 2


def test_oracle_is_limited_to_small_graphs():
    with pytest.raises(TATooLargeError):
        TAEngine.apsp_oracle(Graph(np.zeros((9, 9))))


def test_solve_dispatch():
    for algorithm in TAVar.ta_algorithms:
        distances, stats = TAEngine.solve(three_node(), algorithm)
        assert distances.entries[0, 2] == 3
        assert len(stats) == (0 if algorithm == 'fw' else 2)
    with pytest.raises(TAInputError):
        TAEngine.solve(three_node(), 'dijkstra')


def test_checksum_skips_infinite_entries():
    distances = TAEngine.floyd_warshall(three_node())
    assert TAEngine.checksum(distances) == 0 + 1 + 3 + 0 + 2 + 0


def check_agreement(graph):
    fw = TAEngine.floyd_warshall(graph).entries
    fast, _ = TAEngine.apsp_squaring(graph, 'fast')
    naive, _ = TAEngine.apsp_squaring(graph, 'naive')
    assert np.array_equal(fast.entries, naive.entries)
    assert np.array_equal(np.isinf(fw), np.isinf(fast.entries))
    finite = np.isfinite(fw)
    assert np.abs(fw[finite] - fast.entries[finite]).max() <= TOLERANCE
    if graph.v_count <= TAVar.ta_oracle_max_v:
        oracle = TAEngine.apsp_oracle(graph).entries
        assert np.abs(oracle[finite] - fw[finite]).max() <= TOLERANCE
    return fast.entries


@pytest.mark.parametrize('v', [4, 8, 16])
def test_engines_agree_on_uniform_graphs(v):
    for trial in range(50):
        check_agreement(TAGenerator.gen_uniform_graph(
            v, TAGenerator.trial_seed(v, trial)))


@pytest.mark.parametrize('v', [4, 8])
def test_engines_agree_on_negative_edges(v):
    for trial in range(50):
        graph = TAGenerator.gen_screened_graph(
            v, TAGenerator.trial_seed(v, trial))
        check_agreement(graph)


# screening almost never finds a cycle-free graph from V=16 up
def test_engines_agree_on_reweighted_graphs():
    for trial in range(50):
        graph = TAGenerator.gen_reweighted_graph(
            16, TAGenerator.trial_seed(16, trial))
        assert (graph.weights < 0).any()
        check_agreement(graph)


@pytest.mark.slow
@pytest.mark.parametrize('v', [64, 128])
def test_engines_agree_on_large_graphs(v):
    for trial in range(50):
        seed = TAGenerator.trial_seed(v, trial)
        check_agreement(TAGenerator.gen_uniform_graph(v, seed))
        check_agreement(TAGenerator.gen_reweighted_graph(v, seed))


def test_engines_agree_on_sparse_graphs():
    for trial in range(10):
        graph = TAGenerator.gen_sparse_graph(
            32, 0.05, TAGenerator.trial_seed(1, trial))
        check_agreement(graph)


def test_output_satisfies_triangle_inequality():
    d = check_agreement(TAGenerator.gen_uniform_graph(32, 9))
    rng = np.random.default_rng(9)
    for u, x, v in rng.integers(0, 32, size=(500, 3)):
        assert d[u, v] <= d[u, x] + d[x, v] + TOLERANCE


def test_levels_never_increase():
    graph = TAGenerator.gen_uniform_graph(32, 4)
    previous = DistanceMatrix.from_graph(graph)
    assert (previous.entries <= graph.weights).all()
    for _ in range(TAVar.squaring_levels(32)):
        current, _ = TAEngine.funny_product_fast(previous, previous)
        assert (current.entries <= previous.entries).all()
        previous = current


def test_product_stats():
    stats = ProductStats.from_iterations(np.array([[1, 2], [3, 2000]]),
                                         level=2)
    assert stats.total_iterations == 2006
    assert stats.entries_computed == 4
    assert stats.histogram[:3] == [1, 1, 1]
    assert stats.histogram[-1] == 1
    assert len(stats.histogram) == len(ProductStats.header()) - 4
    merged = stats.merge(ProductStats.from_iterations([4], level=3))
    assert merged.level == 2
    assert merged.total_iterations == 2010
    assert merged.entries_computed == 5
    assert merged.histogram[2] == 2
    assert merged.mean_iterations == 402.0
    assert merged.as_row()[:4] == [2, 2010, 5, '402.0']


@pytest.mark.slow
def test_total_iterations_grow_below_cubic():
    sizes = [64, 128, 256, 512]
    totals = []
    for v in sizes:
        _, stats = TAEngine.apsp_squaring(
            TAGenerator.gen_uniform_graph(v, v), 'fast')
        totals.append(sum(s.total_iterations for s in stats))
    slope = np.polyfit(np.log(sizes), np.log(totals), 1)[0]
    assert slope < 3.0
