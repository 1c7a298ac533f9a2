"""tapsp core variable module"""


class TAVar():
    """Intialization of core variables"""

    # tapsp version
    ta_version = "1.0.0"

    # Configuration
    ta_config_file = '/etc/tapsp/tapsp.conf'
    ta_plugin_config_dir = '/etc/tapsp/plugins.d'
    ta_threads_env = 'APSP_THREADS'

    # Engines
    ta_algorithms = ('fw', 'naive-dc', 'fast-dc')
    ta_squaring_kernels = {'naive-dc': 'naive', 'fast-dc': 'fast'}
    ta_oracle_max_v = 8
    ta_engine_tolerance = 1e-9

    # Upper edges (inclusive) of the per-entry kernel iteration histogram,
    # last bucket is open ended
    ta_histogram_edges = (1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024)

    # Generators
    ta_generator_kinds = ('uniform-graph', 'sparse-graph', 'uniform-lists',
                          'gaussian-lists', 'permutation')
    ta_screening_attempts = 1000

    # CSV interchange
    ta_csv_header = ('experiment_id', 'v', 'algorithm', 'seed',
                     'correlation', 'mean_iterations', 'exact_expectation',
                     'upper_bound', 'wall_clock_ns', 'checksum')

    # Graph file format
    ta_inf_token = 'inf'
    ta_comment_prefix = '#'

    @staticmethod
    def squaring_levels(v):
        """Number of squarings needed to cover paths of v edges"""
        if v <= 1:
            return 0
        return (v - 1).bit_length()
