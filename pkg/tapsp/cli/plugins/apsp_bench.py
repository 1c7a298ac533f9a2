"""APSP bench Plugin for tapsp"""
import sys

from cement.core.controller import CementBaseController, expose

from tapsp.cli.plugins.bench_functions import (apsp_bench, config_value,
                                               parse_algorithms,
                                               parse_int_list)
from tapsp.core.exc import TAError
from tapsp.core.fileutils import TAFileUtils
from tapsp.core.logging import Log
from tapsp.core.records import TARecordWriter
from tapsp.core.variables import TAVar


def ta_apsp_bench_hook(app):
    pass


class TAApspBenchController(CementBaseController):
    class Meta:
        label = 'apsp-bench'
        stacked_on = 'base'
        stacked_type = 'nested'
        description = ('Time Floyd-Warshall against naive and sorted '
                       'repeated squaring on random dense graphs')
        arguments = [
            (['--v-list'],
                dict(help='Comma separated graph sizes', dest='v_list',
                     default=None)),
            (['--trials'],
                dict(help='Graphs per size', dest='trials', type=int,
                     default=None)),
            (['--algorithms'],
                dict(help='Comma separated subset of fw,naive-dc,fast-dc',
                     dest='algorithms', default=','.join(
                         TAVar.ta_algorithms))),
            (['--density'],
                dict(help='Edge probability, below 1 for sparse graphs',
                     dest='density', type=float, default=1.0)),
            (['--seed'],
                dict(help='Base seed', dest='seed', type=int,
                     default=None)),
            (['--csv'],
                dict(help='CSV file, - for standard output', dest='csv',
                     default='-')),
        ]
        usage = "tapsp apsp-bench --v-list 64,128 [options]"

    @expose(hide=True)
    def default(self):
        pargs = self.app.pargs
        v_list = parse_int_list(
            pargs.v_list or config_value(self, 'apsp_bench', 'v_list',
                                         '16,32,64,128'), '--v-list')
        trials = pargs.trials
        if trials is None:
            trials = config_value(self, 'apsp_bench', 'trials', 10, int)
        seed = pargs.seed
        if seed is None:
            seed = config_value(self, 'apsp_bench', 'seed',
                                self.app.config.get('tapsp', 'seed'), int)
        algorithms = parse_algorithms(pargs.algorithms)

        records = []
        for v in v_list:
            Log.wait(self, "Benchmarking V={0}".format(v))
            try:
                records.extend(apsp_bench([v], trials, algorithms, seed=seed,
                                          density=pargs.density))
            except TAError:
                Log.failed(self, "Benchmarking V={0}".format(v))
                raise
            Log.valide(self, "Benchmarking V={0}".format(v))

        with TAFileUtils.open_output(self, pargs.csv) as stream:
            TARecordWriter(stream).write_all(records)

        data = dict(command='apsp-bench', rows=len(records), csv=pargs.csv,
                    records=[dict(v=r.v, algorithm=r.algorithm,
                                  wall_clock_ms="{0:.3f}".format(
                                      r.wall_clock_ns / 1e6),
                                  checksum=repr(r.checksum))
                             for r in records])
        self.app.render((data), 'bench.mustache', out=sys.stderr)


def load(app):
    # register the plugin class.. this only happens if the plugin is enabled
    app.handler.register(TAApspBenchController)
    # register a hook (function) to run after arguments are parsed.
    app.hook.register('post_argument_parsing', ta_apsp_bench_hook)
