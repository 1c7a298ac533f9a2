"""Analyze Plugin for tapsp"""
import sys

from cement.core.controller import CementBaseController, expose

from tapsp.cli.plugins.bench_functions import (analyze, config_value,
                                               parse_int_list)
from tapsp.core.fileutils import TAFileUtils
from tapsp.core.logging import Log
from tapsp.core.records import TARecordWriter


def ta_analyze_hook(app):
    pass


class TAAnalyzeController(CementBaseController):
    class Meta:
        label = 'analyze'
        stacked_on = 'base'
        stacked_type = 'nested'
        description = ('Tabulate the exact expected crossing rank E(M) and '
                       'its sqrt(V) bound')
        arguments = [
            (['--v-list'],
                dict(help='Comma separated values of V', dest='v_list',
                     default=None)),
            (['--monte-carlo'],
                dict(help='Also estimate E(M) from this many random '
                     'permutations', dest='monte_carlo', type=int,
                     default=None)),
            (['--seed'],
                dict(help='Base seed', dest='seed', type=int,
                     default=None)),
            (['--csv'],
                dict(help='CSV file, - for standard output', dest='csv',
                     default='-')),
        ]
        usage = "tapsp analyze --v-list 100,1000 [options]"

    @expose(hide=True)
    def default(self):
        pargs = self.app.pargs
        v_list = parse_int_list(
            pargs.v_list or config_value(self, 'analyze', 'v_list',
                                         '2,10,100,1000,10000,100000'),
            '--v-list')
        seed = pargs.seed
        if seed is None:
            seed = config_value(self, 'analyze', 'seed',
                                self.app.config.get('tapsp', 'seed'), int)

        if pargs.monte_carlo:
            Log.info(self, "Sampling {0} permutations per V"
                     .format(pargs.monte_carlo))
        records = analyze(v_list, pargs.monte_carlo, seed=seed)

        with TAFileUtils.open_output(self, pargs.csv) as stream:
            TARecordWriter(stream).write_all(records)

        data = dict(command='analyze', rows=len(records), csv=pargs.csv,
                    records=[dict(v=r.v, algorithm=r.algorithm,
                                  mean_iterations="{0:.4f}".format(
                                      r.mean_iterations),
                                  upper_bound="{0:.4f}".format(
                                      r.upper_bound))
                             for r in records])
        self.app.render((data), 'bench.mustache', out=sys.stderr)


def load(app):
    # register the plugin class.. this only happens if the plugin is enabled
    app.handler.register(TAAnalyzeController)
    # register a hook (function) to run after arguments are parsed.
    app.hook.register('post_argument_parsing', ta_analyze_hook)
