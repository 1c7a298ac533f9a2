"""Solve Plugin for tapsp"""
import csv
import sys
import time

from cement.core.controller import CementBaseController, expose

from tapsp.core.engines import ProductStats, TAEngine
from tapsp.core.exc import TAArgumentError
from tapsp.core.fileutils import TAFileUtils
from tapsp.core.graphio import TAGraphIO
from tapsp.core.logging import Log
from tapsp.core.variables import TAVar


def ta_solve_hook(app):
    pass


class TASolveController(CementBaseController):
    class Meta:
        label = 'solve'
        stacked_on = 'base'
        stacked_type = 'nested'
        description = 'Compute all-pairs shortest paths of a graph file'
        arguments = [
            (['--input'],
                dict(help='Graph file to read, - for standard input',
                     dest='input', default=None)),
            (['--algorithm'],
                dict(help='Solver to use', dest='algorithm',
                     choices=TAVar.ta_algorithms, default='fast-dc')),
            (['--output'],
                dict(help='Distance matrix file, - for standard output',
                     dest='output', default='-')),
            (['--stats'],
                dict(help='CSV file for per-level kernel statistics',
                     dest='stats', default=None)),
            (['--early-stop'],
                dict(help='Stop squaring once a level changes nothing',
                     dest='early_stop', action='store_true')),
        ]
        usage = "tapsp solve --input PATH [options]"

    @expose(hide=True)
    def default(self):
        pargs = self.app.pargs
        if not pargs.input:
            raise TAArgumentError("solve needs --input PATH")

        with TAFileUtils.open_input(self, pargs.input) as stream:
            graph = TAGraphIO.parse_graph(stream)
        Log.debug(self, "Solving V={0} with {1}"
                  .format(graph.v_count, pargs.algorithm))

        started = time.perf_counter_ns()
        distances, stats = TAEngine.solve(
            graph, pargs.algorithm, stop_at_fixed_point=pargs.early_stop)
        elapsed = time.perf_counter_ns() - started

        with TAFileUtils.open_output(self, pargs.output) as stream:
            TAGraphIO.write_distances(distances, stream)
        if pargs.stats:
            if not stats:
                Log.warn(self, "{0} runs no squaring levels, {1} holds only "
                         "the header".format(pargs.algorithm, pargs.stats))
            self.write_stats(pargs.stats, stats)

        data = dict(v=graph.v_count, algorithm=pargs.algorithm,
                    levels=len(stats),
                    iterations=sum(s.total_iterations for s in stats),
                    wall_clock_ms="{0:.3f}".format(elapsed / 1e6),
                    checksum=repr(TAEngine.checksum(distances)),
                    output=pargs.output)
        self.app.render((data), 'solve.mustache', out=sys.stderr)

    def write_stats(self, path, stats):
        """One CSV row of ProductStats per squaring level"""
        with TAFileUtils.open_output(self, path) as stream:
            writer = csv.writer(stream, lineterminator='\n')
            writer.writerow(ProductStats.header())
            for level_stats in stats:
                writer.writerow(level_stats.as_row())


def load(app):
    # register the plugin class.. this only happens if the plugin is enabled
    app.handler.register(TASolveController)
    # register a hook (function) to run after arguments are parsed.
    app.hook.register('post_argument_parsing', ta_solve_hook)
