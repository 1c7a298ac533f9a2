"""Generate Plugin for tapsp"""
import sys

from cement.core.controller import CementBaseController, expose

from tapsp.core.exc import TAArgumentError
from tapsp.core.fileutils import TAFileUtils
from tapsp.core.generators import GenSpec, TAGenerator
from tapsp.core.graphio import TAGraphIO
from tapsp.core.logging import Log

GRAPH_KINDS = ('uniform-graph', 'sparse-graph', 'reweighted-graph')


def ta_generate_hook(app):
    pass


class TAGenerateController(CementBaseController):
    class Meta:
        label = 'generate'
        stacked_on = 'base'
        stacked_type = 'nested'
        description = 'Write a seeded random graph file'
        arguments = [
            (['--kind'],
                dict(help='Graph model', dest='kind', choices=GRAPH_KINDS,
                     default='uniform-graph')),
            (['--v'],
                dict(help='Number of vertices', dest='v', type=int,
                     default=None)),
            (['--density'],
                dict(help='Edge probability of sparse graphs',
                     dest='density', type=float, default=1.0)),
            (['--low'],
                dict(help='Lower weight bound of uniform graphs, negative '
                     'for negative edges', dest='low', type=float,
                     default=0.0)),
            (['--shift'],
                dict(help='Potential range of reweighted graphs',
                     dest='shift', type=float, default=0.5)),
            (['--seed'],
                dict(help='Seed', dest='seed', type=int, default=0)),
            (['--output'],
                dict(help='Graph file, - for standard output',
                     dest='output', default='-')),
        ]
        usage = "tapsp generate --v 64 [options]"

    @expose(hide=True)
    def default(self):
        pargs = self.app.pargs
        if pargs.v is None:
            raise TAArgumentError("generate needs --v")
        if pargs.kind == 'reweighted-graph':
            TAGenerator.check_v(pargs.v)
            TAGenerator.check_seed(pargs.seed)
            graph = TAGenerator.gen_reweighted_graph(pargs.v, pargs.seed,
                                                     shift=pargs.shift)
        else:
            graph = GenSpec(kind=pargs.kind, v=pargs.v,
                            density=pargs.density, seed=pargs.seed,
                            low=pargs.low).generate()
        Log.debug(self, "Generated {0} with V={1}"
                  .format(pargs.kind, pargs.v))

        with TAFileUtils.open_output(self, pargs.output) as stream:
            TAGraphIO.write_graph(graph, stream)

        data = dict(kind=pargs.kind, v=pargs.v, seed=pargs.seed,
                    output=pargs.output)
        self.app.render((data), 'generate.mustache', out=sys.stderr)


def load(app):
    # register the plugin class.. this only happens if the plugin is enabled
    app.handler.register(TAGenerateController)
    # register a hook (function) to run after arguments are parsed.
    app.hook.register('post_argument_parsing', ta_generate_hook)
