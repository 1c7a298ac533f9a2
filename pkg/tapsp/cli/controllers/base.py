"""tapsp base controller."""

from cement.core.controller import CementBaseController, expose

from tapsp.core.variables import TAVar

VERSION = TAVar.ta_version

BANNER = """
tapsp v%s
Sorted-kernel min-plus all-pairs shortest paths.
""" % VERSION


class TABaseController(CementBaseController):
    class Meta:
        label = 'base'
        description = ("All-pairs shortest paths with an expected-case "
                       "sub-cubic min-plus product, baselines and "
                       "experiment campaigns")
        arguments = [
            (['-v', '--version'], dict(action='version', version=BANNER)),
        ]

    @expose(hide=True)
    def default(self):
        self.app.args.print_help()
