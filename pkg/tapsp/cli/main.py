"""tapsp main application entry point."""
import sys

from cement.core.exc import CaughtSignal, FrameworkError
from cement.core.foundation import CementApp
from cement.ext.ext_argparse import ArgParseArgumentHandler
from cement.utils.misc import init_defaults

from tapsp.core import exc

# Application default.  Should update config/tapsp.conf to reflect any
# changes, or additions here.
defaults = init_defaults('tapsp')

# Worker threads for the compiled products, 0 picks the core count.
# APSP_THREADS overrides this.
defaults['tapsp']['threads'] = 0

# Base seed and trial count of the experiment commands
defaults['tapsp']['seed'] = 0
defaults['tapsp']['trials'] = 100

# All internal/external plugin configurations are loaded from here
defaults['tapsp']['plugin_config_dir'] = '/etc/tapsp/plugins.d'

# External plugins (generally, do not ship with application code)
defaults['tapsp']['plugin_dir'] = '/var/lib/tapsp/plugins'

# External templates (generally, do not ship with application code)
defaults['tapsp']['template_dir'] = '/var/lib/tapsp/templates'

# Command plugins shipped with the application
PLUGINS = ['solve', 'kernel_bench', 'apsp_bench', 'analyze', 'generate']

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NEGATIVE_CYCLE = 2

# List flags whose values may start with a minus sign
LIST_FLAGS = ('--correlation-list',)


def join_list_flags(arg_list):
    """
    ['--correlation-list', '-0.9,0'] -> ['--correlation-list=-0.9,0'],
    argparse would read the value as an option
    """
    joined = []
    args = iter(arg_list)
    for arg in args:
        if arg in LIST_FLAGS:
            value = next(args, None)
            if value is not None:
                arg = '{0}={1}'.format(arg, value)
        joined.append(arg)
    return joined


class TAArgHandler(ArgParseArgumentHandler):
    class Meta:
        label = 'ta_args_handler'

    def parse(self, arg_list):
        return super(TAArgHandler, self).parse(join_list_flags(arg_list))

    def error(self, message):
        # usage errors exit 1, argparse would exit 2
        raise exc.TAArgumentError(message)


class TAApp(CementApp):
    class Meta:
        label = 'tapsp'

        config_defaults = defaults

        # All built-in application bootstrapping (always run)
        bootstrap = 'tapsp.cli.bootstrap'

        # Internal plugins (ship with application code)
        plugin_bootstrap = 'tapsp.cli.plugins'
        plugins = PLUGINS

        # Internal templates (ship with application code)
        template_module = 'tapsp.cli.templates'

        extensions = ['mustache', 'argcomplete', 'colorlog']

        output_handler = 'mustache'

        log_handler = 'colorlog'

        argument_handler = TAArgHandler
        exit_on_close = True


class TATestApp(TAApp):
    """A test app that is better suited for testing."""
    class Meta:
        # default argv to empty (don't use sys.argv)
        argv = []

        # don't look for config files (could break tests)
        config_files = []

        # don't call sys.exit() when app.close() is called in tests
        exit_on_close = False


def run(app):
    """Run app, mapping errors to exit codes. Returns the exit code."""
    try:
        app.run()
    except exc.TANegativeCycleError as e:
        print('NegativeCycle > %s' % e, file=sys.stderr)
        app.exit_code = EXIT_NEGATIVE_CYCLE
    except exc.TAMalformedInputError as e:
        print('MalformedInput > %s' % e, file=sys.stderr)
        app.exit_code = EXIT_ERROR
    except exc.TAError as e:
        # Catch our application errors and exit 1 (error)
        print('TAError > %s' % e, file=sys.stderr)
        app.exit_code = EXIT_ERROR
    except CaughtSignal as e:
        # Default Cement signals are SIGINT and SIGTERM, exit 0 (non-error)
        print('CaughtSignal > %s' % e, file=sys.stderr)
        app.exit_code = EXIT_OK
    except FrameworkError as e:
        # Catch framework errors and exit 1 (error)
        print('FrameworkError > %s' % e, file=sys.stderr)
        app.exit_code = EXIT_ERROR
    finally:
        # Maybe we want to see a full-stack trace for the above
        # exceptions, but only if --debug was passed?
        if app.debug:
            import traceback
            traceback.print_exc()
    return app.exit_code


def main():
    with TAApp() as app:
        run(app)


if __name__ == '__main__':
    main()
