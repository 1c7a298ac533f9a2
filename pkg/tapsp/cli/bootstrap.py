"""tapsp bootstrapping."""

# All built-in application controllers should be imported, and registered
# in this file in the same way as TABaseController.

from tapsp.cli.controllers.base import TABaseController
from tapsp.core.threads import TAThreads


def ta_threads_hook(app):
    """Cap the compiled kernels' thread pool once arguments are parsed"""
    threads = TAThreads.resolve(app.config.get('tapsp', 'threads'))
    app.log.debug("using %d worker threads" % TAThreads.apply(threads))


def load(app):
    app.handler.register(TABaseController)
    app.hook.register('post_argument_parsing', ta_threads_hook)
