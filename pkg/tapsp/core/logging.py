"""tapsp log module"""
import sys


class Log:
    """
        Coloured terminal messages for the command plugins, mirrored to
        the application log. Terminal output goes to stderr, stdout is
        kept for matrices and CSV.
    """
    OKBLUE = '\033[94m'
    OKGREEN = '\033[92m'
    WARNING = '\033[93m'
    FAIL = '\033[91m'
    ENDC = '\033[0m'

    def info(self, msg, end='\n', log=True):
        """
        Progress note
        """
        print(Log.OKBLUE + msg + Log.ENDC, end=end, file=sys.stderr)
        if log:
            self.app.log.info(msg)

    def warn(self, msg):
        print(Log.WARNING + msg + Log.ENDC, file=sys.stderr)
        self.app.log.warning(msg)

    def debug(self, msg):
        """
        Log file only, shown on the terminal with --debug
        """
        self.app.log.debug(msg, __name__)

    @staticmethod
    def _step(msg, status):
        return (Log.OKBLUE + "{0:31}".format(msg[0:31]) + " [" + Log.ENDC +
                status + Log.OKBLUE + "]" + Log.ENDC)

    def wait(self, msg, end='\r', log=True):
        """
        Start of a long step, overwritten by valide or failed
        """
        print(Log._step(msg, ".."), end=end, file=sys.stderr)
        if log:
            self.app.log.info(msg)

    def valide(self, msg, end='\n', log=True):
        print(Log._step(msg, Log.OKGREEN + "OK" + Log.ENDC), end=end,
              file=sys.stderr)
        if log:
            self.app.log.info(msg)

    def failed(self, msg, end='\n', log=True):
        print(Log._step(msg, Log.FAIL + "KO" + Log.ENDC), end=end,
              file=sys.stderr)
        if log:
            self.app.log.error(msg)
