"""tapsp file utils core classes."""
import contextlib
import os
import sys

from tapsp.core.exc import TAInputError
from tapsp.core.logging import Log

STDIO_PATH = '-'


class TAFileUtils():
    """Utilities to open data files, '-' meaning stdin/stdout"""

    @contextlib.contextmanager
    def open_input(self, path):
        """Text stream to read from path"""
        if path == STDIO_PATH:
            Log.debug(self, "Reading standard input")
            yield sys.stdin
            return
        try:
            Log.debug(self, "Reading {0}".format(path))
            stream = open(path, encoding='utf-8', errors='surrogateescape',
                          mode='r', newline='')
        except OSError as e:
            Log.debug(self, "{0}{1}".format(e.errno, e.strerror))
            raise TAInputError("Unable to read {0}: {1}"
                               .format(path, e.strerror))
        with stream:
            yield stream

    @contextlib.contextmanager
    def open_output(self, path):
        """Text stream to write to path, parent directories are created"""
        if path == STDIO_PATH:
            yield sys.stdout
            sys.stdout.flush()
            return
        try:
            Log.debug(self, "Writing {0}".format(path))
            parent = os.path.dirname(os.path.abspath(path))
            os.makedirs(parent, exist_ok=True)
            stream = open(path, encoding='utf-8', mode='w', newline='')
        except OSError as e:
            Log.debug(self, "{0}{1}".format(e.errno, e.strerror))
            raise TAInputError("Unable to write {0}: {1}"
                               .format(path, e.strerror))
        with stream:
            yield stream
