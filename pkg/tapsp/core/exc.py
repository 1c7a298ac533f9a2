"""tapsp exception classes."""


class TAError(Exception):
    """Generic errors."""

    def __init__(self, msg):
        Exception.__init__(self)
        self.msg = msg

    def __str__(self):
        return self.msg


class TAConfigError(TAError):
    """Config related errors."""
    pass


class TAArgumentError(TAError):
    """Argument related errors."""
    pass


class TAInputError(TAError):
    """Invalid vectors, matrices or sorted indices handed to the library."""
    pass


class TAMalformedInputError(TAError):
    """Graph file that does not follow the text format."""

    def __init__(self, msg, line=None, column=None):
        TAError.__init__(self, msg)
        self.line = line
        self.column = column

    def __str__(self):
        if self.line is None:
            return self.msg
        if self.column is None:
            return "line {0}: {1}".format(self.line, self.msg)
        return "line {0}, column {1}: {2}".format(self.line, self.column,
                                                 self.msg)


class TANegativeCycleError(TAError):
    """A negative cycle makes shortest paths unbounded."""

    def __init__(self, msg, vertex=None):
        TAError.__init__(self, msg)
        self.vertex = vertex


class TATooLargeError(TAError):
    """Problem size above what an exhaustive method accepts."""
    pass
