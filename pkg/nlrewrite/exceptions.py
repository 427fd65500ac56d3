"""Errors raised by the rewriting engine.

Every error carries a ``typ`` (a short type name) and a human readable ``message``; the CLI turns the
``exit_code`` of an uncaught error into the process exit status.
"""

import six

__all__ = [
    'RewriteError',
    'MorphismError',
    'CategoryMismatchError',
    'PreconditionError',
    'InvalidMatchError',
    'NotRmAdhesiveError',
    'ParseError',
    'SelectionError',
    'TheoremCheckError',
    'make_error',
]


class RewriteError(Exception):
    exit_code = 1

    def __init__(self, typ=None, message=None):
        self.typ = typ or type(self).__name__
        self.message = six.text_type(message) if message is not None else u'no info'
        super(RewriteError, self).__init__(self.message)

    def __str__(self):
        return f'{self.typ}: {self.message}'


class MorphismError(RewriteError):
    pass


class CategoryMismatchError(RewriteError):
    exit_code = 3


class PreconditionError(RewriteError):
    pass


class InvalidMatchError(PreconditionError):
    pass


class NotRmAdhesiveError(PreconditionError):
    pass


class ParseError(RewriteError):
    exit_code = 2

    def __init__(self, typ=None, message=None, line=None):
        if line is not None:
            message = f'line {line}: {message}'
        self.line = line
        super(ParseError, self).__init__(typ, message)


class SelectionError(RewriteError):
    exit_code = 4


class TheoremCheckError(RewriteError):
    exit_code = 5

    def __init__(self, typ=None, message=None, counterexample=None):
        self.counterexample = counterexample
        super(TheoremCheckError, self).__init__(typ, message)


_ERRORS = {cls.__name__: cls for cls in (RewriteError, MorphismError, CategoryMismatchError, PreconditionError,
                                          InvalidMatchError, NotRmAdhesiveError, ParseError, SelectionError,
                                          TheoremCheckError)}


def make_error(typ, message=None, **details):
    """The error of type ``typ`` carrying ``message``; unknown type names give a plain :class:`RewriteError`.

    ``details`` go to the subclass, e.g. ``line`` for :class:`ParseError`.
    """
    cls = _ERRORS.get(typ)
    if cls is None:
        return RewriteError(typ, message)
    return cls(message=message, **details)
