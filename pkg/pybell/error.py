'''
.. pybell's Exception classes

   Each class carries the exit status returned by the ``bt`` program
   when an exception of that class ends a command.

.. Copyright (c) 2026 the pybell developers
   See the https://opensource.org/licenses/MIT for license details.
'''

EXIT_OK            = 0
EXIT_TARGET_MISSED = 1
EXIT_CONFIG        = 2
EXIT_RESOURCE      = 3
EXIT_NUMERIC       = 4
EXIT_INTERNAL      = 5       # unexpected failures, never a search outcome


class PybellException(Exception):
    """
    Base class for pybell Exceptions.
    """
    exitCode = EXIT_INTERNAL

class InvalidInputError(PybellException):
    """
    A numeric argument is malformed: non-finite entries, wrong dimensions,
    inverted bounds, non-unit state vectors, and so on.
    """
    exitCode = EXIT_CONFIG

class BellMatrixError(InvalidInputError):
    """
    A matrix failed one of the conditions defining the class of Bell matrices.
    The attribute ``code`` identifies which one.
    """
    NON_SQUARE     = 'non-square'
    ENTRY_VALUES   = 'entry-values'
    SUPPORT_COUNT  = 'support-count'
    REDUCIBLE      = 'reducible'
    EVEN_MINUS     = 'even-minus-count'

    def __init__(self, code, detail=''):
        self.code = code
        self.detail = detail

    def __str__(self):
        return "Not a Bell matrix (%s)%s" % (self.code, ': ' + self.detail if self.detail else '')

class UnsupportedError(InvalidInputError):
    """
    The requested computation is defined only for a subset of inputs.
    """
    pass

class FileFormatError(InvalidInputError):
    """
    Indicate a syntax error in a user-managed file.
    """
    def __init__(self, filename, message, lineNum=None, column=None):
        self.filename = filename
        self.message  = message
        self.lineNum  = lineNum
        self.column   = column

    def __str__(self):
        where = self.filename
        if self.lineNum is not None:
            where += ', line %d' % self.lineNum
            if self.column is not None:
                where += ', column %d' % self.column
        return "%s: %s" % (where, self.message)

class RunConfigError(FileFormatError):
    """
    Raised for schema violations in a run configuration file.
    """
    pass

class ConfigFileError(PybellException):
    """
    Raised when an error is found in a configuration file, e.g., ``~/.pybell.cfg``.
    """
    exitCode = EXIT_CONFIG

class CommandlineError(PybellException):
    """
    Command-line arguments were missing or incorrectly specified.
    """
    exitCode = EXIT_CONFIG

class ResourceLimitError(PybellException):
    """
    An enumeration or a Hilbert space would exceed the configured size limit.
    """
    exitCode = EXIT_RESOURCE

class NumericError(PybellException):
    """
    A numerical routine failed or produced a non-finite or inexact result.
    """
    exitCode = EXIT_NUMERIC

class InconsistencyError(NumericError):
    """
    Computed quantities contradict each other, e.g., a cosine larger than one.
    """
    pass

class TargetMissedError(PybellException):
    """
    A search or verification finished but did not reach its target.
    """
    exitCode = EXIT_TARGET_MISSED
