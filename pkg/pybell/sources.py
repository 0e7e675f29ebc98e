'''
.. Parsing of weight-matrix sources: named matrices, generated Bell
   matrices, inline rows, and weight files.

   A weight file is plain text whose first line holds ``N_a N_b``,
   followed by N_a rows of N_b whitespace-separated decimal reals.
   Blank lines and lines starting with '#' are ignored.

.. Copyright (c) 2026 the pybell developers
   See the https://opensource.org/licenses/MIT for license details.
'''
import numpy as np

from .constants import NamedWeights
from .error import InvalidInputError, RunConfigError
from .log import getLogger
from .weights import WeightMatrix, generateBellMatrix

_logger = getLogger(__name__)


def _parseFloat(token, filename, lineNum, column):
    try:
        value = float(token)
    except ValueError:
        raise RunConfigError(filename, "'%s' is not a number" % token, lineNum, column)

    if not np.isfinite(value):
        raise RunConfigError(filename, "'%s' is not finite" % token, lineNum, column)

    return value

def _tokens(line):
    """
    Yield (column, token) pairs for whitespace-separated tokens in `line`,
    with 1-based columns.
    """
    pos = 0
    for token in line.split():
        pos = line.index(token, pos)
        yield pos + 1, token
        pos += len(token)

def parseWeightText(text, filename='<string>'):
    """
    Parse the contents of a weight file.

    :param text: (str) the file contents
    :param filename: (str) name used in error messages
    :return: (WeightMatrix)
    :raises RunConfigError: naming the line and column of the first error
    """
    lines = [(num, line) for num, line in enumerate(text.splitlines(), start=1)
             if line.strip() and not line.lstrip().startswith('#')]

    if not lines:
        raise RunConfigError(filename, "empty weight file")

    lineNum, header = lines[0]
    dims = list(_tokens(header))
    if len(dims) != 2:
        raise RunConfigError(filename, "the first line must hold 'N_a N_b'", lineNum, 1)

    shape = []
    for column, token in dims:
        try:
            shape.append(int(token))
        except ValueError:
            raise RunConfigError(filename, "'%s' is not an integer" % token, lineNum, column)

    Na, Nb = shape
    if Na < 2 or Nb < 2:
        raise RunConfigError(filename, "dimensions must be at least 2, got %d x %d" % (Na, Nb), lineNum, 1)

    rows = lines[1:]
    if len(rows) != Na:
        where = rows[-1][0] if rows else lineNum
        raise RunConfigError(filename, "expected %d rows, found %d" % (Na, len(rows)), where)

    entries = np.empty((Na, Nb))
    for i, (lineNum, line) in enumerate(rows):
        tokens = list(_tokens(line))
        if len(tokens) != Nb:
            column = tokens[Nb][0] if len(tokens) > Nb else len(line) + 1
            raise RunConfigError(filename, "expected %d values, found %d" % (Nb, len(tokens)), lineNum, column)

        for j, (column, token) in enumerate(tokens):
            entries[i, j] = _parseFloat(token, filename, lineNum, column)

    return WeightMatrix(entries)

def readWeightFile(path):
    try:
        with open(path) as f:
            text = f.read()
    except IOError as e:
        raise RunConfigError(path, "can't read weight file: %s" % e.strerror)

    return parseWeightText(text, filename=path)

def formatWeightText(W):
    """
    Return the weight-file form of W, with 17 significant digits.
    """
    lines = ['%d %d' % W.shape]
    lines += [' '.join('%.17g' % value for value in row) for row in W.entries]
    return '\n'.join(lines) + '\n'

def parseInline(text):
    """
    Parse rows separated by ';' with entries separated by ',' or whitespace,
    e.g. "1 1; 1 -1".
    """
    rows = [row.replace(',', ' ').split() for row in text.split(';') if row.strip()]
    if not rows or len({len(row) for row in rows}) != 1:
        raise InvalidInputError("inline weights must have rows of equal length: '%s'" % text)

    try:
        entries = [[float(x) for x in row] for row in rows]
    except ValueError as e:
        raise InvalidInputError("bad inline weights '%s': %s" % (text, e))

    return WeightMatrix(entries)

def _intArgs(name, args, count):
    if len(args) != count:
        raise InvalidInputError("weight source '%s' needs %d integer argument(s)" % (name, count))
    try:
        return [int(a) for a in args]
    except ValueError:
        raise InvalidInputError("weight source '%s' needs integer arguments, got %s" % (name, args))

def parseWeightSource(spec):
    """
    Return the WeightMatrix described by `spec`, which is one of

    * a name: ``chsh``, ``w00``, ``magic3``, ``x3``
    * ``identity:N``
    * ``bell:N:SEED``, a random Bell matrix of dimension N
    * ``inline:ROWS``, rows separated by ';'
    * ``file:PATH``, or any other string naming an existing weight file

    :raises InvalidInputError: if the source can't be interpreted
    """
    spec = spec.strip()
    kind, _sep, rest = spec.partition(':')
    lower = kind.lower()

    if lower in NamedWeights and not rest:
        return WeightMatrix(NamedWeights[lower])

    if lower == 'identity':
        (N,) = _intArgs(kind, rest.split(':'), 1)
        return WeightMatrix(np.eye(N))

    if lower == 'bell':
        N, seed = _intArgs(kind, rest.split(':'), 2)
        return generateBellMatrix(N, seed)

    if lower == 'inline':
        return parseInline(rest)

    if lower == 'file':
        return readWeightFile(rest)

    if ';' in spec:
        return parseInline(spec)

    _logger.debug("treating weight source '%s' as a file path", spec)
    return readWeightFile(spec)

def weightSpecFromArgs(args):
    """
    Return the weight-source string selected by the shared command-line
    options (--chsh, --magic3, --w00, --x3, --bell N, --weight SPEC), or
    None if none was given.
    """
    if getattr(args, 'bell', None) is not None:
        return 'bell:%d:%d' % (args.bell, getattr(args, 'seed', None) or 0)

    for name in NamedWeights:
        if getattr(args, name, False):
            return name

    return getattr(args, 'weight', None)

def weightSourceFromArgs(args):
    spec = weightSpecFromArgs(args)
    if not spec:
        raise InvalidInputError("No weight matrix specified")

    return parseWeightSource(spec)
