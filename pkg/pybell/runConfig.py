'''
.. Run configuration files for "bt search": a single key/value text file
   per run, parsed with configparser. The section header may be omitted;
   keys are read from the ``[run]`` section and unknown keys are rejected.

   Example::

       weight      = magic3
       dims        = 3 3 3 3
       seed        = 7
       population  = 300
       generations = 3000
       constraint  = none
       target      = 1e-3
       output      = magic.json

.. Copyright (c) 2026 the pybell developers
   See the https://opensource.org/licenses/MIT for license details.
'''
import configparser
import os
import re

from .config import getParam, stringTrue
from .constants import OUTPUT_FORMATS
from .error import RunConfigError, PybellException
from .ga import GaConfig, SearchConstraint, asDims
from .log import getLogger
from .sources import parseWeightSource

_logger = getLogger(__name__)

RUN_SECTION = 'run'

# Keys holding GaConfig settings
_GaKeys = set(GaConfig.__slots__)

_Keys = {'weight', 'dims', 'constraint', 'target', 'threads', 'output', 'format'} | _GaKeys


class RunConfig(object):
    """
    A validated run configuration. Missing GA settings take their values
    from the ``GA.*`` configuration variables.
    """
    def __init__(self, values, filename='<run>', lineNums=None):
        self.filename = filename
        self.values = dict(values)
        self.lineNums = lineNums or {}

        unknown = sorted(set(self.values) - _Keys)
        if unknown:
            key = unknown[0]
            raise RunConfigError(filename, "unknown key '%s'" % key, self.lineNums.get(key))

        if 'weight' not in self.values:
            raise RunConfigError(filename, "missing required key 'weight'")

        baseDir = os.path.dirname(os.path.abspath(filename)) if os.path.isfile(filename) else None

        self.weights = self._convert('weight', lambda s: parseWeightSource(self._resolve(s, baseDir)))

        if 'dims' in self.values:
            self.dims = self._convert('dims', lambda s: asDims(s.replace(',', ' ').split()))
            if (self.dims.Na, self.dims.Nb) != self.weights.shape:
                raise RunConfigError(filename, "dims %s don't match the %dx%d weight matrix"
                                     % (tuple(self.dims), self.weights.rows, self.weights.cols),
                                     self.lineNums.get('dims'))
        else:
            self.dims = asDims(self.weights.shape + (2, 2))

        self.constraint = self._convert('constraint', self._validConstraint, SearchConstraint())

        self.target = self._convert('target', float, None)
        self.threads = self._convert('threads', int, None)
        self.output = self.values.get('output')
        self.format = self.values.get('format') or getParam('Bell.OutputFormat')
        if self.format not in OUTPUT_FORMATS:
            raise RunConfigError(filename, "format must be one of %s, got '%s'" % (OUTPUT_FORMATS, self.format),
                                 self.lineNums.get('format'))

        gaArgs = {}
        for key in _GaKeys & set(self.values):
            kind = GaConfig._Types.get(key, int)
            gaArgs[key] = self._convert(key, stringTrue if kind is bool else kind)
        self.gaConfig = self._convert(None, lambda _: GaConfig(**gaArgs))

    def _validConstraint(self, text):
        constraint = SearchConstraint.parse(text)
        constraint.validate(self.dims)
        return constraint

    @staticmethod
    def _resolve(source, baseDir):
        # relative weight-file paths are relative to the run file
        if baseDir and source.startswith('file:') and not os.path.isabs(source[5:]):
            return 'file:' + os.path.join(baseDir, source[5:])
        return source

    def _convert(self, key, func, default=None):
        if key is not None and key not in self.values:
            return default
        try:
            return func(self.values.get(key))
        except RunConfigError:
            raise
        except (PybellException, ValueError, TypeError) as e:
            label = "'%s': " % key if key else ''
            raise RunConfigError(self.filename, "%s%s" % (label, e), self.lineNums.get(key))

    @property
    def seed(self):
        return self.gaConfig.seed

    def asDict(self):
        """
        The effective configuration, used for the provenance hash.
        """
        d = {'weight': self.weights.entries.tolist(),
             'dims': list(self.dims),
             'constraint': str(self.constraint),
             'ga': self.gaConfig.asDict()}
        if self.target is not None:
            d['target'] = self.target
        return d


_KeyPattern = re.compile(r'^\s*([^=:\s]+)\s*[=:]')

def _keyLines(lines, offset):
    """
    Map each key to the (1-based) line on which it is assigned.
    """
    nums = {}
    for num, line in enumerate(lines, start=1):
        m = _KeyPattern.match(line)
        if m and not line.lstrip().startswith(('#', ';', '[')):
            nums.setdefault(m.group(1), num - offset)
    return nums

def parseRunConfig(text, filename='<run>'):
    """
    Parse the text of a run file.

    :raises RunConfigError: for syntax errors, unknown keys, or invalid values,
        naming the line where possible
    """
    offset = 0
    if not re.search(r'^\s*\[', text, re.MULTILINE):
        text = '[%s]\n' % RUN_SECTION + text
        offset = 1

    parser = configparser.ConfigParser(interpolation=None, strict=True)
    parser.optionxform = str

    try:
        parser.read_string(text, source=filename)
    except configparser.Error as e:
        lineNum = getattr(e, 'lineno', None)
        raise RunConfigError(filename, str(e).splitlines()[0],
                             lineNum - offset if lineNum else None)

    sections = parser.sections()
    if sections != [RUN_SECTION]:
        raise RunConfigError(filename, "expected only a [%s] section, found %s" % (RUN_SECTION, sections))

    values = dict(parser.items(RUN_SECTION))
    return RunConfig(values, filename=filename, lineNums=_keyLines(text.splitlines(), offset))

def readRunConfig(path):
    try:
        with open(path) as f:
            text = f.read()
    except IOError as e:
        raise RunConfigError(path, "can't read run file: %s" % e.strerror)

    _logger.info("reading run file %s", path)
    return parseRunConfig(text, filename=path)
