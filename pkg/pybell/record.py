'''
.. Result records written by the "bt" sub-commands, with provenance
   (seed, configuration hash, tool version and timestamp).

   JSON records hold everything and can be read back; CSV and markdown
   outputs hold the record's table (or a one-row summary) with reals
   written to 17 significant digits.

.. Copyright (c) 2026 the pybell developers
   See the https://opensource.org/licenses/MIT for license details.
'''
from datetime import datetime, timezone
import json
import os

import numpy as np
import pandas as pd
from semver import VersionInfo

from .config import getParamAsBoolean
from .constants import OUTPUT_FORMATS
from .error import FileFormatError, InvalidInputError
from .log import getLogger
from .utils import configHash, fmt17, mkdirs
from .version import VERSION

_logger = getLogger(__name__)

FLOAT_FORMAT = '%.17g'


def _jsonDefault(obj):
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if hasattr(obj, 'asDict'):
        return obj.asDict()
    raise TypeError("Can't serialize %s" % type(obj).__name__)

def _normalize(obj):
    # round-trip through JSON so hashes and outputs see plain Python types
    return json.loads(json.dumps(obj, default=_jsonDefault))

def timestamp():
    """
    Return the current UTC time in ISO-8601 form, or the time given by
    $SOURCE_DATE_EPOCH if it is set.
    """
    epoch = os.environ.get('SOURCE_DATE_EPOCH')
    when = datetime.fromtimestamp(int(epoch), timezone.utc) if epoch else datetime.now(timezone.utc)
    return when.replace(microsecond=0).isoformat()

def provenance(seed=None, config=None):
    config = _normalize(config or {})
    prov = {'seed': seed,
            'configHash': configHash(config),
            'version': VERSION}

    if getParamAsBoolean('Bell.RecordTimestamp'):
        prov['timestamp'] = timestamp()

    return prov


class ResultRecord(object):
    """
    The output of one command: its `kind` (the sub-command name), a dict of
    results, an optional table of rows, and provenance.
    """
    def __init__(self, kind, data, table=None, seed=None, config=None, prov=None):
        self.kind = kind
        self.data = _normalize(data)
        self.table = table
        self.provenance = prov or provenance(seed=seed, config=config)

    def asDict(self):
        d = {'kind': self.kind,
             'provenance': self.provenance,
             'data': self.data}

        if self.table is not None:
            d['table'] = _normalize(self.table.to_dict(orient='list'))

        return d

    @classmethod
    def fromDict(cls, d, filename='<record>'):
        try:
            table = pd.DataFrame(d['table']) if 'table' in d else None
            return cls(d['kind'], d['data'], table=table, prov=d['provenance'])
        except (KeyError, TypeError) as e:
            raise FileFormatError(filename, "not a result record: missing %s" % e)

    def summaryTable(self):
        """
        Return the record's table, or a one-row DataFrame of its scalar results.
        """
        if self.table is not None:
            return self.table

        if self.kind == 'search':
            return pd.DataFrame([extremesRow(self.data)])

        row = {key: value for key, value in sorted(self.data.items())
               if value is None or isinstance(value, (bool, int, float, str))}
        return pd.DataFrame([row])

    def toText(self, fmt='json'):
        if fmt == 'json':
            return json.dumps(self.asDict(), indent=2, sort_keys=True) + '\n'

        if fmt == 'csv':
            return self.summaryTable().to_csv(index=False, float_format=FLOAT_FORMAT)

        if fmt == 'md':
            return markdownTable(self.summaryTable())

        raise InvalidInputError("Unknown output format '%s'; expected one of %s" % (fmt, OUTPUT_FORMATS))

    def write(self, path=None, fmt='json'):
        """
        Write the record to `path` in format `fmt`, or print it if `path` is None.
        """
        text = self.toText(fmt)

        if not path:
            print(text, end='')
            return

        mkdirs(os.path.dirname(path))
        with open(path, 'w') as f:
            f.write(text)

        _logger.info("wrote %s record to %s", self.kind, path)


def markdownTable(df):
    def cell(value):
        if isinstance(value, (float, np.floating)):
            return fmt17(value)
        return str(value)

    lines = ['| ' + ' | '.join(str(c) for c in df.columns) + ' |',
             '|' + '|'.join('---' for _ in df.columns) + '|']
    for row in df.itertuples(index=False):
        lines.append('| ' + ' | '.join(cell(v) for v in row) + ' |')

    return '\n'.join(lines) + '\n'

def extremesRow(data):
    """
    Summarize a search record as a row of the "Bell Model Extremes" table:
    the dimensions, the Thm 1 and sum-rule deviations, the entropies of the
    two leading eigenstates and the count of quantum extremes.
    """
    Na, Nb, na, nb = data['dims']
    reports = data.get('reports', [])
    entropies = [r.get('entropy') for r in reports[:2]] + [None, None]

    return {'N_a': Na, 'N_b': Nb, 'n_a': na, 'n_b': nb,
            'fitness': data['bestFitness'],
            'thm1Deviation': data['thm1Deviation'],
            'sumRuleDeviation': data['sumRuleDeviation'],
            'entropy1': entropies[0],
            'entropy2': entropies[1],
            'extremes': '%d/%d' % (data['extremeCount'], data['stateCount'])}

def readRecord(path):
    """
    Read a JSON result record.

    :raises FileFormatError: if the file isn't a JSON record
    """
    try:
        with open(path) as f:
            d = json.load(f)
    except IOError as e:
        raise FileFormatError(path, "can't read record: %s" % e.strerror)
    except ValueError as e:
        raise FileFormatError(path, "only JSON records can be read back (%s)" % e)

    return ResultRecord.fromDict(d, filename=path)

def checkRecordVersion(record):
    """
    Raise InvalidInputError unless `record` was written by a tool with the
    same major version as this one.
    """
    written = record.provenance.get('version')
    try:
        major = VersionInfo.parse(written).major
    except (TypeError, ValueError):
        raise InvalidInputError("Record has an unrecognized tool version '%s'" % written)

    if major != VersionInfo.parse(VERSION).major:
        raise InvalidInputError("Record was written by version %s, incompatible with %s" % (written, VERSION))
