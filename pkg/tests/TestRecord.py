import json
import os
import shutil
import tempfile
import unittest
from unittest import TestCase

import numpy as np
import pandas as pd

from pybell.config import getConfig, setParam, setSection, DEFAULT_SECTION
from pybell.error import FileFormatError, InvalidInputError
from pybell.record import (ResultRecord, readRecord, checkRecordVersion, markdownTable,
                           provenance, timestamp)
from pybell.version import VERSION

_home = None

def setUpModule():
    global _home
    _home = tempfile.mkdtemp()
    os.environ['PYBELL_HOME'] = _home
    setSection(DEFAULT_SECTION)
    getConfig(reload=True)

def tearDownModule():
    shutil.rmtree(_home, ignore_errors=True)


class TestRecord(TestCase):
    def setUp(self):
        self.tmpDir = tempfile.mkdtemp()
        self.savedEpoch = os.environ.pop('SOURCE_DATE_EPOCH', None)
        getConfig(reload=True)

    def tearDown(self):
        shutil.rmtree(self.tmpDir, ignore_errors=True)
        if self.savedEpoch is not None:
            os.environ['SOURCE_DATE_EPOCH'] = self.savedEpoch
        else:
            os.environ.pop('SOURCE_DATE_EPOCH', None)

    def test_provenance(self):
        prov = provenance(seed=7, config={'a': 1})
        self.assertEqual(prov['seed'], 7)
        self.assertEqual(prov['version'], VERSION)
        self.assertIn('timestamp', prov)
        self.assertEqual(len(prov['configHash']), 64)

        setParam('Bell.RecordTimestamp', 'False')
        self.assertNotIn('timestamp', provenance(seed=7, config={'a': 1}))

    def test_sourceDateEpoch(self):
        os.environ['SOURCE_DATE_EPOCH'] = '0'
        self.assertEqual(timestamp(), '1970-01-01T00:00:00+00:00')

    def test_jsonRoundTrip(self):
        data = {'value': 0.1 + 0.2, 'array': np.array([1.0 / 3, 2.0]), 'flag': np.bool_(True)}
        record = ResultRecord('norms', data, seed=1, config={'weight': 'chsh'})
        path = os.path.join(self.tmpDir, 'sub', 'record.json')
        record.write(path, 'json')

        copy = readRecord(path)
        self.assertEqual(copy.kind, 'norms')
        self.assertEqual(copy.data['value'], 0.1 + 0.2)
        self.assertEqual(copy.data['array'], [1.0 / 3, 2.0])
        self.assertIs(copy.data['flag'], True)
        self.assertEqual(copy.provenance, record.provenance)

    def test_reproducible(self):
        setParam('Bell.RecordTimestamp', 'False')
        texts = [ResultRecord('norms', {'x': 1.5}, seed=2, config={'k': [1, 2]}).toText('json')
                 for _ in range(2)]
        self.assertEqual(texts[0], texts[1])

    def test_csv(self):
        table = pd.DataFrame({'N': [2, 3], 'value': [1.0 / 3, 2.0]})
        text = ResultRecord('bounds-plot', {}, table=table).toText('csv')
        lines = text.splitlines()
        self.assertEqual(lines[0], 'N,value')
        self.assertEqual(lines[1], '2,0.33333333333333331')

    def test_markdown(self):
        table = pd.DataFrame({'N': [2], 'value': [0.5]})
        text = markdownTable(table)
        self.assertEqual(text.splitlines()[0], '| N | value |')
        self.assertEqual(text.splitlines()[1], '|---|---|')
        self.assertIn('0.5', text.splitlines()[2])

    def test_scalarSummary(self):
        record = ResultRecord('norms', {'opNorm': 1.5, 'matrix': [[1, 2]], 'name': 'x'})
        df = record.summaryTable()
        self.assertEqual(list(df.columns), ['name', 'opNorm'])

    def test_badFormat(self):
        with self.assertRaises(InvalidInputError):
            ResultRecord('norms', {}).toText('xml')

    def test_readErrors(self):
        path = os.path.join(self.tmpDir, 'bad.json')
        with open(path, 'w') as f:
            f.write('N,value\n2,1\n')

        with self.assertRaises(FileFormatError):
            readRecord(path)

        with open(path, 'w') as f:
            json.dump({'kind': 'norms'}, f)

        with self.assertRaises(FileFormatError):
            readRecord(path)

        with self.assertRaises(FileFormatError):
            readRecord(os.path.join(self.tmpDir, 'nonesuch.json'))

    def test_version(self):
        record = ResultRecord('norms', {})
        checkRecordVersion(record)

        record.provenance['version'] = '0.9.0'
        with self.assertRaises(InvalidInputError):
            checkRecordVersion(record)

        record.provenance['version'] = 'unknown'
        with self.assertRaises(InvalidInputError):
            checkRecordVersion(record)


if __name__ == "__main__":
    unittest.main()
