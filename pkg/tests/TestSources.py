import os
import shutil
import tempfile
import unittest
from unittest import TestCase

import numpy as np

from pybell.config import getConfig, setSection, DEFAULT_SECTION
from pybell.constants import W0, X3
from pybell.error import InvalidInputError, RunConfigError
from pybell.sources import parseWeightText, parseWeightSource, formatWeightText, readWeightFile
from pybell.weights import BellMatrix, WeightMatrix

_home = None

def setUpModule():
    global _home
    _home = tempfile.mkdtemp()
    os.environ['PYBELL_HOME'] = _home
    setSection(DEFAULT_SECTION)
    getConfig(reload=True)

def tearDownModule():
    shutil.rmtree(_home, ignore_errors=True)


class TestWeightText(TestCase):
    def assertErrorAt(self, text, lineNum, column=None):
        with self.assertRaises(RunConfigError) as ctx:
            parseWeightText(text, filename='test.w')
        self.assertEqual(ctx.exception.lineNum, lineNum)
        if column is not None:
            self.assertEqual(ctx.exception.column, column)

    def test_parse(self):
        text = "# CHSH\n2 2\n\n1 1\n1 -1\n"
        W = parseWeightText(text)
        self.assertTrue(np.array_equal(W.entries, W0))

    def test_badToken(self):
        self.assertErrorAt("2 2\n1 x\n1 -1\n", 2, 3)

    def test_wrongRowCount(self):
        self.assertErrorAt("3 2\n1 1\n1 -1\n", 3)

    def test_wrongColumnCount(self):
        self.assertErrorAt("2 2\n1 1 1\n1 -1\n", 2, 5)
        self.assertErrorAt("2 2\n1 1\n1\n", 3)

    def test_badHeader(self):
        self.assertErrorAt("2\n1 1\n", 1, 1)
        self.assertErrorAt("2 b\n1 1\n1 1\n", 1, 3)
        self.assertErrorAt("1 2\n1 1\n", 1)

    def test_notFinite(self):
        self.assertErrorAt("2 2\n1 inf\n1 1\n", 2, 3)

    def test_format(self):
        W = WeightMatrix([[0.1, 1.0 / 3], [2.0, -1e-20]])
        copy = parseWeightText(formatWeightText(W))
        self.assertTrue(np.array_equal(copy.entries, W.entries))


class TestWeightSource(TestCase):
    def setUp(self):
        self.tmpDir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpDir, ignore_errors=True)

    def test_named(self):
        self.assertTrue(np.array_equal(parseWeightSource('chsh').entries, W0))
        self.assertTrue(np.array_equal(parseWeightSource('X3').entries, X3))
        self.assertEqual(parseWeightSource('w00').shape, (4, 4))
        self.assertEqual(parseWeightSource('magic3').hvNorm, 45.0)

    def test_identity(self):
        self.assertTrue(np.array_equal(parseWeightSource('identity:3').entries, np.eye(3)))

    def test_bell(self):
        X = parseWeightSource('bell:5:3')
        self.assertIsInstance(X, BellMatrix)
        self.assertEqual(X.N, 5)

    def test_inline(self):
        self.assertTrue(np.array_equal(parseWeightSource('inline:1 1; 1 -1').entries, W0))
        self.assertTrue(np.array_equal(parseWeightSource('1,1;1,-1').entries, W0))

        with self.assertRaises(InvalidInputError):
            parseWeightSource('inline:1 1; 1')

    def test_file(self):
        path = os.path.join(self.tmpDir, 'x3.txt')
        with open(path, 'w') as f:
            f.write(formatWeightText(WeightMatrix(X3)))

        self.assertTrue(np.array_equal(parseWeightSource('file:' + path).entries, X3))
        self.assertTrue(np.array_equal(parseWeightSource(path).entries, X3))
        self.assertTrue(np.array_equal(readWeightFile(path).entries, X3))

    def test_missing(self):
        with self.assertRaises(RunConfigError):
            parseWeightSource(os.path.join(self.tmpDir, 'nonesuch.txt'))

    def test_badArgs(self):
        with self.assertRaises(InvalidInputError):
            parseWeightSource('bell:5')

        with self.assertRaises(InvalidInputError):
            parseWeightSource('identity:x')


if __name__ == "__main__":
    unittest.main()
