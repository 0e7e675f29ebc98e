import os
import shutil
import tempfile
import unittest
from unittest import TestCase

import numpy as np

from pybell.config import getConfig, setSection, DEFAULT_SECTION
from pybell.constants import W0, X3
from pybell.error import RunConfigError
from pybell.runConfig import RunConfig, parseRunConfig, readRunConfig
from pybell.sources import formatWeightText
from pybell.utils import configHash
from pybell.weights import WeightMatrix

_home = None

def setUpModule():
    global _home
    _home = tempfile.mkdtemp()
    os.environ['PYBELL_HOME'] = _home
    setSection(DEFAULT_SECTION)
    getConfig(reload=True)

def tearDownModule():
    shutil.rmtree(_home, ignore_errors=True)


class TestRunConfig(TestCase):
    def setUp(self):
        self.tmpDir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpDir, ignore_errors=True)

    def assertErrorAt(self, text, lineNum):
        with self.assertRaises(RunConfigError) as ctx:
            parseRunConfig(text, filename='test.run')
        self.assertEqual(ctx.exception.lineNum, lineNum)

    def test_minimal(self):
        rc = parseRunConfig("weight = chsh\nseed = 3\npopulation = 10\nelitism = 1\n")
        self.assertTrue(np.array_equal(rc.weights.entries, W0))
        self.assertEqual(tuple(rc.dims), (2, 2, 2, 2))
        self.assertEqual(rc.seed, 3)
        self.assertEqual(rc.gaConfig.population, 10)
        self.assertEqual(rc.gaConfig.generations, 2000)
        self.assertEqual(rc.constraint.kind, 'none')
        self.assertIsNone(rc.target)
        self.assertEqual(rc.format, 'json')

    def test_sectionHeader(self):
        rc = parseRunConfig("[run]\nweight = x3\ndims = 3 3 2 2\nconstraint = tie:b:3:2\n")
        self.assertEqual(tuple(rc.dims), (3, 3, 2, 2))
        self.assertEqual(str(rc.constraint), 'tie:b:3:2')

    def test_values(self):
        rc = parseRunConfig("weight = chsh\npolish = no\nmutationRate = 0.2\ntarget = 1e-3\n"
                            "threads = 2\noutput = out.json\nformat = md\n")
        self.assertFalse(rc.gaConfig.polish)
        self.assertEqual(rc.gaConfig.mutationRate, 0.2)
        self.assertEqual(rc.target, 1e-3)
        self.assertEqual(rc.threads, 2)
        self.assertEqual(rc.output, 'out.json')
        self.assertEqual(rc.format, 'md')

    def test_unknownKey(self):
        self.assertErrorAt("weight = chsh\nbogus = 1\n", 2)

    def test_badValues(self):
        self.assertErrorAt("weight = chsh\n\npopulation = many\n", 3)
        self.assertErrorAt("weight = chsh\ndims = 3 3 2 2\n", 2)
        self.assertErrorAt("weight = chsh\nconstraint = tie:b:3:2\n", 2)
        self.assertErrorAt("weight = chsh\nformat = xml\n", 2)
        self.assertErrorAt("weight = chsh\ncrossoverRate = 2\n", None)

    def test_missingWeight(self):
        with self.assertRaises(RunConfigError):
            parseRunConfig("seed = 1\n")

    def test_syntaxError(self):
        with self.assertRaises(RunConfigError):
            parseRunConfig("weight = chsh\nthis line has no assignment\n")

    def test_relativeWeightFile(self):
        with open(os.path.join(self.tmpDir, 'x3.w'), 'w') as f:
            f.write(formatWeightText(WeightMatrix(X3)))

        runFile = os.path.join(self.tmpDir, 'x3.run')
        with open(runFile, 'w') as f:
            f.write("weight = file:x3.w\nseed = 5\n")

        rc = readRunConfig(runFile)
        self.assertTrue(np.array_equal(rc.weights.entries, X3))
        self.assertEqual(tuple(rc.dims), (3, 3, 2, 2))

    def test_configHash(self):
        text = "weight = chsh\nseed = 4\n"
        first = parseRunConfig(text).asDict()
        second = RunConfig({'weight': 'chsh', 'seed': '4'}).asDict()
        self.assertEqual(configHash(first), configHash(second))

        third = parseRunConfig("weight = chsh\nseed = 5\n").asDict()
        self.assertNotEqual(configHash(first), configHash(third))


if __name__ == "__main__":
    unittest.main()
