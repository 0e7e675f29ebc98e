import os
import shutil
import tempfile
import unittest
from unittest import TestCase

from pybell.config import (getConfig, getParam, getParamAsInt, getParamAsFloat, getParamAsBoolean,
                           setParam, getSection, setSection, userConfigPath, stringTrue, DEFAULT_SECTION)
from pybell.error import ConfigFileError
from pybell.log import parseLevels


class TestConfig(TestCase):
    def setUp(self):
        self.home = tempfile.mkdtemp()
        self.savedHome = os.environ.get('PYBELL_HOME')
        os.environ['PYBELL_HOME'] = self.home
        setSection(DEFAULT_SECTION)
        getConfig(reload=True)

    def tearDown(self):
        if self.savedHome is None:
            del os.environ['PYBELL_HOME']
        else:
            os.environ['PYBELL_HOME'] = self.savedHome

        shutil.rmtree(self.home, ignore_errors=True)
        setSection(DEFAULT_SECTION)
        getConfig(reload=True)

    def writeUserConfig(self, text):
        with open(userConfigPath(), 'w') as f:
            f.write(text)

    def test_systemDefaults(self):
        self.assertEqual(getParamAsInt('Bell.Threads'), 1)
        self.assertEqual(getParam('Bell.OutputFormat'), 'json')
        self.assertEqual(getParamAsFloat('Bell.SearchTarget'), 1e-5)
        self.assertTrue(getParamAsBoolean('GA.Polish'))

    def test_missingUserFile(self):
        self.assertFalse(os.path.exists(userConfigPath()))
        self.assertEqual(getParamAsInt('GA.Population'), 200)

    def test_userOverrides(self):
        self.writeUserConfig("[DEFAULT]\nBell.Threads = 3\n")
        getConfig(reload=True)
        self.assertEqual(getParamAsInt('Bell.Threads'), 3)

    def test_profile(self):
        self.writeUserConfig("[DEFAULT]\nBell.DefaultProfile = fast\n\n[fast]\nGA.Population = 10\n")
        getConfig(reload=True)
        self.assertEqual(getSection(), 'fast')
        self.assertEqual(getParamAsInt('GA.Population'), 10)
        self.assertEqual(getParamAsInt('GA.Population', section=DEFAULT_SECTION), 200)

    def test_unknownProfile(self):
        self.writeUserConfig("[DEFAULT]\nBell.DefaultProfile = nonesuch\n")
        with self.assertRaises(ConfigFileError):
            getConfig(reload=True)

    def test_setParam(self):
        setParam('GA.Seed', '17')
        self.assertEqual(getParamAsInt('GA.Seed'), 17)

    def test_badValues(self):
        setParam('GA.Seed', 'seventeen')
        with self.assertRaises(ConfigFileError):
            getParamAsInt('GA.Seed')

        setParam('GA.Polish', 'maybe')
        with self.assertRaises(ConfigFileError):
            getParamAsBoolean('GA.Polish')

    def test_stringTrue(self):
        for value in ('True', 'yes', 'ON', '1'):
            self.assertTrue(stringTrue(value))
        for value in ('false', 'No', 'off', '0'):
            self.assertFalse(stringTrue(value))

    def test_parseLevels(self):
        levels = parseLevels('.ga:debug, WARNING')
        self.assertEqual(levels, {'pybell.ga': 'DEBUG', 'pybell': 'WARNING'})


if __name__ == "__main__":
    unittest.main()
