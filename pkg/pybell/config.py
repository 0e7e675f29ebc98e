'''
.. The pybell configuration system.

   Variables are read from ``pybell/etc/system.cfg``, then from
   ``pybell/etc/{platform}.cfg`` if present, then from the file named by
   ``$PYBELL_SITE_CONFIG``, and finally from ``~/.pybell.cfg``. Each file
   overrides values set by the files read before it.

.. Copyright (c) 2026 the pybell developers
   See the https://opensource.org/licenses/MIT for license details.
'''
import configparser
import os
import pkgutil
import platform

from .error import ConfigFileError, PybellException

DEFAULT_SECTION = 'DEFAULT'
USR_CONFIG_FILE = '.pybell.cfg'
SITE_CONFIG_VAR = 'PYBELL_SITE_CONFIG'

PlatformName = platform.system()

_ConfigParser = None

_ProfileSection = DEFAULT_SECTION


def getSection():
    return _ProfileSection

def setSection(section):
    """
    Set the name of the default config file section (the "profile")
    to read from.

    :param section: (str) a config file section name.
    :return: none
    """
    global _ProfileSection
    _ProfileSection = section

def configLoaded():
    return bool(_ConfigParser)

def getConfig(reload=False):
    """
    Return the configuration object. If one has been created already via
    `readConfigFiles`, it is returned; otherwise a new one is created
    and the configuration files are read.

    :param reload: (bool) if True, instantiate a new global ConfigParser.
    :return: a `ConfigParser` instance.
    """
    if reload:
        global _ConfigParser
        _ConfigParser = None

    return _ConfigParser or readConfigFiles()

def getHomeDir():
    if PlatformName == 'Windows':
        env = os.environ
        homedir = env.get('PYBELL_HOME') or env.get('HOMESHARE') or env.get('HOMEPATH') or ''
        drive, path = os.path.splitdrive(homedir)
        drive = drive or env.get('HOMEDRIVE') or 'C:'
        home = os.path.realpath(drive + path).replace('\\', '/')
    else:
        home = os.getenv('PYBELL_HOME') or os.path.expanduser('~')

    return home

def userConfigPath():
    return os.path.join(getHomeDir(), USR_CONFIG_FILE)

def _readConfigResourceFile(filename, package='pybell', raiseError=True):
    try:
        data = pkgutil.get_data(package, filename)
    except (IOError, OSError):
        if raiseError:
            raise
        return None

    if data is None:
        if raiseError:
            raise ConfigFileError("Missing packaged configuration file %s" % filename)
        return None

    data = data.decode('utf-8')
    _ConfigParser.read_string(data, source=filename)
    return data

def _readConfigFile(path, label):
    try:
        with open(path) as f:
            _ConfigParser.read_file(f)
    except configparser.Error as e:
        raise ConfigFileError("Can't parse %s config file %s: %s" % (label, path, e))

def readConfigFiles():
    """
    Read the pybell configuration files, starting with ``pybell/etc/system.cfg``,
    followed by ``pybell/etc/{platform}.cfg`` if present. If the environment variable
    ``PYBELL_SITE_CONFIG`` is defined, its value should be a config file, which is
    read next. Finally, the user's config file, ``~/.pybell.cfg``, is read if it
    exists. Each successive file overrides values for any variable defined in an
    earlier file.

    :return: a populated ConfigParser instance
    """
    global _ConfigParser

    # Strict mode prevents duplicate sections, which we do not restrict
    _ConfigParser = configparser.ConfigParser(comment_prefixes=('#',),
                                              strict=False,
                                              empty_lines_in_values=False)

    # don't force keys to lower-case: variable names are case sensitive
    _ConfigParser.optionxform = lambda option: option

    _ConfigParser.set(DEFAULT_SECTION, 'Home', getHomeDir())
    _ConfigParser.set(DEFAULT_SECTION, 'User', os.getenv('USER', 'unknown'))

    # Create vars from environment variables as '$' + variable name, as in the shell
    for name, value in os.environ.items():
        value = value.replace(r'%', r'%%')
        _ConfigParser.set(DEFAULT_SECTION, '$' + name, value)

    _readConfigResourceFile('etc/system.cfg')

    # Platform-specific defaults are optional
    _readConfigResourceFile('etc/%s.cfg' % PlatformName, raiseError=False)

    siteConfig = os.getenv(SITE_CONFIG_VAR)
    if siteConfig:
        try:
            with open(siteConfig) as f:
                _ConfigParser.read_file(f)
        except Exception as e:
            print("WARNING: Failed to read site config file: %s" % e)

    # Every variable has a packaged default, so the user file is optional
    usrConfigPath = userConfigPath()
    if os.path.lexists(usrConfigPath):
        _readConfigFile(usrConfigPath, 'user')

    profile = getParam('Bell.DefaultProfile', section=DEFAULT_SECTION)
    if profile:
        if not _ConfigParser.has_section(profile):
            raise ConfigFileError('Bell.DefaultProfile refers to unknown section "%s"' % profile)
        setSection(profile)

    return _ConfigParser

def getSections():
    return _ConfigParser.sections()

def getConfigDict(section=DEFAULT_SECTION, raw=False):
    """
    Return all variables defined in `section` as a dictionary.

    :param section: (str) the name of a section in the config file
    :param raw: (bool) whether to return raw or interpolated values.
    :return: (dict) all variables defined in the section (which includes
       those defined in DEFAULT.)
    """
    return dict(_ConfigParser.items(section, raw=raw))

def setParam(name, value, section=None):
    """
    Set a configuration parameter in memory.

    :param name: (str) parameter name
    :param value: (any, coerced to str) parameter value
    :param section: (str) if given, the name of the section in which to set the value.
       If not given, the value is set in the established profile section, or DEFAULT
       if no profile section has been set.
    :return: value
    """
    if not _ConfigParser:
        getConfig()

    section = section or getSection()
    _ConfigParser.set(section, name, str(value))
    return value

def getParam(name, section=None, raw=False, raiseError=True):
    """
    Get the value of the configuration parameter `name`. Calls
    :py:func:`getConfig` if needed.

    :param name: (str) the name of a configuration parameter. Environment
       variables are available using the '$' prefix as in a shell, e.g.,
       getParam('$HOME').
    :param section: (str) the name of the section to read from, which
      defaults to the current profile.
    :param raw: (bool) if True, don't interpolate the value.
    :param raiseError: (bool) if False, return None for unknown variables.
    :return: (str) the value of the variable, or None if the variable
      doesn't exist and raiseError is False.
    """
    section = section or getSection()

    if not section:
        raise PybellException('getParam was called without setting "section"')

    if not _ConfigParser:
        getConfig()

    try:
        return _ConfigParser.get(section, name, raw=raw)

    except configparser.NoSectionError:
        if raiseError:
            raise PybellException('getParam: unknown section "%s"' % section)
        return None

    except configparser.NoOptionError:
        if raiseError:
            raise PybellException('getParam: unknown variable "%s"' % name)
        return None

_True  = ['t', 'y', 'true',  'yes', 'on',  '1']
_False = ['f', 'n', 'false', 'no',  'off', '0']

def stringTrue(value, raiseError=True):
    value = str(value).lower()

    if value in _True:
        return True

    if value in _False:
        return False

    if raiseError:
        msg = 'Unrecognized boolean value: "{}". Must one of {}'.format(value, _True + _False)
        raise ConfigFileError(msg)

    return None

def getParamAsBoolean(name, section=None):
    """
    Get the value of the configuration parameter `name`, coerced
    into a boolean value, where any (case-insensitive) value in the
    set ``{'true','yes','on','1'}`` are converted to ``True``, and
    any value in the set ``{'false','no','off','0'}`` is converted to
    ``False``. Any other value raises an exception.

    :param name: (str) the name of a configuration parameter.
    :param section: (str) the name of the section to read from.
    :return: (bool) the value of the variable
    :raises: :py:exc:`pybell.error.ConfigFileError`
    """
    value = getParam(name, section=section)
    result = stringTrue(value, raiseError=False)

    if result is None:
        msg = 'The value of variable "{}", {}, could not converted to boolean.'.format(name, value)
        raise ConfigFileError(msg)

    return result

def getParamAsInt(name, section=None):
    """
    Get the value of the configuration parameter `name`, coerced
    to an integer.

    :raises: :py:exc:`pybell.error.ConfigFileError` if the value isn't an integer
    """
    value = getParam(name, section=section)
    try:
        return int(value)
    except ValueError:
        raise ConfigFileError('The value of variable "{}", {}, is not an integer.'.format(name, value))

def getParamAsFloat(name, section=None):
    """
    Get the value of the configuration parameter `name` as a float.

    :raises: :py:exc:`pybell.error.ConfigFileError` if the value isn't numeric
    """
    value = getParam(name, section=section)
    try:
        return float(value)
    except ValueError:
        raise ConfigFileError('The value of variable "{}", {}, is not a number.'.format(name, value))
