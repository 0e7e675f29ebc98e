'''
.. The "bt" (Bell tool) commandline program

.. Copyright (c) 2026 the pybell developers
   See the https://opensource.org/licenses/MIT for license details.
'''
import argparse
import sys
import traceback

from .config import (getConfig, getParam, getParamAsBoolean, setParam, setSection,
                     getSections, DEFAULT_SECTION)
from .error import PybellException, CommandlineError, EXIT_OK, EXIT_INTERNAL
from .log import getLogger, setLogLevels, configureLogs
from .signals import SignalException, catchSignals, restoreSignals
from .subcommand import clean_help
from .version import VERSION

PROGRAM = 'bt'


class BellTool(object):

    # plugin instances by command name
    _plugins = {}

    _instance = None

    @classmethod
    def getPlugin(cls, name):
        return cls._plugins.get(name, None)

    @classmethod
    def getInstance(cls, reload=False):
        """
        Get the singleton instance of the BellTool class.

        :param reload: (bool) If true, a new BellTool instance is created.
        :return: (BellTool instance) the new or cached instance.
        """
        if reload:
            BellTool._instance = None
            BellTool._plugins = {}

        if not BellTool._instance:
            BellTool._instance = cls()

        return BellTool._instance

    def __init__(self):
        self.parser = self.subparsers = None
        self.addParsers()

        from .built_ins import BuiltinSubcommands
        for item in BuiltinSubcommands:
            self.instantiatePlugin(item)

    def addParsers(self):
        self.parser = parser = argparse.ArgumentParser(prog=PROGRAM, prefix_chars='-+')

        logLevel = str(getParam('Bell.LogLevel'))
        parser.add_argument('+l', '--logLevel',
                            default=logLevel or 'notset',
                            help=clean_help('''Sets the log level for modules of the program. A default
                                log level can be set for the entire program, or individual
                                modules can have levels set using the syntax
                                "module:level, module:level,...", where the level names must be
                                one of {debug,info,warning,error,fatal} (case insensitive).
                                Module names starting with "." are relative to pybell.'''))

        parser.add_argument('+L', '--logFile',
                            help=clean_help('''Also write log messages to the given file. Overrides
                            config variable Bell.LogFile.'''))

        parser.add_argument('+P', '--profile', metavar='name', default=getParam('Bell.DefaultProfile'),
                            choices=sorted(getSections()) or None,
                            help=clean_help('''The profile (the config file section to read from),
                            which defaults to the value of config variable Bell.DefaultProfile'''))

        parser.add_argument('+s', '--set', dest='configVars', metavar='name=value', action='append', default=[],
                            help=clean_help('''Assign a value to override a configuration file parameter. For example,
                            to use 4 threads, use +s "Bell.Threads=4". Use multiple +s flags and
                            arguments to set multiple variables.'''))

        parser.add_argument('+v', '--verbose', action='store_true',
                            help=clean_help('''Show progress messages (sets the log level to INFO
                            unless +l is given)'''))

        parser.add_argument('--version', action='version', version=VERSION)   # goes to stderr, handled by argparse

        parser.add_argument('--VERSION', action='store_true')   # goes to stdout, but handled by bt

        self.subparsers = self.parser.add_subparsers(dest='subcommand', title='Subcommands',
                               description='''For help on subcommands, use the "-h" flag after the subcommand name''')

    def instantiatePlugin(self, pluginClass):
        plugin = pluginClass(self.subparsers)
        self._plugins[plugin.name] = plugin

    def run(self, args=None, argList=None):
        """
        Parse the script's arguments and invoke the run() method of the
        designated sub-command.

        :param args: an argparse.Namespace of parsed arguments
        :param argList: (list of str) argument list to parse
        :return: (int) the sub-command's exit status
        """
        assert args or argList is not None, "BellTool.run requires either args or argList"

        if argList is not None:
            args = self.parser.parse_args(args=argList)

        if not args.subcommand:
            raise CommandlineError("No sub-command given. Use -h for help.")

        if args.logFile:
            setParam('Bell.LogFile', args.logFile)

        # --threads holds for every computation the command runs
        threads = getattr(args, 'threads', None)
        if threads is not None:
            setParam('Bell.Threads', str(threads))

        logLevel = args.logLevel or getParam('Bell.LogLevel')
        if args.verbose and logLevel.upper() == getParam('Bell.LogLevel').upper():
            logLevel = 'INFO'

        if logLevel:
            setLogLevels(logLevel)

        configureLogs(force=True)

        _logger = getLogger(__name__)
        _logger.info("running '%s %s'", PROGRAM, args.subcommand)

        obj = self.getPlugin(args.subcommand)
        status = obj.run(args, self)
        return EXIT_OK if status is None else status


def _getMainParser():
    '''
    Used only to generate documentation by sphinx' argparse.
    '''
    getConfig()
    tool = BellTool.getInstance()
    return tool.parser

def _setProfile(argv):
    parser = argparse.ArgumentParser(prog=PROGRAM, add_help=False, prefix_chars='-+')
    parser.add_argument('+P', '--profile', metavar='name')

    ns, _otherArgs = parser.parse_known_args(args=argv)

    section = ns.profile
    if section:
        if section not in getSections():
            raise CommandlineError('Unknown profile "%s"' % section)
        setParam('Bell.DefaultProfile', section, section=DEFAULT_SECTION)
        setSection(section)

# This parser handles only --VERSION flag.
def _showVersion(argv):
    parser = argparse.ArgumentParser(prog=PROGRAM, add_help=False, prefix_chars='-+')
    parser.add_argument('--VERSION', action='store_true')

    ns, _otherArgs = parser.parse_known_args(args=argv)

    if ns.VERSION:
        print(VERSION)
        return True

    return False

def _main(argv=None):
    argv = sys.argv[1:] if argv is None else argv

    getConfig()

    if _showVersion(argv):
        return EXIT_OK

    configureLogs()

    _setProfile(argv)

    # This parser handles only --set args, which must be applied before
    # the main parser reads defaults from the configuration.
    parser = argparse.ArgumentParser(prog=PROGRAM, add_help=False, prefix_chars='-+')
    parser.add_argument('+s', '--set', dest='configVars', action='append', default=[])
    ns, _otherArgs = parser.parse_known_args(args=argv)

    for arg in ns.configVars:
        if not '=' in arg:
            raise CommandlineError('+s requires an argument of the form variable=value, got "%s"' % arg)

        name, value = arg.split('=', 1)
        setParam(name.strip(), value.strip())

    tool = BellTool.getInstance(reload=True)
    args = tool.parser.parse_args(args=argv)

    previous = catchSignals()
    try:
        return tool.run(args=args)
    finally:
        restoreSignals(previous)


def main(argv=None, raiseError=False):
    """
    Run ``bt`` with the given arguments and return its exit status:
    0 on success, 1 if a target was missed, 2 for configuration and input
    errors, 3 for resource limits, 4 for numerical failures and 5 for any
    other failure.
    """
    try:
        return _main(argv)

    except SystemExit as e:
        # argparse exits with 0 after --help or --version and 2 on usage errors
        if e.code is None:
            return EXIT_OK
        if isinstance(e.code, int):
            return e.code
        print("%s failed: %s" % (PROGRAM, e.code), file=sys.stderr)
        return EXIT_INTERNAL

    except SignalException as e:
        if raiseError:
            raise

        _logger = getLogger(__name__)
        _logger.error("%s: %s" % (PROGRAM, e))
        return e.exitCode

    except PybellException as e:
        if raiseError:
            raise

        print("%s failed: %s" % (PROGRAM, e), file=sys.stderr)
        if _showStackTrace():
            traceback.print_exc()
        return e.exitCode

    except Exception as e:
        if raiseError:
            raise

        print("%s failed: %s" % (PROGRAM, e), file=sys.stderr)
        if _showStackTrace():
            traceback.print_exc()
        return EXIT_INTERNAL

def _showStackTrace():
    try:
        return getParamAsBoolean('Bell.ShowStackTrace')
    except Exception:
        return False


if __name__ == '__main__':
    sys.exit(main())
