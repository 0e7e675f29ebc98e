'''
.. Base class for the sub-commands of the ``bt`` program.

.. Copyright (c) 2026 the pybell developers
   See the https://opensource.org/licenses/MIT for license details.
'''
from abc import ABCMeta, abstractmethod

from .config import getParam
from .constants import OUTPUT_FORMATS

# Fixes help strings to display properly with sphinx-argparse
def clean_help(s):
    lines = s.splitlines()
    return ' '.join(map(lambda s: s.strip(), lines))


class SubcommandABC(object, metaclass=ABCMeta):
    """
    Abstract base class for sub-commands. Defines the protocol expected by ``bt``
    for defining sub-commands. Each built-in sub-command lives in a file named
    ``'*_plugin.py'`` in ``pybell/built_ins`` that defines a subclass of
    ``SubcommandABC`` and sets the global variable ``PluginClass`` to it.

    :param name: (str) the name of the sub-command
    :param subparsers: an object returned by argparse's ``parser.add_subparsers()``
    :param kwargs: (dict) keywords to pass to the the call to argparse's
       ``subparsers.add_parser(name, **kwargs)``, e.g., to pass `help` or
       `description` strings.
    """
    Instances = {}  # SubCommand instances keyed by name

    @classmethod
    def getInstance(cls, name):
        return SubcommandABC.Instances.get(name)

    def __init__(self, name, subparsers, kwargs):
        self.name = name
        self.parser = parser = subparsers.add_parser(self.name, **kwargs)
        self.Instances[self.name] = self
        self.addArgs(parser)

    def __str__(self):
        clsName = type(self).__name__
        return "<%s name=%s>" % (clsName, self.name)

    @staticmethod
    def addWeightArgs(parser, required=True):
        """
        Add the mutually exclusive options selecting a weight matrix.
        """
        group = parser.add_mutually_exclusive_group(required=required)
        group.add_argument('--chsh', action='store_true',
                           help='Use the CHSH weight matrix [[1, 1], [1, -1]].')
        group.add_argument('--magic3', action='store_true',
                           help='Use the 3x3 magic square.')
        group.add_argument('--w00', action='store_true',
                           help='Use the 4x4 Kronecker square of the CHSH matrix.')
        group.add_argument('--x3', action='store_true',
                           help='Use the 3x3 Bell matrix [[-1, 1, 0], [1, 0, 1], [0, 1, 1]].')
        group.add_argument('--bell', type=int, metavar='N',
                           help=clean_help('''Use a random Bell matrix of dimension N, generated
                           from the value of --seed.'''))
        group.add_argument('-w', '--weight', metavar='SOURCE',
                           help=clean_help('''A weight source: a weight file path, "file:PATH",
                           "inline:ROWS" with rows separated by ";", "identity:N", "bell:N:SEED",
                           or one of the names chsh, magic3, w00, x3.'''))

    @staticmethod
    def addCommonArgs(parser, seed=True, tol=False, threads=True):
        """
        Add the options shared by most sub-commands.
        """
        if seed:
            parser.add_argument('--seed', type=int, default=None,
                                help='Random seed (a non-negative integer).')

        parser.add_argument('-o', '--out', default=None,
                            help='Write the result to this file instead of standard output.')

        parser.add_argument('-f', '--format', choices=OUTPUT_FORMATS,
                            default=getParam('Bell.OutputFormat'),
                            help=clean_help('''Output format; the default is the value of
                            config variable Bell.OutputFormat.'''))

        if tol:
            parser.add_argument('--tol', type=float, default=None,
                                help='Tolerance for comparisons; each command documents its default.')

        if threads:
            parser.add_argument('--threads', type=int, default=None,
                                help=clean_help('''Number of worker threads. Results do not depend on
                                this value. Default is the value of config variable Bell.Threads.'''))

    @abstractmethod
    def addArgs(self, parser):
        """
        Add command-line arguments to the given `parser`. (This is an
        abstract method that must be implemented in the subclass.)

        :param parser: the sub-parser associated with this sub-command.

        :return: the populated parser
        """
        pass

    @abstractmethod
    def run(self, args, tool):
        """
        Perform the function intended by the ``SubcommandABC`` subclass. This function
        is invoked by ``bt`` on the ``SubcommandABC`` instance whose name matches the
        given sub-command. (This is an abstract method that must be implemented in
        the subclass.)

        :param args: the argument dictionary
        :param tool: the BellTool instance for the main command
        :return: (int) the exit status, or None for success
        """
        pass
