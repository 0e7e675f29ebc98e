'''
.. Copyright (c) 2026 the pybell developers
   See the https://opensource.org/licenses/MIT for license details.
'''
from ..subcommand import SubcommandABC, clean_help

class HvVerifyCommand(SubcommandABC):
    def __init__(self, subparsers):
        kwargs = {'help' : '''Check that random hidden-variable models never exceed the Bell
                  threshold ||W||_{A,B}. Exits with status 1 if any model does.'''}

        super(HvVerifyCommand, self).__init__('hv-verify', subparsers, kwargs)

    def addArgs(self, parser):
        self.addWeightArgs(parser)

        parser.add_argument('-n', '--count', type=int, default=10000,
                            help='Number of random models. Default is 10000.')

        parser.add_argument('-B', '--box', nargs=2, type=float, default=[-1.0, 1.0], metavar=('LO', 'HI'),
                            help=clean_help('''The interval of values allowed for every observable.
                            Default is -1 1, for which the threshold is ||W||*.'''))

        self.addCommonArgs(parser, tol=True, threads=False)
        return parser

    def run(self, args, tool):
        import numpy as np
        from ..error import EXIT_TARGET_MISSED
        from ..hvmodel import verifyHvBound, maximizingStrategy, hvExpectation
        from ..log import getLogger
        from ..record import ResultRecord
        from ..sources import weightSourceFromArgs

        _logger = getLogger(__name__)

        W = weightSourceFromArgs(args)
        seed = args.seed or 0
        lo, hi = args.box
        bounds = (np.tile([lo, hi], (W.rows, 1)), np.tile([lo, hi], (W.cols, 1)))

        report = verifyHvBound(W, bounds, count=args.count, seed=seed, tol=args.tol)
        report['box'] = [lo, hi]
        report['hvNorm'] = W.hvNorm
        report['maximizingExpectation'] = hvExpectation(W, maximizingStrategy(W))

        config = {'weight': W.entries, 'count': args.count, 'box': [lo, hi], 'tol': args.tol}
        record = ResultRecord(self.name, report, seed=seed, config=config)
        record.write(args.out, args.format)

        if report['violations']:
            _logger.error("%d of %d models exceed the threshold %.12g",
                          report['violations'], args.count, report['threshold'])
            return EXIT_TARGET_MISSED


PluginClass = HvVerifyCommand
