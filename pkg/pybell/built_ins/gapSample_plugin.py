'''
.. Copyright (c) 2026 the pybell developers
   See the https://opensource.org/licenses/MIT for license details.
'''
from ..subcommand import SubcommandABC, clean_help

class GapSampleCommand(SubcommandABC):
    def __init__(self, subparsers):
        kwargs = {'help' : '''Sample the scale-invariant quantum gap g(W) over random weight
                  matrices and write the samples and their histogram.''',
                  'description' : '''With --format csv and --out FILE.csv, the histogram is
                  written to FILE-hist.csv; otherwise both appear in one record.'''}

        super(GapSampleCommand, self).__init__('gap-sample', subparsers, kwargs)

    def addArgs(self, parser):
        from ..constants import DISTRIBUTIONS, UNIFORM

        parser.add_argument('-s', '--shape', nargs=2, type=int, default=[3, 3], metavar=('Na', 'Nb'),
                            help='Shape of the random matrices. Default is 3 3.')

        parser.add_argument('-n', '--count', type=int, default=50000,
                            help='Number of matrices to sample. Default is 50000.')

        parser.add_argument('-D', '--dist', choices=DISTRIBUTIONS, default=UNIFORM,
                            help=clean_help('''Distribution of the entries: uniform on [-1, 1]
                            or standard normal. Default is uniform.'''))

        parser.add_argument('-b', '--bins', type=int, default=20,
                            help=clean_help('''Number of histogram bins spanning [0, sqrt(Na Nb) - 1].
                            Default is 20.'''))

        self.addCommonArgs(parser, threads=False)
        return parser

    def run(self, args, tool):
        import math
        import os
        import numpy as np
        import pandas as pd
        from ..error import CommandlineError
        from ..record import ResultRecord
        from ..weights import sampleGapDistribution

        if args.bins < 1:
            raise CommandlineError('gap-sample requires at least one bin')

        Na, Nb = args.shape
        seed = args.seed or 0
        gaps = np.array([g for _W, g in sampleGapDistribution(Na, Nb, args.count, seed, args.dist)])

        upper = math.sqrt(Na * Nb) - 1
        counts, edges = np.histogram(gaps, bins=args.bins, range=(0.0, upper))

        samples = pd.DataFrame({'sample': np.arange(len(gaps)), 'g': gaps})
        hist = pd.DataFrame({'lower': edges[:-1], 'upper': edges[1:], 'count': counts})

        config = {'shape': [Na, Nb], 'count': args.count, 'dist': args.dist, 'bins': args.bins}
        stats = {'shape': [Na, Nb], 'count': args.count, 'dist': args.dist,
                 'min': float(gaps.min()) if len(gaps) else None,
                 'max': float(gaps.max()) if len(gaps) else None,
                 'mean': float(gaps.mean()) if len(gaps) else None,
                 'maxPossible': upper}

        if args.format == 'csv' and args.out:
            ResultRecord(self.name, stats, table=samples, seed=seed, config=config).write(args.out, 'csv')
            stem, ext = os.path.splitext(args.out)
            ResultRecord(self.name, stats, table=hist, seed=seed, config=config).write(stem + '-hist' + (ext or '.csv'), 'csv')
            return

        stats['histogram'] = hist.to_dict(orient='list')
        record = ResultRecord(self.name, stats, table=samples, seed=seed, config=config)
        record.write(args.out, args.format)


PluginClass = GapSampleCommand
