'''
.. Copyright (c) 2026 the pybell developers
   See the https://opensource.org/licenses/MIT for license details.
'''
from ..subcommand import SubcommandABC, clean_help

class BoundsPlotCommand(SubcommandABC):
    def __init__(self, subparsers):
        kwargs = {'help' : '''Write plot data comparing, for Bell matrices of dimension N, the
                  quantum bound 2N cos(pi/2N) with the Grothendieck bound K_G(N) ||X||*,
                  optionally with the values reached by explicit configurations.'''}

        super(BoundsPlotCommand, self).__init__('bounds-plot', subparsers, kwargs)

    def addArgs(self, parser):
        parser.add_argument('-m', '--minN', type=int, default=2,
                            help='Smallest N. Default is 2.')

        parser.add_argument('-M', '--maxN', type=int, default=10,
                            help='Largest N. Default is 10.')

        parser.add_argument('-a', '--analytic', action='store_true',
                            help=clean_help('''Add the norm reached by the qubit configuration
                            built for Z0 of each dimension.'''))

        parser.add_argument('-G', '--ga', action='store_true',
                            help=clean_help('''Add the norm found by a genetic-algorithm search with
                            (N, 2, 2) dimensions for a random Bell matrix of each dimension, generated
                            from --seed.'''))

        parser.add_argument('-p', '--population', type=int, default=None,
                            help='GA population size. Default is the value of GA.Population.')

        parser.add_argument('-g', '--generations', type=int, default=None,
                            help='GA generations. Default is the value of GA.Generations.')

        self.addCommonArgs(parser)
        parser.set_defaults(format='csv')
        return parser

    def run(self, args, tool):
        import pandas as pd
        from ..error import CommandlineError
        from ..ga import GaConfig, evolve
        from ..quantum import assembleBellOperator, bellOperatorNorm, bellMatrixExtreme
        from ..record import ResultRecord
        from ..weights import canonicalZ0, generateBellMatrix, grothendieckConstant

        if not 2 <= args.minN <= args.maxN:
            raise CommandlineError('bounds-plot requires 2 <= minN <= maxN')

        seed = args.seed or 0
        gaConfig = GaConfig(population=args.population, generations=args.generations,
                            seed=seed) if args.ga else None

        rows = []
        for N in range(args.minN, args.maxN + 1):
            Z = canonicalZ0(N)
            thm1 = N * Z.norm
            thm2 = grothendieckConstant(N) * Z.hvNorm
            row = {'N': N, 'thm1': thm1, 'thm2': thm2, 'ratio': thm2 / thm1}

            if args.analytic:
                cfg, _psi = bellMatrixExtreme(Z)
                row['analytic'] = bellOperatorNorm(assembleBellOperator(Z, cfg))

            if args.ga:
                X = generateBellMatrix(N, seed)
                result = evolve(X, (N, N, 2, 2), gaConfig, threads=args.threads)
                row['ga'] = result.bestFitness

            rows.append(row)

        table = pd.DataFrame(rows)
        config = {'minN': args.minN, 'maxN': args.maxN, 'analytic': args.analytic,
                  'ga': gaConfig.asDict() if gaConfig else None}

        record = ResultRecord(self.name, {'rows': len(rows)}, table=table, seed=seed, config=config)
        record.write(args.out, args.format)


PluginClass = BoundsPlotCommand
