'''
.. Copyright (c) 2026 the pybell developers
   See the https://opensource.org/licenses/MIT for license details.
'''
from ..subcommand import SubcommandABC, clean_help

class BellmatCommand(SubcommandABC):
    def __init__(self, subparsers):
        kwargs = {'help' : '''Generate, validate, or reduce Bell matrices: square matrices
                  with two entries of +1 or -1 in each row and column, an irreducible
                  support pattern, and an odd number of -1 entries.''',
                  'description' : '''"gen" creates a random Bell matrix of dimension N from
                  --seed; "validate" checks a weight matrix and reports the failed condition;
                  "reduce" finds signed permutations Pr, Pc with Pr X Pc = Z0.'''}

        super(BellmatCommand, self).__init__('bellmat', subparsers, kwargs)

    def addArgs(self, parser):
        parser.add_argument('action', choices=['gen', 'validate', 'reduce'],
                            help='The operation to perform.')

        parser.add_argument('-N', '--dimension', type=int, default=None,
                            help='The dimension of the matrix to generate (for "gen").')

        parser.add_argument('-W', '--weightFile', default=None,
                            help=clean_help('''For "gen", also write the matrix to this file in
                            weight-file format, for use with "-w file:PATH".'''))

        self.addWeightArgs(parser, required=False)
        self.addCommonArgs(parser, threads=False)
        return parser

    def run(self, args, tool):
        from ..error import CommandlineError
        from ..record import ResultRecord
        from ..sources import weightSourceFromArgs, formatWeightText
        from ..weights import generateBellMatrix, validateBellMatrix, reduceToZ0

        seed = args.seed or 0

        if args.action == 'gen':
            if not args.dimension:
                raise CommandlineError('bellmat gen requires -N/--dimension')

            X = generateBellMatrix(args.dimension, seed)
            if args.weightFile:
                with open(args.weightFile, 'w') as f:
                    f.write(formatWeightText(X))

        else:
            X = validateBellMatrix(weightSourceFromArgs(args))

        data = {'action'    : args.action,
                'N'         : X.N,
                'matrix'    : X.entries,
                'minusCount': X.minusCount,
                'norm'      : X.norm,
                'opNorm'    : X.opNorm}

        if args.action == 'reduce':
            Pr, Pc = reduceToZ0(X)
            data['Pr'] = Pr
            data['Pc'] = Pc

        config = {'action': args.action, 'matrix': data['matrix'], 'seed': seed}
        record = ResultRecord(self.name, data, seed=seed, config=config)
        record.write(args.out, args.format)


PluginClass = BellmatCommand
