'''
.. Copyright (c) 2026 the pybell developers
   See the https://opensource.org/licenses/MIT for license details.
'''
from ..subcommand import SubcommandABC, clean_help

class SearchCommand(SubcommandABC):
    def __init__(self, subparsers):
        kwargs = {'help' : '''Search for observables maximizing the norm of the Bell operator
                  using a genetic algorithm, and analyze the extreme found.''',
                  'description' : '''The search is described by a run file (-r) or by
                  command-line options. The exit status is 0 if the best fitness is within
                  the target of sqrt(N_a N_b) ||W||, and 1 otherwise. With --verify, a
                  stored JSON record is re-checked instead.'''}

        super(SearchCommand, self).__init__('search', subparsers, kwargs)

    def addArgs(self, parser):
        parser.add_argument('-r', '--run', metavar='RUNFILE',
                            help=clean_help('''A run file of "key = value" lines. Options given
                            on the command line override --out, --format and --threads only.'''))

        self.addWeightArgs(parser, required=False)

        parser.add_argument('-d', '--dims', nargs=4, type=int, metavar=('Na', 'Nb', 'na', 'nb'),
                            help=clean_help('''Numbers of observables and Hilbert-space dimensions.
                            Default is the shape of the weight matrix with n_a = n_b = 2.'''))

        parser.add_argument('-c', '--constraint', default=None,
                            help=clean_help('''A structural constraint: "none", "tie:SIDE:I:J"
                            (observable I on side a or b becomes a function of observable J),
                            "commuting:a", "commuting:b" or "commuting:both".'''))

        parser.add_argument('-p', '--population', type=int, default=None,
                            help='Population size. Default is the value of GA.Population.')

        parser.add_argument('-g', '--generations', type=int, default=None,
                            help='Maximum generations. Default is the value of GA.Generations.')

        parser.add_argument('-P', '--noPolish', action='store_true',
                            help='Skip the hill-climbing polish of the best genome.')

        parser.add_argument('-t', '--target', type=float, default=None,
                            help=clean_help('''Largest acceptable deviation from sqrt(N_a N_b) ||W||.
                            Default is the value of Bell.SearchTarget.'''))

        parser.add_argument('-V', '--verify', metavar='RECORD',
                            help=clean_help('''Re-check a JSON record written by "bt search":
                            rebuild the stored configuration and recompute the norm of the
                            Bell operator. Fails if it differs from the stored fitness by more
                            than --tol (default 1e-12).'''))

        self.addCommonArgs(parser, tol=True)
        return parser

    def _runConfig(self, args):
        from ..error import CommandlineError
        from ..runConfig import RunConfig, readRunConfig
        from ..sources import weightSpecFromArgs

        if args.run:
            return readRunConfig(args.run)

        spec = weightSpecFromArgs(args)
        if not spec:
            raise CommandlineError('search requires a run file (-r) or a weight matrix')

        values = {'weight': spec}
        options = {'dims'       : ' '.join(map(str, args.dims)) if args.dims else None,
                   'constraint' : args.constraint,
                   'population' : args.population,
                   'generations': args.generations,
                   'seed'       : args.seed,
                   'polish'     : 'False' if args.noPolish else None,
                   'target'     : args.target}

        values.update({key: str(value) for key, value in options.items() if value is not None})
        return RunConfig(values, filename='<command line>')

    def verify(self, args):
        import numpy as np
        from ..error import EXIT_TARGET_MISSED
        from ..ga import SearchConstraint, fitness
        from ..log import getLogger
        from ..quantum import EprConfiguration, assembleBellOperator, bellOperatorNorm
        from ..record import ResultRecord, readRecord, checkRecordVersion
        from ..weights import WeightMatrix

        _logger = getLogger(__name__)

        stored = readRecord(args.verify)
        checkRecordVersion(stored)
        data = stored.data

        W = WeightMatrix(data['weight'])
        cfg = EprConfiguration.fromDict(data['bestConfig'])
        recomputed = bellOperatorNorm(assembleBellOperator(W, cfg))
        fromGenome = fitness(np.array(data['bestGenome']), W, data['dims'],
                             SearchConstraint.parse(data['constraint']))

        tol = 1e-12 if args.tol is None else args.tol
        deviation = max(abs(recomputed - data['bestFitness']), abs(fromGenome - data['bestFitness']))
        ok = deviation <= tol

        result = {'record'      : args.verify,
                  'stored'      : data['bestFitness'],
                  'recomputed'  : recomputed,
                  'fromGenome'  : fromGenome,
                  'deviation'   : deviation,
                  'tolerance'   : tol,
                  'verified'    : ok}

        record = ResultRecord('search-verify', result, prov=stored.provenance)
        record.write(args.out, args.format)

        if not ok:
            _logger.warning("verification of %s failed: deviation %.3g exceeds %.3g", args.verify, deviation, tol)
            return EXIT_TARGET_MISSED

    def run(self, args, tool):
        from ..config import getParamAsFloat
        from ..error import EXIT_TARGET_MISSED
        from ..ga import evolve
        from ..log import getLogger
        from ..record import ResultRecord

        _logger = getLogger(__name__)

        if args.verify:
            return self.verify(args)

        rc = self._runConfig(args)
        threads = args.threads if args.threads is not None else rc.threads
        out = args.out or rc.output
        fmt = args.format if args.run is None or args.out else rc.format

        result = evolve(rc.weights, rc.dims, rc.gaConfig, rc.constraint, threads=threads)

        target = rc.target if rc.target is not None else getParamAsFloat('Bell.SearchTarget')
        targetMet = result.thm1Deviation <= target

        data = result.asDict()
        data['weight'] = rc.weights.entries
        data['target'] = target
        data['targetMet'] = targetMet

        record = ResultRecord(self.name, data, seed=rc.seed, config=rc.asDict())
        record.write(out, fmt)

        if not targetMet:
            _logger.warning("best fitness %.12g misses sqrt(N_a N_b)||W|| = %.12g by %.3g (target %.3g)",
                            result.bestFitness, result.thm1, result.thm1Deviation, target)
            return EXIT_TARGET_MISSED


PluginClass = SearchCommand
