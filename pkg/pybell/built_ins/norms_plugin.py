'''
.. Copyright (c) 2026 the pybell developers
   See the https://opensource.org/licenses/MIT for license details.
'''
from ..subcommand import SubcommandABC, clean_help

class NormsCommand(SubcommandABC):
    def __init__(self, subparsers):
        kwargs = {'help' : '''Report the operator, Schmidt and hidden-variable norms of a
                  weight matrix, its quantum bounds, quantum gap, and a zero-gap
                  certificate if one exists.'''}

        super(NormsCommand, self).__init__('norms', subparsers, kwargs)

    def addArgs(self, parser):
        self.addWeightArgs(parser)
        self.addCommonArgs(parser, tol=True)

        parser.add_argument('-n', '--noCertificate', action='store_true',
                            help=clean_help('''Skip the search for a zero-gap certificate.'''))

        return parser

    def run(self, args, tool):
        import math
        from ..record import ResultRecord
        from ..sources import weightSourceFromArgs
        from ..weights import BellMatrix, quantumGap, theoremBounds, grothendieckWindow, hvNormArgmax

        W = weightSourceFromArgs(args)

        hv, a, b = hvNormArgmax(W, threads=args.threads)
        thm1, thm2, _hv = theoremBounds(W)

        data = {
            'weight'     : W.entries,
            'opNorm'     : W.opNorm,
            'hvNorm'     : hv,
            'schmidtNorm': W.schmidtNorm,
            'thm1'       : thm1,
            'thm2'       : thm2,
            'window'     : grothendieckWindow(W),
            'hvArgmax'   : {'a': a, 'b': b},
        }

        if not W.isZero():
            gap = quantumGap(W, tol=args.tol, certificate=not args.noCertificate)
            data['absoluteGap'] = gap.absoluteGap
            data['scaledGap'] = gap.scaledGap
            data['maxScaledGap'] = math.sqrt(W.rows * W.cols) - 1
            data['certificate'] = gap.certificate.asDict() if gap.certificate else None

        if isinstance(W, BellMatrix):
            data['minusCount'] = W.minusCount
            data['bellNorm'] = W.norm

        config = {'weight': data['weight'], 'tol': args.tol}
        record = ResultRecord(self.name, data, seed=args.seed, config=config)
        record.write(args.out, args.format)


PluginClass = NormsCommand
