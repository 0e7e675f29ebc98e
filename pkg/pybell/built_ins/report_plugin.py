'''
.. Copyright (c) 2026 the pybell developers
   See the https://opensource.org/licenses/MIT for license details.
'''
from ..subcommand import SubcommandABC, clean_help

class ReportCommand(SubcommandABC):
    def __init__(self, subparsers):
        kwargs = {'help' : '''Render stored JSON records as a table. Search records become
                  rows of the "Bell Model Extremes" table: dimensions, Thm 1 and sum-rule
                  deviations, entropies of the two leading eigenstates, and the count of
                  quantum extremes.'''}

        super(ReportCommand, self).__init__('report', subparsers, kwargs)

    def addArgs(self, parser):
        parser.add_argument('records', nargs='+',
                            help='JSON records written by other sub-commands.')

        parser.add_argument('-o', '--out', default=None,
                            help='Write the table to this file instead of standard output.')

        parser.add_argument('-f', '--format', choices=('md', 'csv'), default='md',
                            help='Output format. Default is md.')

        return parser

    def run(self, args, tool):
        import pandas as pd
        from ..record import ResultRecord, readRecord

        records = [readRecord(path) for path in args.records]
        tables = [r.summaryTable().assign(record=path) for r, path in zip(records, args.records)]
        table = pd.concat(tables, ignore_index=True, sort=False)

        prov = {'sources': [r.provenance for r in records]}
        report = ResultRecord(self.name, {'records': args.records}, table=table, prov=prov)
        report.write(args.out, args.format)


PluginClass = ReportCommand
