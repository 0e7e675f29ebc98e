from .bellmat_plugin import BellmatCommand
from .boundsPlot_plugin import BoundsPlotCommand
from .config_plugin import ConfigCommand
from .gapSample_plugin import GapSampleCommand
from .hvVerify_plugin import HvVerifyCommand
from .norms_plugin import NormsCommand
from .report_plugin import ReportCommand
from .search_plugin import SearchCommand

BuiltinSubcommands = [BellmatCommand, BoundsPlotCommand, ConfigCommand,
                      GapSampleCommand, HvVerifyCommand, NormsCommand,
                      ReportCommand, SearchCommand]
