"""
Grid command for specint
Tabulates a function, or a figure preset of several curves, as CSV
"""
import argparse
import logging
from typing import List

from utils.errors import SpecialFunctionError
from utils.formatting import CSV_HEADER, PRESET_CSV_HEADER, csv_lines, csv_row, format_error
from utils.function_manager import FIGURE_PRESETS, figure_preset
from utils.schemas import GridSpec, Spacing

logger = logging.getLogger(__name__)


class Grid:
    """Grid tabulation"""

    name = "grid"

    def __init__(self, app):
        self.app = app
        self.parser = None

    def register(self, subparsers) -> argparse.ArgumentParser:
        parser = subparsers.add_parser(self.name, help="tabulate a function on a grid as CSV")
        self.app.add_function_arguments(parser, required=False)
        parser.add_argument("--min", dest="x_min", type=self.app.real, help="first abscissa")
        parser.add_argument("--max", dest="x_max", type=self.app.real, help="last abscissa")
        parser.add_argument("--points", type=int, help="number of abscissae, >= 2")
        parser.add_argument("--spacing", choices=[s.value for s in Spacing], help="linear (default) or log")
        parser.add_argument("--fig", choices=list(FIGURE_PRESETS), help="emit a preset family of curves")
        parser.add_argument("--output", help="write the CSV to this file instead of stdout")
        parser.set_defaults(handler=self.handle)
        self.parser = parser
        return parser

    async def handle(self, args: argparse.Namespace) -> int:
        """
        Emit CSV rows in grid order

        Returns:
            0, or the highest exit code among failing rows
        """
        functions = self.app.function_manager(args)
        spacing = Spacing(args.spacing) if args.spacing else None

        if args.fig:
            preset = figure_preset(args.fig, args.points, spacing)
            curves = list(preset.curves)
            xs = preset.grid.abscissae()
            header = PRESET_CSV_HEADER
        else:
            if args.fn is None or args.x_min is None or args.x_max is None or args.points is None:
                self.parser.error("grid needs --fn, --min, --max and --points unless --fig is given")
            grid = GridSpec(args.x_min, args.x_max, args.points, spacing or Spacing.LINEAR)
            curves = [(None, self.app.function_from_args(args))]
            xs = grid.abscissae()
            header = CSV_HEADER

        rows: List[List[str]] = [header]
        exit_code = 0
        for label, fn in curves:
            outcomes = await functions.tabulate(fn, xs)
            for x, outcome in zip(xs, outcomes):
                if isinstance(outcome, SpecialFunctionError):
                    logger.warning(f"row x={x}{' ' + label if label else ''} failed: {format_error(outcome)}")
                    exit_code = max(exit_code, outcome.exit_code)
                rows.append(csv_row(x, outcome, label))

        await self.app.emit(csv_lines(rows), args.output)
        return exit_code


async def setup(app):
    """Setup function to add the command to the app"""
    app.add_command(Grid(app))
