"""
Check command for specint
Runs the fixture and identity suites and reports per-case relative errors
"""
import argparse
import logging

from utils.check_manager import SUITE_ALIASES, SUITES, CheckManager
from utils.formatting import format_report, format_report_json

logger = logging.getLogger(__name__)


class Check:
    """Fixture and identity verification"""

    name = "check"

    def __init__(self, app):
        self.app = app

    def register(self, subparsers) -> argparse.ArgumentParser:
        parser = subparsers.add_parser(self.name, help="run verification suites")
        parser.add_argument("--suite", choices=list(SUITES) + list(SUITE_ALIASES) + ["all"], default="all")
        parser.add_argument("--report", choices=["text", "json"], default="text")
        parser.add_argument("--json", action="store_true", help="same as --report json")
        parser.add_argument("--include-unverified", action="store_true",
                            help="also evaluate unverified table rows (reported, never failing)")
        parser.add_argument("--output", help="write the report to this file instead of stdout")
        self.app.add_control_arguments(parser)
        parser.set_defaults(handler=self.handle)
        return parser

    async def handle(self, args: argparse.Namespace) -> int:
        """
        Run the suite and print its report

        Returns:
            0 when every asserted case passes, 1 otherwise
        """
        manager = CheckManager(self.app.function_manager(args))
        report = await manager.run(args.suite, args.include_unverified)
        as_json = args.json or args.report == "json"
        await self.app.emit(format_report_json(report) if as_json else format_report(report), args.output)
        if report.failures:
            logger.error(f"check {args.suite} failed: {' '.join(c.id for c in report.failures)}")
            return 1
        return 0


async def setup(app):
    """Setup function to add the command to the app"""
    app.add_command(Check(app))
