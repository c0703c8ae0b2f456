"""
Evaluate command for specint
Point evaluation of any registered function: `specint eval --fn ... --x ...`
"""
import argparse
import logging

from utils.formatting import format_record

logger = logging.getLogger(__name__)


class Evaluate:
    """Point evaluation"""

    name = "eval"

    def __init__(self, app):
        self.app = app

    def register(self, subparsers) -> argparse.ArgumentParser:
        parser = subparsers.add_parser(self.name, help="evaluate one function at one point")
        self.app.add_function_arguments(parser, required=True)
        parser.add_argument("--x", type=self.app.real, required=True,
                            help="abscissa (the Laplace variable s for lt_ml / lt_iml)")
        parser.add_argument("--json", action="store_true", help="emit a JSON record")
        parser.set_defaults(handler=self.handle)
        return parser

    async def handle(self, args: argparse.Namespace) -> int:
        """Evaluate and print value, est_error and work; errors propagate to the entry point"""
        fn = self.app.function_from_args(args)
        functions = self.app.function_manager(args)
        result = functions.evaluate(fn, args.x)
        logger.debug(f"{fn.family.value}{fn.params} at x={args.x}: work={result.work}")
        await self.app.emit(format_record(args.x, result, as_json=args.json))
        return 0


async def setup(app):
    """Setup function to add the command to the app"""
    app.add_command(Evaluate(app))
