"""
specint - Main Entry Point
Special-function evaluation, tabulation and verification from the command line
"""
import argparse
import asyncio
import importlib
import logging
import os
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from dotenv import load_dotenv

from utils.errors import InvalidParams, SpecialFunctionError
from utils.formatting import format_error, write_text
from utils.function_manager import FunctionManager, parse_function
from utils.schemas import FunctionId, SeriesControl

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)

USAGE_EXIT = 64
FUNCTION_PARAMS = ('alpha', 'beta', 'kappa', 'mu', 'nu', 'a')


def setup_logging():
    """stderr handler plus an optional file handler, level from SPECINT_LOG_LEVEL"""
    level_name = os.getenv('SPECINT_LOG_LEVEL', 'WARNING').upper()
    level = getattr(logging, level_name, None)
    if not isinstance(level, int):
        level = logging.WARNING
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    log_file = os.getenv('SPECINT_LOG_FILE')
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
    )


class UsageParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with 64"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


class SpecIntApp:
    """Main specint application class"""

    initial_extensions: List[str]

    def __init__(self):
        self.parser = UsageParser(prog="specint", description=__doc__.strip().splitlines()[-1])
        self.subparsers = self.parser.add_subparsers(dest="command", required=True, metavar="<eval|grid|check>")
        self.commands: Dict[str, object] = {}

        self.initial_extensions = [
            'commands.evaluate',
            'commands.grid',
            'commands.check',
        ]

    async def setup_hook(self):
        """Load every command module"""
        for extension in self.initial_extensions:
            module = importlib.import_module(extension)
            await module.setup(self)
            logger.info(f"Loaded extension: {extension}")

    def add_command(self, command):
        command.register(self.subparsers)
        self.commands[command.name] = command

    # Shared argument handling for the command modules

    @staticmethod
    def real(text: str) -> float:
        """A float, also accepting fractions such as 1/3"""
        try:
            return float(Fraction(text)) if "/" in text else float(text)
        except (ValueError, ZeroDivisionError):
            raise argparse.ArgumentTypeError(f"not a real number: {text!r}")

    def add_control_arguments(self, parser: argparse.ArgumentParser):
        parser.add_argument("--rel-tol", type=float, help="series relative tolerance (SPECINT_REL_TOL)")
        parser.add_argument("--max-terms", type=int, help="series term cap (SPECINT_MAX_TERMS)")

    def add_function_arguments(self, parser: argparse.ArgumentParser, required: bool):
        parser.add_argument("--fn", required=required,
                            help="family (ml, iml, whittaker_m, ..., lt_iml) or elementary name / elementary:<name>")
        for name in FUNCTION_PARAMS:
            parser.add_argument(f"--{name}", type=self.real)
        parser.add_argument("--p", type=int, help="numerator of a rational α = p/q")
        parser.add_argument("--q", type=int, help="denominator of a rational α = p/q")
        self.add_control_arguments(parser)

    def function_from_args(self, args: argparse.Namespace) -> FunctionId:
        params = {name: getattr(args, name) for name in FUNCTION_PARAMS if getattr(args, name) is not None}
        if (args.p is None) != (args.q is None):
            raise InvalidParams("--p and --q must be given together")
        if args.p is not None:
            params['p'] = args.p
            params['q'] = args.q
        return parse_function(args.fn, params)

    def function_manager(self, args: argparse.Namespace) -> FunctionManager:
        return FunctionManager(SeriesControl.from_env(args.rel_tol, args.max_terms))

    async def emit(self, text: str, output: Optional[str] = None):
        """Write to stdout, or to a file when --output is given"""
        if output:
            await write_text(output, text)
        else:
            sys.stdout.write(text)
            sys.stdout.flush()

    async def run(self, argv: Sequence[str]) -> int:
        """
        Parse argv and run one command

        Returns:
            Process exit code
        """
        if not self.commands:
            await self.setup_hook()
        try:
            args = self.parser.parse_args(list(argv))
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else USAGE_EXIT
        try:
            return await args.handler(args)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else USAGE_EXIT
        except SpecialFunctionError as e:
            message = format_error(e)
            logger.error(f"{args.command} failed: {message}")
            print(message, file=sys.stderr)
            return e.exit_code


async def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI once with a fresh application"""
    app = SpecIntApp()
    return await app.run(sys.argv[1:] if argv is None else argv)


def main():
    """Main function to run the CLI"""
    setup_logging()
    sys.exit(asyncio.run(run()))


if __name__ == "__main__":
    main()
