import argparse
import json
import sys
from typing import List, Optional

import structlog
from pydantic import ValidationError

from common.exceptions import ValidationException
from core.command_config import COMMAND_MAP
from core.config import settings
from core.logging_config import configure_logging
from schemas.command import CommandConfig, CommandResult, FormatEnum
from services.command_manager import CommandManager

logger = structlog.get_logger()


class _Parser(argparse.ArgumentParser):
    """argparse that reports problems as a ValidationException instead of exiting."""

    def error(self, message):
        raise ValidationException(message=message)


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=[f.value for f in FormatEnum], default="text")
    parser.add_argument("--output", help="write the result here instead of stdout")
    parser.add_argument("--log-level", default=None, help=f"default {settings.LOG_LEVEL}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="thom-residue", description="Residue computations for Thom polynomials and jet differentials")
    commands = parser.add_subparsers(dest="command", parser_class=_Parser)
    commands.required = True
    sub = {name: commands.add_parser(name, help=entry["help"]) for name, entry in COMMAND_MAP.items()}
    for parser_ in sub.values():
        _common(parser_)

    sub["tp"].add_argument("--k", type=int, required=True)
    sub["tp"].add_argument("--codim", type=int, default=0, help="relative codimension (default 0)")
    sub["tp"].add_argument("--q", help="Q polynomial JSON file (needed for k >= 6)")

    sub["verify-table1"].add_argument("--kmax", type=int, required=True)
    sub["verify-table1"].add_argument("--q", help="replace the Q polynomial for its k")

    sub["scan"].add_argument("--k", type=int, required=True)
    sub["scan"].add_argument(
        "--radius", type=int, default=settings.DEFAULT_SCAN_RADIUS,
        help=f"box radius (default {settings.DEFAULT_SCAN_RADIUS})",
    )
    sub["scan"].add_argument("--q", help="Q polynomial JSON file")

    sub["tp3"].add_argument("--radius", type=int, default=6, help="box radius (default 6)")

    sub["ggl"].add_argument("--n", type=int, required=True)
    sub["ggl"].add_argument("--delta", help="p/q (default 1/(n^3(n+1)))")
    sub["ggl"].add_argument("--suite", action="store_true", help="also run the inequality suite")

    sub["mdeg"].add_argument("--ideal", required=True, help="monomial ideal JSON file")
    sub["mdeg"].add_argument("--weights", required=True, help="weight assignment JSON file")

    sub["oracle"].add_argument("--k", type=int, required=True)
    sub["oracle"].add_argument("--n", type=int, required=True)
    sub["oracle"].add_argument("--seed", type=int, required=True)
    sub["oracle"].add_argument("--trials", type=int, default=1, help="weight draws (default 1)")
    sub["oracle"].add_argument("--q", help="Q polynomial JSON file (default: random from the seed)")

    sub["residue"].add_argument("--spec", required=True, help="residue spec JSON file")
    return parser


def _render(result: CommandResult, fmt: FormatEnum) -> str:
    if fmt == FormatEnum.JSON:
        return json.dumps(result.payload or {}, indent=2, sort_keys=True) + "\n"
    return result.text + "\n"


def _fail(message: str) -> int:
    print(f"error: {message.splitlines()[0] if message else 'invalid input'}", file=sys.stderr)
    return 2


def dispatch(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except ValidationException as e:
        return _fail(e.message)
    except SystemExit as e:
        # --help
        return int(e.code or 0)

    configure_logging(args.log_level)
    options = {key: value for key, value in vars(args).items() if key != "log_level"}
    try:
        config = CommandConfig(**options)
    except ValidationError as e:
        first = e.errors()[0]
        return _fail(f"--{first['loc'][0]}: {first['msg']}")

    result = CommandManager().execute_command(config)
    if result.error:
        if result.exit_code == 2:
            return _fail(result.error)
        print(f"error: {result.error}", file=sys.stderr)
        return result.exit_code

    output = _render(result, config.format)
    if config.output:
        with open(config.output, "w", encoding="utf-8") as handle:
            handle.write(output)
    else:
        sys.stdout.write(output)
    return result.exit_code


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
