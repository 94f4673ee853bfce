"""
Boolean ring kit command line.

    python main.py                       # interactive REPL
    python main.py --script demo.br      # batch mode, exit code per error class
    python main.py --script demo.br --json --oracle-max 3
"""

import argparse
import logging
import sys

from src.cli.evaluator import Session
from src.cli.runner import Output, run_repl, run_script
from src.config import config
from src.error_handling.exceptions import BoolRingBaseException
from src.error_handling.logging import setup_error_logging


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Primary decomposition and spectra of Boolean rings.")
    parser.add_argument("--script", type=str, default=None,
                        help="Run a script file instead of the REPL.")
    parser.add_argument("--json", action="store_true",
                        help="Print one JSON report per statement on stdout.")
    parser.add_argument("--ground-max", type=int, default=None,
                        help=f"Largest ground set accepted (default {config.GROUND_MAX}).")
    parser.add_argument("--oracle-max", type=int, default=None,
                        help=f"Largest ground size for exhaustive oracles (default {config.ORACLE_MAX}, "
                             f"at most {config.ORACLE_HARD_CAP}).")
    parser.add_argument("--seed", type=int, default=None,
                        help=f"Seed for randomized checks (default {config.RANDOM_SEED}).")
    parser.add_argument("--log-level", type=str, default=None,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
                        help="Console log level on stderr.")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config.override(GROUND_MAX=args.ground_max, ORACLE_MAX=args.oracle_max,
                        RANDOM_SEED=args.seed, LOG_LEVEL=args.log_level)
    except BoolRingBaseException as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code

    setup_error_logging(
        console_level=getattr(logging, config.LOG_LEVEL.upper()),
        log_file=config.LOG_FILE_PATH or None,
        json_format=config.LOG_JSON,
    )
    output = Output(sys.stdout, sys.stderr, json_output=args.json)

    if args.script:
        try:
            return run_script(args.script, output=output, session=Session())
        except BoolRingBaseException as e:
            return output.error("", e)

    run_repl(sys.stdin, Session(), output, prompt=sys.stdin.isatty())
    return 0


if __name__ == "__main__":
    sys.exit(main())
