"""
Batch and interactive front ends.

Batch mode parses the whole script first, then evaluates statement by
statement and stops at the first error, returning that error's exit code.
The REPL reports errors and keeps going.
"""

import logging
import sys
from pathlib import Path
from typing import Iterable, List, Optional, TextIO

from src.error_handling.decorators import with_error_handling
from src.error_handling.exceptions import BoolRingBaseException, ErrorSeverity, InvalidInputException
from src.error_handling.logging import get_error_logger
from src.schemas import dumps
from .evaluator import Report, Session, error_model, error_report, evaluate
from .parser import format_statement, parse

logger = logging.getLogger("boolring.cli")

PROMPT = "boolring> "


class Output:
    """
    Writes reports as text or as one JSON object per line. A statement with its
    own schema (decompose) prints that object; the rest print a ReportModel.
    """

    def __init__(self, out: TextIO, err: TextIO, json_output: bool = False):
        self.out = out
        self.err = err
        self.json_output = json_output

    def report(self, report: Report) -> None:
        if self.json_output:
            print(dumps(report.model if report.model is not None else report.to_model()), file=self.out)
        elif report.text:
            print(report.text, file=self.out)

    def error(self, statement: str, error: BoolRingBaseException) -> int:
        if error.severity is ErrorSeverity.CRITICAL:
            get_error_logger().log_error(error)
        if self.json_output:
            print(dumps(error_model(error_report(statement, error), error)), file=self.out)
        else:
            print(f"error: {error}", file=self.err)
        return error.exit_code


def run_source(source: str, session: Optional[Session] = None, output: Optional[Output] = None) -> int:
    """Evaluate a script; returns 0 or the exit code of the first failure."""
    session = session or Session()
    output = output or Output(sys.stdout, sys.stderr)
    try:
        statements = parse(source)
    except BoolRingBaseException as e:
        return output.error("", e)

    for stmt in statements:
        try:
            report = evaluate(session, stmt)
        except BoolRingBaseException as e:
            return output.error(format_statement(stmt), e)
        output.report(report)
        if not report.ok:
            return report.exit_code
    return 0


@with_error_handling()
def run_script(path: str, output: Optional[Output] = None, session: Optional[Session] = None) -> int:
    script = Path(path)
    if not script.is_file():
        raise InvalidInputException(f"Script '{path}' not found", field="script")
    logger.info(f"Running script {script}")
    return run_source(script.read_text(encoding="utf-8"), session, output)


def _meta(line: str, output: Output) -> Optional[bool]:
    """Handle a ':' command. Returns False to quit, True if handled."""
    words = line[1:].split()
    if words == ["quit"] or words == ["q"]:
        return False
    if len(words) == 2 and words[0] == "json" and words[1] in ("on", "off"):
        output.json_output = words[1] == "on"
        return True
    print(f"error: unknown meta command '{line}'; try :quit or :json on|off", file=output.err)
    return True


def run_repl(
    lines: Iterable[str],
    session: Optional[Session] = None,
    output: Optional[Output] = None,
    prompt: bool = False,
) -> List[int]:
    """
    Read-eval-print over the given lines. Never stops on a user error;
    returns the exit codes of the statements that failed.
    """
    session = session or Session()
    output = output or Output(sys.stdout, sys.stderr)
    failures: List[int] = []
    if prompt:
        print(PROMPT, end="", file=output.out, flush=True)
    for line in lines:
        stripped = line.strip()
        if stripped.startswith(":"):
            if _meta(stripped, output) is False:
                break
        elif stripped:
            code = run_source(line, session, output)
            if code:
                failures.append(code)
        if prompt:
            print(PROMPT, end="", file=output.out, flush=True)
    return failures
