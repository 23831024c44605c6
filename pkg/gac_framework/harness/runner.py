import time
import traceback
from typing import Callable

from ..core import BudgetExhaustedError, GacError, UnsupportedInstanceError
from ..utils.logging import get_logger
from .context import RunContext
from .reports import RunReport

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_UNSUPPORTED = 4

# first match wins, subclasses before their bases
EXIT_CODES = (
    (BudgetExhaustedError, EXIT_BUDGET),
    (UnsupportedInstanceError, EXIT_UNSUPPORTED),
    (GacError, EXIT_USAGE),
    (ValueError, EXIT_USAGE),
    (OSError, EXIT_USAGE),
)


def exit_code_for(error: Exception) -> int:
    for error_type, code in EXIT_CODES:
        if isinstance(error, error_type):
            return code
    return EXIT_FAILURE


class Runner:
    def __init__(self):
        self.run_context = None

    def set_context(self, run_context: RunContext):
        """Set the run context handed to every command"""
        self.run_context = run_context

    def execute(self, command: str, func: Callable[..., RunReport], args: dict) -> RunReport:
        """Run one command and turn any failure into an error report with its exit code."""
        started = time.perf_counter()
        try:
            report = func(self.run_context, **args)
        except Exception as e:
            code = exit_code_for(e)
            report = RunReport(command=command, error=str(e), exit_code=code)
            report.extra["errorType"] = type(e).__name__
            if isinstance(e, BudgetExhaustedError):
                report.tuples_explored = e.tuples_explored
            if code == EXIT_FAILURE:
                report.extra["traceback"] = traceback.format_exc()
                logger.error("%s failed unexpectedly: %s", command, e)
        report.elapsed_ms = (time.perf_counter() - started) * 1000
        return report
