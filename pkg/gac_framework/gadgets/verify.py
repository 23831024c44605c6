import time
from dataclasses import asdict, dataclass
from typing import Any, Optional

from ..core import BudgetExhaustedError
from ..engine import SearchBudget
from ..utils.logging import get_logger
from .oracles import oracle_solve, validate_certificate
from .output import GadgetOutput
from .sources import SourceProblem

logger = get_logger(__name__)


@dataclass
class VerificationReport:
    family: str
    question: str
    engine_answer: Optional[bool]
    oracle_answer: bool
    agree: Optional[bool]
    outcome: str = "undecided"
    certificate: Any = None
    certificate_valid: Optional[bool] = None
    tuples_explored: int = 0
    elapsed_ms: float = 0.0
    error: Optional[str] = None

    def to_dict(self) -> dict:
        data = asdict(self)
        if isinstance(data["certificate"], tuple):
            data["certificate"] = list(data["certificate"])
        return data


def _outcome(gadget: GadgetOutput, report: VerificationReport) -> str:
    if report.error is not None:
        return "undecided"
    if report.agree:
        return "disagree" if report.certificate_valid is False else "agree"
    if not gadget.complete and report.oracle_answer and report.engine_answer is False:
        return "incomplete"
    return "disagree"


def verify_gadget(gadget: GadgetOutput, source: SourceProblem,
                  budget: Optional[SearchBudget] = None) -> VerificationReport:
    """
    Ask the gadget's question, solve the source with its oracle and compare.

    `agree` is plain equality of the two answers. `outcome` is the verdict:
    "agree" when they match and any decoded certificate is valid, "incomplete"
    when a sound-only gadget says no to a satisfiable source, "disagree"
    otherwise, and "undecided" when the budget ran out. When both say yes the
    witness is decoded and checked against the source. Budget exhaustion is
    reported in `error`, never raised.
    """
    started = time.perf_counter()
    oracle_answer, _ = oracle_solve(source)
    report = VerificationReport(gadget.family, gadget.question, None, oracle_answer, None)

    try:
        result = gadget.ask(budget)
        report.engine_answer = result.answer
        report.tuples_explored = result.tuples_explored
        report.agree = result.answer == oracle_answer

        if result.answer and oracle_answer and gadget.decode is not None:
            witness = gadget.witness(result, budget)
            if witness is not None:
                report.certificate = gadget.decode(witness)
                report.certificate_valid = validate_certificate(source, report.certificate)
    except BudgetExhaustedError as e:
        report.error = str(e)
        report.tuples_explored = e.tuples_explored
        logger.warning("%s: %s", gadget.family, e)

    report.elapsed_ms = (time.perf_counter() - started) * 1000
    report.outcome = _outcome(gadget, report)
    if report.outcome == "disagree":
        logger.warning("%s: engine says %s, oracle says %s", gadget.family, report.engine_answer, oracle_answer)
    elif report.outcome == "incomplete":
        logger.info("%s: sound-only gadget misses a satisfiable source", gadget.family)
    return report
