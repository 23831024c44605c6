import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class RunReport:
    command: str
    question: Optional[str] = None
    answer: Optional[bool] = None
    witness: Optional[Dict[str, Any]] = None
    tuples_explored: int = 0
    elapsed_ms: float = 0.0
    engine: str = "generic"
    extra: Dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None
    exit_code: int = 0

    def to_dict(self) -> dict:
        record = {
            "command": self.command,
            "question": self.question,
            "answer": self.answer,
            "witness": self.witness,
            "tuplesExplored": self.tuples_explored,
            "elapsedMs": round(self.elapsed_ms, 3),
            "engine": self.engine,
        }
        record.update(self.extra)
        if self.error is not None:
            record["error"] = self.error
            record["answer"] = None
        return record


OUTCOMES = ("agree", "disagree", "incomplete", "skipped", "covered", "shortfall")
FAILING_OUTCOMES = ("disagree", "shortfall")


class SuiteReport:
    """
    Accumulates case records for one suite run, in case order.

    Outcomes: agree and disagree for compared answers, incomplete for a
    sound-only gadget missing a yes, skipped for undecided cases, covered and
    shortfall for a gadget family's count of decided cases. The run fails on
    any disagree or shortfall.
    """

    def __init__(self, suite: str, seed: int):
        self.suite = suite
        self.seed = seed
        self.cases: List[dict] = []
        self.failures: List[dict] = []
        self.tallies = {outcome: 0 for outcome in OUTCOMES}

    def add_case(self, case: dict, outcome: str):
        """Record a case under one of the tally outcomes"""
        case = dict(case, index=len(self.cases), outcome=outcome)
        self.cases.append(case)
        self.tallies[outcome] += 1
        if outcome in FAILING_OUTCOMES:
            self.failures.append(case)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "cases": len(self.cases),
            "tallies": dict(self.tallies),
            "failures": [failure.get("name", failure["index"]) for failure in self.failures],
            "passed": self.passed,
        }


def render(record: dict, output_format: str = "json") -> str:
    """One report line: canonical JSON, or `key=value` pairs for text output"""
    if output_format == "text":
        return " ".join(f"{key}={json.dumps(value, sort_keys=True)}" for key, value in record.items())
    return json.dumps(record, sort_keys=True)
