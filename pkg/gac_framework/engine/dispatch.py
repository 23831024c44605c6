from typing import Mapping, Optional, Tuple

from ..core import Instance, VarId, Value
from ..utils.logging import get_logger
from .questions import QUESTIONS, QuestionResult, gac_domain, gac_support, is_it_gac, max_gac, no_gac_wipeout
from .reducers import (
    gac_domain_via_support, gac_support_via_domain, gac_support_via_wipeout, is_it_gac_via_maxgac,
    max_gac_via_support, no_gac_wipeout_via_support,
)
from .search import SearchBudget

logger = get_logger(__name__)

ENGINES = {
    ("gac-support", "generic"): gac_support,
    ("gac-support", "via-wipeout"): gac_support_via_wipeout,
    ("gac-support", "via-domain"): gac_support_via_domain,
    ("is-it-gac", "generic"): is_it_gac,
    ("is-it-gac", "via-maxgac"): is_it_gac_via_maxgac,
    ("no-gac-wipeout", "generic"): no_gac_wipeout,
    ("no-gac-wipeout", "via-support"): no_gac_wipeout_via_support,
    ("gac-domain", "generic"): gac_domain,
    ("gac-domain", "via-support"): gac_domain_via_support,
    ("max-gac", "generic"): max_gac,
    ("max-gac", "via-support"): max_gac_via_support,
}


def engines_for(question: str):
    return [engine for q, engine in ENGINES if q == question]


def ask(instance: Instance, question: str, budget: Optional[SearchBudget] = None, engine: str = "generic",
        var: VarId = None, value: Value = None,
        candidate: Mapping[VarId, Tuple[Value, ...]] = None) -> QuestionResult:
    """
    Answer one of the five questions by name with the chosen engine.

    gac-support needs var and value, max-gac needs candidate.
    """
    if question not in QUESTIONS:
        raise ValueError(f"Unknown question {question!r}; expected one of {', '.join(QUESTIONS)}")
    function = ENGINES.get((question, engine))
    if function is None:
        raise ValueError(f"No engine {engine!r} for {question}; available: {', '.join(engines_for(question))}")

    logger.debug("%s with %s engine on %s", question, engine, instance.constraint.kind)
    if question == "gac-support":
        if var is None or value is None:
            raise ValueError("gac-support needs a variable and a value")
        return function(instance, var, value, budget)
    if question == "max-gac":
        if candidate is None:
            raise ValueError("max-gac needs a candidate domain")
        return function(instance, candidate, budget)
    return function(instance, budget)
