from .dispatch import ENGINES, ask, engines_for
from .questions import (
    QUESTIONS, QuestionResult, gac_domain, gac_support, is_it_gac, max_gac, no_gac_wipeout, superset_sweep_max_gac,
)
from .reducers import (
    gac_domain_via_support, gac_support_via_domain, gac_support_via_wipeout, is_it_gac_via_maxgac,
    max_gac_via_support, no_gac_wipeout_via_support,
)
from .search import BudgetMeter, SearchBudget, enumerate_tuples, search_space, seek_support

__all__ = [
    "ENGINES", "ask", "engines_for",
    "QUESTIONS", "QuestionResult", "gac_domain", "gac_support", "is_it_gac", "max_gac", "no_gac_wipeout",
    "superset_sweep_max_gac",
    "gac_domain_via_support", "gac_support_via_domain", "gac_support_via_wipeout", "is_it_gac_via_maxgac",
    "max_gac_via_support", "no_gac_wipeout_via_support",
    "BudgetMeter", "SearchBudget", "enumerate_tuples", "search_space", "seek_support",
]
