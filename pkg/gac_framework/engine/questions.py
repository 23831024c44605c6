"""
The five consistency questions, answered directly by exhaustive support search.
"""
import itertools
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Tuple

from ..core import DomainMap, Instance, InstanceError, VarId, Value, is_wiped_out, wipeout_normal_form
from ..utils.logging import get_logger
from .search import BudgetMeter, SearchBudget, find_satisfying, meter_for, require_pair, seek_in

logger = get_logger(__name__)

QUESTIONS = ("gac-support", "is-it-gac", "no-gac-wipeout", "max-gac", "gac-domain")


@dataclass
class QuestionResult:
    question: str
    answer: bool
    witness: Optional[Dict[VarId, Value]] = None
    domains: Optional[DomainMap] = None
    tuples_explored: int = 0
    engine: str = "generic"
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "question": self.question,
            "answer": self.answer,
            "witness": self.witness,
            "domains": {var: list(values) for var, values in self.domains.items()} if self.domains is not None
            else None,
            "tuplesExplored": self.tuples_explored,
            "engine": self.engine,
        }


def gac_support(instance: Instance, var: VarId, value: Value, budget: Optional[SearchBudget] = None,
                *, meter: BudgetMeter = None) -> QuestionResult:
    """Does var=value have a support within the instance's domains?"""
    require_pair(instance, var, value)
    meter = meter_for(budget, meter)
    support = seek_in(instance, instance.domains, var, value, meter)
    return QuestionResult("gac-support", support is not None, witness=support, tuples_explored=meter.explored)


def no_gac_wipeout(instance: Instance, budget: Optional[SearchBudget] = None,
                   *, meter: BudgetMeter = None) -> QuestionResult:
    """Is there a satisfying tuple within the domains, i.e. a non-empty GAC subdomain?"""
    meter = meter_for(budget, meter)
    solution = None
    if not is_wiped_out(instance.domains, instance.scope):
        solution = find_satisfying(instance, instance.domains, meter)
    return QuestionResult("no-gac-wipeout", solution is not None, witness=solution, tuples_explored=meter.explored)


def _supported_domains(instance: Instance, meter: BudgetMeter) -> DomainMap:
    domains = dict(instance.domains)
    if is_wiped_out(domains, instance.scope):
        return wipeout_normal_form(domains, instance.scope)
    for var in instance.scope:
        domains[var] = tuple(value for value in instance.domains[var]
                             if seek_in(instance, instance.domains, var, value, meter) is not None)
    return wipeout_normal_form(domains, instance.scope)


def is_it_gac(instance: Instance, budget: Optional[SearchBudget] = None,
              *, meter: BudgetMeter = None) -> QuestionResult:
    """
    Does every value of every scope variable have a support?

    A map with an empty scope domain is vacuously GAC.
    """
    meter = meter_for(budget, meter)
    if is_wiped_out(instance.domains, instance.scope):
        return QuestionResult("is-it-gac", True, tuples_explored=meter.explored)
    for var in instance.scope:
        for value in instance.domains[var]:
            if seek_in(instance, instance.domains, var, value, meter) is None:
                logger.debug("is-it-gac: %s=%s has no support", var, value)
                return QuestionResult("is-it-gac", False, tuples_explored=meter.explored,
                                      details={"unsupported": [var, value]})
    return QuestionResult("is-it-gac", True, tuples_explored=meter.explored)


def gac_domain(instance: Instance, budget: Optional[SearchBudget] = None,
               *, meter: BudgetMeter = None) -> QuestionResult:
    """
    The maximal GAC subdomain of the instance's domains.

    One pass suffices for a single constraint: a support tuple found in the
    original domains lies entirely inside the maximal subdomain. Variables
    outside the scope keep their domains. The answer is False on wipe-out.
    """
    meter = meter_for(budget, meter)
    domains = _supported_domains(instance, meter)
    wiped = is_wiped_out(domains, instance.scope)
    logger.info("gac-domain: %d tuples explored%s", meter.explored, ", wipe-out" if wiped else "")
    return QuestionResult("gac-domain", not wiped, domains=domains, tuples_explored=meter.explored)


def _scope_view(domains: Mapping[VarId, Tuple[Value, ...]], scope) -> Dict[VarId, Tuple[Value, ...]]:
    return {var: tuple(domains[var]) for var in scope}


def resolve_candidate(instance: Instance, candidate: Mapping[VarId, Tuple[Value, ...]]) -> DomainMap:
    """Fill unnamed variables from D0, check candidate is within D0 and normalise wipe-out"""
    resolved = dict(instance.domains)
    for var, values in candidate.items():
        if var not in resolved:
            raise InstanceError(f"candidate names unknown variable {var}")
        resolved[var] = tuple(sorted(set(values)))
        if not set(resolved[var]) <= set(instance.domains[var]):
            raise InstanceError(f"candidate domain of {var} is not within the instance's domain")
    return wipeout_normal_form(resolved, instance.scope)


def max_gac(instance: Instance, candidate: Mapping[VarId, Tuple[Value, ...]], budget: Optional[SearchBudget] = None,
            *, meter: BudgetMeter = None) -> QuestionResult:
    """
    Is candidate the maximal GAC subdomain of the instance's domains?

    Every GAC subdomain lies inside the maximal one, so this is equality with
    gac_domain on the scope variables.
    """
    meter = meter_for(budget, meter)
    resolved = resolve_candidate(instance, candidate)
    maximal = _supported_domains(instance, meter)
    answer = _scope_view(resolved, instance.scope) == _scope_view(maximal, instance.scope)
    return QuestionResult("max-gac", answer, domains=maximal, tuples_explored=meter.explored)


def superset_sweep_max_gac(instance: Instance, candidate: Mapping[VarId, Tuple[Value, ...]],
                           budget: Optional[SearchBudget] = None, max_removed: int = 6) -> QuestionResult:
    """
    maxGAC by its definition: candidate is GAC and no D' with candidate < D' <= D0
    is. D' ranges over maps in which every scope variable keeps a value.

    Only for candidates at most max_removed values below D0.
    """
    meter = BudgetMeter(budget)
    resolved = resolve_candidate(instance, candidate)
    scope = instance.scope
    missing = [(var, value) for var in scope for value in instance.domains[var] if value not in resolved[var]]
    if len(missing) > max_removed:
        raise InstanceError(f"superset sweep limited to {max_removed} removed values, candidate removes {len(missing)}")

    if not is_it_gac(instance.with_domains(resolved), meter=meter).answer:
        return QuestionResult("max-gac", False, tuples_explored=meter.explored, engine="superset-sweep")

    for size in range(1, len(missing) + 1):
        for added in itertools.combinations(missing, size):
            larger = {var: set(resolved[var]) for var in scope}
            for var, value in added:
                larger[var].add(value)
            if is_wiped_out({var: tuple(values) for var, values in larger.items()}, scope):
                continue
            if is_it_gac(instance.with_domains(larger), meter=meter).answer:
                return QuestionResult("max-gac", False, tuples_explored=meter.explored, engine="superset-sweep",
                                      details={"larger": {var: sorted(values) for var, values in larger.items()}})
    return QuestionResult("max-gac", True, tuples_explored=meter.explored, engine="superset-sweep")
