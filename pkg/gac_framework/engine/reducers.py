"""
Each question answered through another one, following the polynomial
reductions between them. Every reducer shares one budget meter across the
calls it makes, so tuples_explored is the total cost of the reduction.
"""
from typing import Mapping, Optional, Tuple

from ..core import Instance, VarId, Value, is_wiped_out, wipeout_normal_form
from .questions import QuestionResult, gac_domain, gac_support, max_gac, no_gac_wipeout, resolve_candidate
from .search import BudgetMeter, SearchBudget, meter_for, require_pair


def gac_support_via_wipeout(instance: Instance, var: VarId, value: Value, budget: Optional[SearchBudget] = None,
                            *, meter: BudgetMeter = None) -> QuestionResult:
    """var=value has a support iff fixing var to value leaves a satisfying tuple"""
    require_pair(instance, var, value)
    meter = meter_for(budget, meter)
    result = no_gac_wipeout(instance.restrict(var, value), meter=meter)
    return QuestionResult("gac-support", result.answer, witness=result.witness,
                          tuples_explored=meter.explored, engine="via-wipeout")


def no_gac_wipeout_via_support(instance: Instance, budget: Optional[SearchBudget] = None,
                               *, meter: BudgetMeter = None) -> QuestionResult:
    """No wipe-out iff some value of the first scope variable has a support"""
    meter = meter_for(budget, meter)
    first = instance.scope[0]
    if not is_wiped_out(instance.domains, instance.scope):
        for value in instance.domains[first]:
            result = gac_support(instance, first, value, meter=meter)
            if result.answer:
                return QuestionResult("no-gac-wipeout", True, witness=result.witness,
                                      tuples_explored=meter.explored, engine="via-support")
    return QuestionResult("no-gac-wipeout", False, tuples_explored=meter.explored, engine="via-support")


def gac_support_via_domain(instance: Instance, var: VarId, value: Value, budget: Optional[SearchBudget] = None,
                           *, meter: BudgetMeter = None) -> QuestionResult:
    """var=value has a support iff GAC on the restricted domains does not wipe out"""
    require_pair(instance, var, value)
    meter = meter_for(budget, meter)
    result = gac_domain(instance.restrict(var, value), meter=meter)
    return QuestionResult("gac-support", not is_wiped_out(result.domains, instance.scope),
                          tuples_explored=meter.explored, engine="via-domain")


def _domain_by_support(instance: Instance, meter: BudgetMeter):
    domains = dict(instance.domains)
    if is_wiped_out(domains, instance.scope):
        return wipeout_normal_form(domains, instance.scope)
    for var in instance.scope:
        domains[var] = tuple(value for value in instance.domains[var]
                             if gac_support(instance, var, value, meter=meter).answer)
    return wipeout_normal_form(domains, instance.scope)


def gac_domain_via_support(instance: Instance, budget: Optional[SearchBudget] = None,
                           *, meter: BudgetMeter = None) -> QuestionResult:
    """One support question per (variable, value) of the original domains"""
    meter = meter_for(budget, meter)
    domains = _domain_by_support(instance, meter)
    return QuestionResult("gac-domain", not is_wiped_out(domains, instance.scope), domains=domains,
                          tuples_explored=meter.explored, engine="via-support")


def max_gac_via_support(instance: Instance, candidate: Mapping[VarId, Tuple[Value, ...]],
                        budget: Optional[SearchBudget] = None, *, meter: BudgetMeter = None) -> QuestionResult:
    """Rebuild the maximal subdomain value by value and compare it with candidate"""
    meter = meter_for(budget, meter)
    resolved = resolve_candidate(instance, candidate)
    rebuilt = _domain_by_support(instance, meter)
    answer = all(tuple(resolved[var]) == tuple(rebuilt[var]) for var in instance.scope)
    return QuestionResult("max-gac", answer, domains=rebuilt, tuples_explored=meter.explored, engine="via-support")


def is_it_gac_via_maxgac(instance: Instance, budget: Optional[SearchBudget] = None,
                         *, meter: BudgetMeter = None) -> QuestionResult:
    """D is GAC iff D is its own maximal GAC subdomain"""
    meter = meter_for(budget, meter)
    result = max_gac(instance, instance.domains, meter=meter)
    return QuestionResult("is-it-gac", result.answer, tuples_explored=meter.explored, engine="via-maxgac")
