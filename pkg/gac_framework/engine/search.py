import itertools
import math
from dataclasses import dataclass
from typing import Dict, Iterator, Mapping, Optional, Tuple

from ..core import BudgetExhaustedError, Instance, InstanceError, VarId, Value, check
from ..utils.config import get_settings


@dataclass(frozen=True)
class SearchBudget:
    """Upper bound on the number of tuples one question may enumerate"""
    max_tuples_explored: int

    def __post_init__(self):
        if self.max_tuples_explored <= 0:
            raise ValueError("max_tuples_explored must be positive")

    @classmethod
    def default(cls) -> "SearchBudget":
        return cls(get_settings().budget)


class BudgetMeter:
    """Counts tuples for one question call, shared by every sub-call it makes"""

    def __init__(self, budget: Optional[SearchBudget] = None):
        self.limit = (budget or SearchBudget.default()).max_tuples_explored
        self.explored = 0

    def tick(self):
        if self.explored >= self.limit:
            raise BudgetExhaustedError(self.explored)
        self.explored += 1


def meter_for(budget: Optional[SearchBudget], meter: Optional[BudgetMeter]) -> BudgetMeter:
    return meter if meter is not None else BudgetMeter(budget)


def enumerate_tuples(instance: Instance, domains: Mapping[VarId, Tuple[Value, ...]],
                     meter: BudgetMeter) -> Iterator[Dict[VarId, Value]]:
    """
    Every assignment of the distinct scope variables within domains, in scope
    order with values ascending. Repeated positions are bound once.
    """
    scope = instance.scope
    for values in itertools.product(*(domains[var] for var in scope)):
        meter.tick()
        yield dict(zip(scope, values))


def search_space(instance: Instance, domains: Optional[Mapping[VarId, Tuple[Value, ...]]] = None) -> int:
    """Number of tuples enumerate_tuples would visit over domains (the instance's own by default)"""
    domains = instance.domains if domains is None else domains
    return math.prod(len(domains[var]) for var in instance.scope)


def find_satisfying(instance: Instance, domains: Mapping[VarId, Tuple[Value, ...]],
                    meter: BudgetMeter) -> Optional[Dict[VarId, Value]]:
    for t in enumerate_tuples(instance, domains, meter):
        if check(instance.constraint, t):
            return t
    return None


def seek_in(instance: Instance, domains: Mapping[VarId, Tuple[Value, ...]], var: VarId, value: Value,
            meter: BudgetMeter) -> Optional[Dict[VarId, Value]]:
    restricted = dict(domains)
    restricted[var] = (value,)
    return find_satisfying(instance, restricted, meter)


def seek_support(instance: Instance, var: VarId, value: Value,
                 budget: Optional[SearchBudget] = None) -> Optional[Dict[VarId, Value]]:
    """
    Look for a support of var=value within the instance's domains.

    Returns the first satisfying tuple in enumeration order, or None when the
    value has no support. Raises BudgetExhaustedError once the budget is spent.
    """
    require_pair(instance, var, value)
    return seek_in(instance, instance.domains, var, value, BudgetMeter(budget))


def require_pair(instance: Instance, var: VarId, value: Value):
    if var not in instance.scope:
        raise InstanceError(f"{var} is not in the constraint's scope")
    if value not in instance.domains[var]:
        raise InstanceError(f"{value} is not in the domain of {var}")
