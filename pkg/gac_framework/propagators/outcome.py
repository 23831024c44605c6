from dataclasses import dataclass, field
from typing import List, Mapping, Tuple

from ..core import DomainMap, Instance, VarId, Value, is_wiped_out, removed_values, wipeout_normal_form


@dataclass
class PropagationOutcome:
    domains: DomainMap
    removed: List[Tuple[VarId, Value]]
    wipeout: bool
    propagator: str = ""
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "propagator": self.propagator,
            "domains": {var: list(values) for var, values in self.domains.items()},
            "removed": [[var, value] for var, value in self.removed],
            "wipeout": self.wipeout,
        }


def make_outcome(instance: Instance, filtered: Mapping[VarId, Tuple[Value, ...]], propagator: str,
                 **details) -> PropagationOutcome:
    """
    Merge filtered scope domains over the instance's domains. When a scope
    domain empties, every scope domain is emptied, the same wipe-out state the
    generic engine reports.
    """
    domains = dict(instance.domains)
    for var, values in filtered.items():
        domains[var] = tuple(sorted(values))
    domains = wipeout_normal_form(domains, instance.scope)
    return PropagationOutcome(
        domains=domains,
        removed=removed_values(instance.domains, domains),
        wipeout=is_wiped_out(domains, instance.scope),
        propagator=propagator,
        details=details,
    )


def wipeout_outcome(instance: Instance, propagator: str, **details) -> PropagationOutcome:
    return make_outcome(instance, {var: () for var in instance.scope}, propagator, **details)
