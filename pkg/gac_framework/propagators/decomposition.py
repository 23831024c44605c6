from collections import deque
from typing import Dict, List, Set, Tuple

from ..core import BinaryNetwork, BinaryRelation, Instance, Value, VarId
from .outcome import PropagationOutcome, make_outcome, wipeout_outcome
from .registry import register_propagator, require_kind


def _arcs(constraint: BinaryNetwork) -> List[Tuple[VarId, VarId, frozenset]]:
    """Each relation read in both directions as (variable, partner, allowed pairs)"""
    arcs = []
    for relation in constraint.relations:
        x, y = constraint.scope[relation.i], constraint.scope[relation.j]
        arcs.append((x, y, relation.allowed))
        arcs.append((y, x, frozenset((b, a) for a, b in relation.allowed)))
    return arcs


def _revise(domains: Dict[VarId, Set[Value]], x: VarId, y: VarId, allowed: frozenset) -> bool:
    if x == y:
        unsupported = {a for a in domains[x] if (a, a) not in allowed}
    else:
        unsupported = {a for a in domains[x] if not any((a, b) in allowed for b in domains[y])}
    domains[x] -= unsupported
    return bool(unsupported)


@register_propagator(name="binary-ac", kinds=["binaryNetwork"], tags=["decomposition"])
def binary_network_ac(instance: Instance) -> PropagationOutcome:
    """
    Arc consistency (AC-3) on the relations of a binary network taken as
    separate binary constraints. Weaker than GAC on the whole network.
    """
    require_kind(instance, "binary-ac")
    domains = {var: set(instance.domains[var]) for var in instance.scope}
    arcs = _arcs(instance.constraint)
    incoming: Dict[VarId, List[int]] = {}
    for index, (_, y, _) in enumerate(arcs):
        incoming.setdefault(y, []).append(index)

    queue = deque(range(len(arcs)))
    queued = set(queue)
    while queue:
        index = queue.popleft()
        queued.discard(index)
        x, y, allowed = arcs[index]
        if _revise(domains, x, y, allowed):
            if not domains[x]:
                return wipeout_outcome(instance, "binary-ac")
            for other in incoming.get(x, []):
                if arcs[other][0] != y and other not in queued:
                    queue.append(other)
                    queued.add(other)
    return make_outcome(instance, domains, "binary-ac")


def disjoint_as_network(instance: Instance) -> Instance:
    """Rewrite Disjoint as pairwise X_i != Y_j relations over the current domains"""
    constraint = instance.constraint
    xs, ys = constraint.scope[:constraint.split], constraint.scope[constraint.split:]
    relations = []
    for i, x in enumerate(xs):
        for j, y in enumerate(ys, start=len(xs)):
            pairs = tuple((a, b) for a in instance.domains[x] for b in instance.domains[y] if a != b)
            relations.append(BinaryRelation(i=i, j=j, pairs=pairs))
    network = BinaryNetwork(scope=constraint.scope, relations=tuple(relations))
    return Instance(variables=instance.variables, domains=instance.domains, constraint=network)


@register_propagator(name="disjoint-decomposition", kinds=["disjoint"], tags=["decomposition"])
def disjoint_decomposition_ac(instance: Instance) -> PropagationOutcome:
    """Arc consistency on the binary not-equal decomposition of Disjoint"""
    require_kind(instance, "disjoint-decomposition")
    outcome = binary_network_ac(disjoint_as_network(instance))
    outcome.propagator = "disjoint-decomposition"
    return outcome
