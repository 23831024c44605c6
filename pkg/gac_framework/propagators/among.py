from ..core import Instance, UnsupportedInstanceError
from .outcome import PropagationOutcome, make_outcome, wipeout_outcome
from .registry import register_propagator, require_distinct, require_kind


def _meets(counts, low: int, high: int) -> bool:
    return any(low <= n <= high for n in counts)


@register_propagator(name="among", kinds=["among"], tags=["gac", "counting"])
def among_const_gac(instance: Instance) -> PropagationOutcome:
    """
    GAC on Among with a constant value set, from counting bounds.

    lb counts the X forced into the set, ub those that can still reach it.
    N keeps its values in [lb, ub]; an undecided X keeps its in-set values
    only if some N above lb remains, and its out-of-set values only if some N
    below ub remains.
    """
    require_kind(instance, "among")
    counter, *xs = instance.constraint.scope
    require_distinct(xs, "among")
    if counter in xs:
        raise UnsupportedInstanceError("among: counter also occurs among the counted variables")

    wanted = set(instance.constraint.value_set)
    domains = instance.domains
    if any(not domains[var] for var in instance.scope):
        return wipeout_outcome(instance, "among", reason="empty domain")

    inside = {var: [v for v in domains[var] if v in wanted] for var in xs}
    outside = {var: [v for v in domains[var] if v not in wanted] for var in xs}
    lb = sum(1 for var in xs if not outside[var])
    ub = sum(1 for var in xs if inside[var])

    counts = [n for n in domains[counter] if lb <= n <= ub]
    if not counts:
        return wipeout_outcome(instance, "among", lb=lb, ub=ub)

    filtered = {counter: counts}
    for var in xs:
        if inside[var] and outside[var]:
            keep = []
            if _meets(counts, lb + 1, ub):
                keep += inside[var]
            if _meets(counts, lb, ub - 1):
                keep += outside[var]
            filtered[var] = keep
    return make_outcome(instance, filtered, "among", lb=lb, ub=ub)
