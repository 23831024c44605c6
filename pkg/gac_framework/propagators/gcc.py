import networkx as nx

from ..core import Instance
from .outcome import PropagationOutcome, make_outcome, wipeout_outcome
from .registry import register_propagator, require_distinct, require_kind

SINK = ("sink",)


def _var(name):
    return ("var", name)


def _val(value):
    return ("val", value)


def _flow_network(instance: Instance) -> nx.DiGraph:
    """
    Every variable supplies one unit that flows through one of its values to
    the sink. Lower bounds on value->sink arcs are moved into node demands.
    """
    constraint = instance.constraint
    scope = constraint.scope
    n = len(scope)
    intervals = constraint.intervals()

    network = nx.DiGraph()
    network.add_node(SINK, demand=n)
    for var in scope:
        network.add_node(_var(var), demand=-1)

    values = sorted({value for var in scope for value in instance.domains[var]})
    for value in values:
        low, high = intervals.get(value, (0, n))
        network.add_node(_val(value), demand=low)
        network.nodes[SINK]["demand"] -= low
        network.add_edge(_val(value), SINK, capacity=high - low, weight=0)
    for var in scope:
        for value in instance.domains[var]:
            network.add_edge(_var(var), _val(value), capacity=1, weight=0)
    return network


@register_propagator(name="gcc", kinds=["gcc"], tags=["gac", "flow"])
def gcc_fixed_gac(instance: Instance) -> PropagationOutcome:
    """
    GAC on a fixed-interval global cardinality constraint.

    A feasible flow gives one assignment; an unused variable-value arc can
    carry flow in some other feasible flow iff both ends share a strongly
    connected component of the residual graph.
    """
    require_kind(instance, "gcc")
    constraint = instance.constraint
    scope = constraint.scope
    require_distinct(scope, "gcc")
    if any(not instance.domains[var] for var in scope):
        return wipeout_outcome(instance, "gcc", reason="empty domain")

    intervals = constraint.intervals()
    present = {value for var in scope for value in instance.domains[var]}
    if any(low > 0 for value, (low, _) in intervals.items() if value not in present):
        return wipeout_outcome(instance, "gcc", reason="required value absent from every domain")

    network = _flow_network(instance)
    try:
        _, flow = nx.network_simplex(network)
    except nx.NetworkXUnfeasible:
        return wipeout_outcome(instance, "gcc", reason="no feasible flow")

    residual = nx.DiGraph()
    residual.add_nodes_from(network.nodes)
    for var in scope:
        for value in instance.domains[var]:
            if flow[_var(var)][_val(value)]:
                residual.add_edge(_val(value), _var(var))
            else:
                residual.add_edge(_var(var), _val(value))
    n = len(scope)
    for value in present:
        low, high = intervals.get(value, (0, n))
        carried = low + flow[_val(value)][SINK]
        if carried < high:
            residual.add_edge(_val(value), SINK)
        if carried > low:
            residual.add_edge(SINK, _val(value))

    component = {}
    for index, nodes in enumerate(nx.strongly_connected_components(residual)):
        for node in nodes:
            component[node] = index

    filtered = {
        var: tuple(value for value in instance.domains[var]
                   if flow[_var(var)][_val(value)] or component[_var(var)] == component[_val(value)])
        for var in scope
    }
    return make_outcome(instance, filtered, "gcc")
