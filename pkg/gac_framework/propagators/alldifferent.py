import networkx as nx

from ..core import Instance
from .outcome import PropagationOutcome, make_outcome, wipeout_outcome
from .registry import register_propagator, require_kind


def _var(name):
    return ("var", name)


def _val(value):
    return ("val", value)


@register_propagator(name="alldifferent", kinds=["allDifferent"], tags=["gac", "matching"])
def alldifferent_gac(instance: Instance) -> PropagationOutcome:
    """
    GAC on AllDifferent by maximum bipartite matching and SCC filtering.

    A variable-value edge survives when it is in the matching, joins two nodes
    of one strongly connected component of the oriented graph, or lies on an
    alternating path starting at a free value.
    """
    require_kind(instance, "alldifferent")
    scope = instance.constraint.scope
    if len(set(scope)) != len(scope):
        return wipeout_outcome(instance, "alldifferent", reason="repeated variable")
    if any(not instance.domains[var] for var in scope):
        return wipeout_outcome(instance, "alldifferent", reason="empty domain")

    graph = nx.Graph()
    var_nodes = [_var(var) for var in scope]
    graph.add_nodes_from(var_nodes, bipartite=0)
    for var in scope:
        for value in instance.domains[var]:
            graph.add_edge(_var(var), _val(value))

    matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=var_nodes)
    if any(node not in matching for node in var_nodes):
        return wipeout_outcome(instance, "alldifferent", reason="no complete matching")

    # matched edges point var -> value, the others value -> var
    oriented = nx.DiGraph()
    oriented.add_nodes_from(graph.nodes)
    for var in scope:
        for value in instance.domains[var]:
            if matching[_var(var)] == _val(value):
                oriented.add_edge(_var(var), _val(value))
            else:
                oriented.add_edge(_val(value), _var(var))

    component = {}
    for index, nodes in enumerate(nx.strongly_connected_components(oriented)):
        for node in nodes:
            component[node] = index

    free_values = [node for node in graph.nodes if node[0] == "val" and node not in matching]
    reachable = set(free_values)
    for node in free_values:
        reachable |= nx.descendants(oriented, node)

    filtered = {}
    for var in scope:
        filtered[var] = tuple(
            value for value in instance.domains[var]
            if matching[_var(var)] == _val(value)
            or component[_var(var)] == component[_val(value)]
            or _val(value) in reachable
        )
    return make_outcome(instance, filtered, "alldifferent", matching={var: matching[_var(var)][1] for var in scope})
