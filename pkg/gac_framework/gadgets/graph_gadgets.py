import itertools
from typing import Dict, List, Optional, Tuple

import networkx as nx

from ..core import BinaryNetwork, BinaryRelation, GadgetError, Instance
from ..engine import SearchBudget, seek_support
from .output import GadgetOutput, register_gadget
from .sources import Graph, GraphPair

COLORS = (0, 1, 2)
DIFFERENT = tuple((a, b) for a in COLORS for b in COLORS if a != b)
ANY = tuple((a, b) for a in COLORS for b in COLORS)


def vertex(v: int) -> str:
    return f"V{v}"


def _first_vertex_support(instance: Instance, value: int):
    """Look up one support of the first vertex taking value, as a witness"""
    def search(budget: Optional[SearchBudget] = None):
        if not instance.scope:
            return None
        first = instance.scope[0]
        if value not in instance.domains[first]:
            return None
        return seek_support(instance, first, value, budget)
    return search


@register_gadget(name="isitgac", source="3col", tags=["binaryNetwork"])
def build_isitgac_gadget(graph: Graph) -> GadgetOutput:
    """
    One binary network over all vertex pairs: edges forbid equal colors,
    non-edges allow everything. Colors are interchangeable, so the network
    is GAC iff it has any solution, i.e. iff the graph is 3-colorable.
    """
    if graph.num_vertices == 0:
        raise GadgetError("isitgac gadget needs at least one vertex")
    edges = set(graph.edges)
    relations = [BinaryRelation(i=u, j=v, pairs=DIFFERENT if (u, v) in edges else ANY)
                 for u, v in itertools.combinations(range(graph.num_vertices), 2)]
    domains = {vertex(v): COLORS for v in range(graph.num_vertices)}
    instance = Instance(variables=tuple(domains), domains=domains,
                        constraint=BinaryNetwork(scope=tuple(domains), relations=tuple(relations)))
    return GadgetOutput(
        family="isitgac",
        instance=instance,
        question="is-it-gac",
        meaning="yes iff the graph is 3-colorable",
        decode=lambda t: tuple(t[vertex(v)] for v in range(graph.num_vertices)),
        witness_search=_first_vertex_support(instance, 0),
    )


def _pair_relation(in_first: bool, in_second: bool) -> Tuple[Tuple[int, int], ...]:
    """
    Values 0..2 are the first-graph colors, 3..5 the second-graph colors. Both
    ends always use the same graph's colors; an edge of that graph makes them
    differ.
    """
    pairs = []
    for a, b in itertools.product(range(6), repeat=2):
        if a // 3 != b // 3:
            continue
        edge = in_first if a // 3 == 0 else in_second
        if edge and a % 3 == b % 3:
            continue
        pairs.append((a, b))
    return tuple(pairs)


@register_gadget(name="maxgac", source="3col-pair", tags=["binaryNetwork"])
def build_maxgac_gadget(pair: GraphPair) -> GadgetOutput:
    """
    Binary network whose maximal GAC subdomain is exactly the first-graph
    colors iff the first graph is 3-colorable and the second is not.
    """
    first, second = pair.first, pair.second
    if first.num_vertices != second.num_vertices:
        raise GadgetError(f"graphs differ in vertex count: {first.num_vertices} vs {second.num_vertices}")
    if first.num_vertices == 0:
        raise GadgetError("maxgac gadget needs at least one vertex")
    first_edges, second_edges = set(first.edges), set(second.edges)
    relations = [BinaryRelation(i=u, j=v, pairs=_pair_relation((u, v) in first_edges, (u, v) in second_edges))
                 for u, v in itertools.combinations(range(first.num_vertices), 2)]
    domains: Dict[str, Tuple[int, ...]] = {vertex(v): tuple(range(6)) for v in range(first.num_vertices)}
    instance = Instance(variables=tuple(domains), domains=domains,
                        constraint=BinaryNetwork(scope=tuple(domains), relations=tuple(relations)))
    return GadgetOutput(
        family="maxgac",
        instance=instance,
        question="max-gac",
        args={"candidate": {var: COLORS for var in domains}},
        meaning="yes iff the first graph is 3-colorable and the second is not",
        decode=lambda t: tuple(t[vertex(v)] % 3 for v in range(first.num_vertices)),
        witness_search=_first_vertex_support(instance, 0),
    )


def covering_walk(graph: Graph) -> List[int]:
    """
    A walk that traverses every edge: start at the lowest vertex, then for each
    edge not yet traversed (in sorted order) follow a shortest path to one
    end and step across it.
    """
    nx_graph = graph.to_networkx()
    walk = [0]
    covered = set()

    def step(to: int):
        covered.add(frozenset((walk[-1], to)))
        walk.append(to)

    for u, w in graph.edges:
        if frozenset((u, w)) in covered:
            continue
        for node in nx.shortest_path(nx_graph, walk[-1], u)[1:]:
            step(node)
        if frozenset((u, w)) not in covered:
            step(w)
    return walk
