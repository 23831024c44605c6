"""
Seeded random instances and source problems for the suites.

Every generator takes a `random.Random` so a suite seeded once produces the
same corpus on every run.
"""
import itertools
import random
from typing import Iterator, List, Optional, Tuple

from ..core import (
    AllDifferent, AmongConst, BinaryNetwork, BinaryRelation, Cardpath, Gcc, Instance, Occurrence, Table,
)
from ..gadgets import Cnf3, Cnf3Positive, Graph, GraphPair, Max2SatInput

REDUCER_KINDS = ("table", "allDifferent", "among", "binaryNetwork")


def _names(prefix: str, count: int) -> List[str]:
    return [f"{prefix}{index}" for index in range(count)]


def _domain(rng: random.Random, max_domain: int, allow_empty: bool = False) -> Tuple[int, ...]:
    low = 0 if allow_empty else 1
    size = rng.randint(low, max_domain)
    return tuple(sorted(rng.sample(range(max_domain + 1), size)))


def random_table(rng: random.Random, max_arity: int, max_domain: int) -> Instance:
    scope = _names("x", rng.randint(1, max_arity))
    domains = {var: _domain(rng, max_domain) for var in scope}
    universe = list(itertools.product(range(max_domain + 1), repeat=len(scope)))
    rows = rng.sample(universe, rng.randint(0, min(len(universe), 12)))
    return Instance(variables=tuple(scope), domains=domains, constraint=Table(scope=tuple(scope), tuples=rows))


def random_alldifferent(rng: random.Random, max_arity: int, max_domain: int) -> Instance:
    scope = _names("x", rng.randint(1, max_arity))
    domains = {var: _domain(rng, max_domain) for var in scope}
    return Instance(variables=tuple(scope), domains=domains, constraint=AllDifferent(scope=tuple(scope)))


def random_among(rng: random.Random, max_arity: int, max_domain: int) -> Instance:
    xs = _names("x", rng.randint(1, max(1, max_arity - 1)))
    domains = {var: _domain(rng, max_domain) for var in xs}
    domains["N"] = tuple(sorted(rng.sample(range(len(xs) + 2), rng.randint(1, len(xs) + 2))))
    value_set = rng.sample(range(max_domain + 1), rng.randint(0, max_domain))
    constraint = AmongConst(scope=("N", *xs), value_set=tuple(sorted(value_set)))
    return Instance(variables=("N", *xs), domains=domains, constraint=constraint)


def random_binary_network(rng: random.Random, max_arity: int, max_domain: int) -> Instance:
    scope = _names("x", rng.randint(2, max(2, max_arity)))
    domains = {var: _domain(rng, max_domain) for var in scope}
    values = range(max_domain + 1)
    relations = []
    for _ in range(rng.randint(1, 3)):
        i, j = rng.sample(range(len(scope)), 2)
        pairs = [pair for pair in itertools.product(values, values) if rng.random() < 0.5]
        relations.append(BinaryRelation(i=i, j=j, pairs=tuple(pairs)))
    constraint = BinaryNetwork(scope=tuple(scope), relations=tuple(relations))
    return Instance(variables=tuple(scope), domains=domains, constraint=constraint)


_REDUCER_GENERATORS = {
    "table": random_table,
    "allDifferent": random_alldifferent,
    "among": random_among,
    "binaryNetwork": random_binary_network,
}


def random_instance(rng: random.Random, max_arity: int = 4, max_domain: int = 4,
                    kind: Optional[str] = None, wipeout_rate: float = 0.05) -> Instance:
    """
    One instance of a reducer kind. With probability wipeout_rate one scope
    domain is emptied so the wipe-out paths get exercised.
    """
    kind = kind or rng.choice(REDUCER_KINDS)
    instance = _REDUCER_GENERATORS[kind](rng, max_arity, max_domain)
    if rng.random() < wipeout_rate:
        instance = instance.with_domains({rng.choice(instance.scope): ()})
    return instance


def reducer_corpus(seed: int, size: int, max_arity: int = 4, max_domain: int = 4) -> Iterator[Instance]:
    rng = random.Random(seed)
    for index in range(size):
        yield random_instance(rng, max_arity, max_domain, kind=REDUCER_KINDS[index % len(REDUCER_KINDS)])


# Propagator corpora, each within its propagator's preconditions

def alldifferent_instance(rng: random.Random, max_vars: int = 6, max_domain: int = 7) -> Instance:
    scope = _names("x", rng.randint(1, max_vars))
    domains = {var: _domain(rng, max_domain) for var in scope}
    return Instance(variables=tuple(scope), domains=domains, constraint=AllDifferent(scope=tuple(scope)))


def among_instance(rng: random.Random, max_vars: int = 5, max_domain: int = 4) -> Instance:
    return random_among(rng, max_vars + 1, max_domain)


def gcc_instance(rng: random.Random, max_vars: int = 5, max_values: int = 4) -> Instance:
    scope = _names("x", rng.randint(1, max_vars))
    domains = {var: _domain(rng, max_values - 1) for var in scope}
    occ = []
    for value in rng.sample(range(max_values), rng.randint(1, max_values)):
        low = rng.randint(0, min(2, len(scope)))
        high = rng.randint(low, len(scope))
        occ.append(Occurrence(value=value, low=low, high=high))
    constraint = Gcc(scope=tuple(scope), occ=tuple(occ))
    return Instance(variables=tuple(scope), domains=domains, constraint=constraint)


def cardpath_instance(rng: random.Random, max_length: int = 7, max_domain: int = 3) -> Instance:
    """Cardpath with a random binary table template over a sequence without repeats"""
    sequence = _names("s", rng.randint(2, max_length))
    domains = {var: _domain(rng, max_domain - 1) for var in sequence}
    values = range(max_domain)
    pairs = [pair for pair in itertools.product(values, values) if rng.random() < 0.5]
    template = Table(scope=("a", "b"), tuples=tuple(pairs))
    windows = len(sequence) - 1
    domains["N"] = tuple(sorted(rng.sample(range(windows + 1), rng.randint(1, windows + 1))))
    constraint = Cardpath(counter="N", sequence=tuple(sequence), template=template)
    return Instance(variables=("N", *sequence), domains=domains, constraint=constraint)


PROPAGATOR_CORPORA = {
    "alldifferent": alldifferent_instance,
    "among": among_instance,
    "gcc": gcc_instance,
    "cardpath-dp": cardpath_instance,
}


# Source problems
#
# Clauses draw their variables with replacement, a repeated variable keeping
# one sign. With probability plant_rate a generator also plants a small core
# that fixes the answer (no for formulas, yes for graph pairs), so both
# answers turn up in every stream.

def _clause(rng: random.Random, num_vars: int, width: int, positive: bool = False) -> Tuple[int, ...]:
    signs = {}
    literals = []
    for _ in range(width):
        var = rng.randint(1, num_vars)
        if var not in signs:
            signs[var] = 1 if positive or rng.random() < 0.5 else -1
        literals.append(signs[var] * var)
    return tuple(literals)


def random_cnf3(rng: random.Random, max_vars: int = 4, max_clauses: int = 6,
                max_occurrences: Optional[int] = None, plant_rate: float = 0.0) -> Cnf3:
    """
    Random 3-CNF over 1..max_vars variables. A planted formula starts with
    (v or v or v) and (not v or not v or not v) and is unsatisfiable. With
    max_occurrences, clauses that would push a variable past the limit are
    dropped.
    """
    num_vars = rng.randint(1, max_vars)
    clauses = []
    counts = {var: 0 for var in range(1, num_vars + 1)}

    def add(clause):
        if max_occurrences is not None and any(counts[var] >= max_occurrences for var in {abs(x) for x in clause}):
            return
        for var in {abs(lit) for lit in clause}:
            counts[var] += 1
        clauses.append(clause)

    if max_clauses >= 2 and rng.random() < plant_rate:
        var = rng.randint(1, num_vars)
        add((var, var, var))
        add((-var, -var, -var))
    for _ in range(rng.randint(max(1, len(clauses)), max_clauses) - len(clauses)):
        add(_clause(rng, num_vars, 3))
    rng.shuffle(clauses)
    return Cnf3(num_vars, tuple(clauses))


def random_positive_cnf3(rng: random.Random, max_vars: int = 4, max_clauses: int = 3,
                         plant_rate: float = 0.0) -> Cnf3Positive:
    """Random positive 3-CNF; a planted (v or v or v) has no 1-in-3 model"""
    num_vars = rng.randint(1, max_vars)
    clauses = []
    if rng.random() < plant_rate:
        var = rng.randint(1, num_vars)
        clauses.append((var, var, var))
    for _ in range(rng.randint(max(1, len(clauses)), max_clauses) - len(clauses)):
        clauses.append(_clause(rng, num_vars, 3, positive=True))
    rng.shuffle(clauses)
    return Cnf3Positive(num_vars, tuple(clauses))


def random_max2sat(rng: random.Random, max_vars: int = 3, max_clauses: int = 4, max_bound: int = 2,
                   plant_rate: float = 0.0) -> Max2SatInput:
    """
    Random 2-CNF with a bound on falsified clauses. A planted instance holds
    bound+1 pairs (v or v), (not v or not v), each falsifying one clause under
    every assignment, so no assignment stays within the bound.
    """
    num_vars = rng.randint(1, max_vars)
    if max_clauses >= 2 and rng.random() < plant_rate:
        bound = rng.randint(0, min(max_bound, max_clauses // 2 - 1))
        clauses = []
        for _ in range(bound + 1):
            var = rng.randint(1, num_vars)
            clauses.extend([(var, var), (-var, -var)])
        for _ in range(rng.randint(0, max_clauses - len(clauses))):
            clauses.append(_clause(rng, num_vars, 2))
        rng.shuffle(clauses)
        return Max2SatInput(num_vars, tuple(clauses), bound)
    clauses = tuple(_clause(rng, num_vars, 2) for _ in range(rng.randint(1, max_clauses)))
    bound = rng.randint(0, min(max_bound, len(clauses)))
    return Max2SatInput(num_vars, clauses, bound)


def all_graphs(max_vertices: int = 5) -> Iterator[Graph]:
    """Every labelled graph on 1..max_vertices vertices"""
    for n in range(1, max_vertices + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            yield Graph(n, tuple(pair for bit, pair in enumerate(pairs) if mask >> bit & 1))


def random_graph(rng: random.Random, num_vertices: int, density: float = 0.5) -> Graph:
    edges = tuple(pair for pair in itertools.combinations(range(num_vertices), 2) if rng.random() < density)
    return Graph(num_vertices, edges)


def colorable_graph(rng: random.Random, num_vertices: int, density: float = 0.5) -> Graph:
    """A random graph with edges only between vertices of different hidden colors"""
    colors = [rng.randrange(3) for _ in range(num_vertices)]
    edges = tuple((u, v) for u, v in itertools.combinations(range(num_vertices), 2)
                  if colors[u] != colors[v] and rng.random() < density)
    return Graph(num_vertices, edges)


def with_clique(rng: random.Random, graph: Graph, size: int = 4) -> Graph:
    """The graph plus every edge among `size` random vertices"""
    members = sorted(rng.sample(range(graph.num_vertices), size))
    edges = set(graph.edges) | set(itertools.combinations(members, 2))
    return Graph(graph.num_vertices, tuple(sorted(edges)))


def random_graph_pair(rng: random.Random, max_vertices: int = 4, plant_rate: float = 0.0) -> GraphPair:
    """
    Two graphs on the same vertices. A planted pair, on at least four
    vertices, has a 3-colorable first graph and a second one holding a K4.
    """
    if max_vertices >= 4 and rng.random() < plant_rate:
        n = rng.randint(4, max_vertices)
        first = colorable_graph(rng, n, rng.random())
        return GraphPair(first, with_clique(rng, random_graph(rng, n, rng.random())))
    n = rng.randint(1, max_vertices)
    return GraphPair(random_graph(rng, n, rng.random()), random_graph(rng, n, rng.random()))
