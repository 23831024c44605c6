from typing import Dict, List, Tuple

from ..core import Card, Cardpath, GadgetError, Instance, Predicate, evaluate_positional
from ..core.predicates import alternation_length
from ..utils.logging import get_logger
from .graph_gadgets import COLORS, covering_walk, vertex
from .output import GadgetOutput, register_gadget
from .sources import Cnf3, Graph, Max2SatInput

logger = get_logger(__name__)

MAX_CLAUSES_PER_VARIABLE = 3
BLOCK_BASES = (8, 16, 24)


def falsifying_pattern(clause) -> int:
    """The three-bit pattern of the only assignment to the clause's variables that falsifies it"""
    pattern = 0
    for lit in clause:
        pattern = (pattern << 1) | (1 if lit < 0 else 0)
    return pattern


@register_gadget(name="card", source="3sat", tags=["card"])
def build_card_gadget(cnf: Cnf3) -> GadgetOutput:
    """
    Card over five identical binary children per clause. U, V and W carry the
    clause's satisfying three-bit pattern (offset by 8, 16, 24), each is tied
    to one literal's variable, and U-V, V-W force one pattern. N must count
    every child.
    """
    crowded = {var: count for var, count in cnf.occurrences().items() if count > MAX_CLAUSES_PER_VARIABLE}
    if crowded:
        raise GadgetError(f"variables occur in more than {MAX_CLAUSES_PER_VARIABLE} clauses: {sorted(crowded)}")

    m = len(cnf.clauses)
    domains: Dict[str, Tuple[int, ...]] = {"N": (5 * m,)}
    children: List[Predicate] = []
    for j, clause in enumerate(cnf.clauses, start=1):
        pattern = falsifying_pattern(clause)
        names = [f"{prefix}{j}" for prefix in ("U", "V", "W")]
        for name, base in zip(names, BLOCK_BASES):
            domains[name] = tuple(value for value in range(base, base + 8) if value != base + pattern)
        for name, lit in zip(names, clause):
            children.append(Predicate(name="card-link", scope=(name, f"X{abs(lit)}")))
        children.append(Predicate(name="card-link", scope=(names[0], names[1])))
        children.append(Predicate(name="card-link", scope=(names[1], names[2])))
    domains.update({f"X{i}": (0, 1) for i in range(1, cnf.num_vars + 1)})

    instance = Instance(variables=tuple(domains), domains=domains,
                        constraint=Card(counter="N", children=tuple(children)))
    return GadgetOutput(
        family="card",
        instance=instance,
        question="no-gac-wipeout",
        meaning="yes iff the formula is satisfiable",
        decode=lambda t: tuple(t[f"X{i}"] == 1 for i in range(1, cnf.num_vars + 1)),
    )


@register_gadget(name="cardpath-3col", source="3col", tags=["cardpath"])
def build_cardpath_3col_gadget(graph: Graph) -> GadgetOutput:
    """
    Cardpath of not-equal over a walk through every edge, with every window
    required to hold. Repeated vertices make the walk a coloring.
    """
    if not graph.is_connected():
        raise GadgetError("cardpath-3col gadget needs a connected graph")

    domains: Dict[str, Tuple[int, ...]] = {vertex(v): COLORS for v in range(graph.num_vertices)}
    if graph.edges:
        sequence = tuple(vertex(v) for v in covering_walk(graph))
    else:
        # a lone vertex: pad with one slot no color can equal
        sequence = (vertex(0), "PAD")
        domains["PAD"] = (len(COLORS),)
    logger.debug("cardpath-3col walk over %d steps", len(sequence))
    domains = {"N": (len(sequence) - 1,), **domains}
    constraint = Cardpath(
        counter="N",
        sequence=sequence,
        template=Predicate(name="not-equal", scope=("a", "b")),
    )
    return GadgetOutput(
        family="cardpath-3col",
        instance=Instance(variables=tuple(domains), domains=domains, constraint=constraint),
        question="no-gac-wipeout",
        meaning="yes iff the graph is 3-colorable",
        decode=lambda t: tuple(t[vertex(v)] for v in range(graph.num_vertices)),
    )


def _max2sat_layout(problem: Max2SatInput):
    """
    Sequence variables and domains: per clause an alternation of k+1 dummies,
    n fresh Booleans and the two clause literals, then a closing alternation
    with dummy clause slots and k+1 trailing dummies.
    """
    n, k = problem.num_vars, problem.bound
    dummy = n + 1
    sequence, domains = [], {}

    def add(name: str, domain: Tuple[int, ...]):
        sequence.append(name)
        domains[name] = domain

    blocks = list(problem.clauses) + [None]
    for b, clause in enumerate(blocks):
        for q in range(k + 1):
            add(f"D{b}_{q}", (dummy,))
        for i in range(1, n + 1):
            add(f"B{b}_{i}", (0, 1))
        for slot in range(2):
            add(f"L{b}_{slot}", (clause[slot],) if clause is not None else (dummy,))
    for q in range(k + 1):
        add(f"T{q}", (dummy,))
    return sequence, domains


def _reference_total(problem: Max2SatInput, template: Predicate) -> int:
    """Windows satisfied by an all-false assignment of a same-shape formula of tautologies"""
    tautologies = Max2SatInput(problem.num_vars, tuple((1, -1) for _ in problem.clauses), problem.bound)
    sequence, domains = _max2sat_layout(tautologies)
    values = [domains[var][0] for var in sequence]
    k = len(template.scope)
    return sum(1 for start in range(len(values) - k + 1) if evaluate_positional(template, values[start:start + k]))


@register_gadget(name="cardpath-max2sat", source="max2sat", tags=["cardpath"])
def build_cardpath_max2sat_gadget(problem: Max2SatInput) -> GadgetOutput:
    """
    Cardpath without repeated variables whose template spans two alternations.
    Dummy-led windows check that neighbouring Boolean blocks agree, the window
    led by a block's first Boolean checks that block's clause, the rest always
    hold. Breaking agreement costs k+1 windows, so N within k of the maximum
    means one assignment violating at most k clauses.
    """
    n, k = problem.num_vars, problem.bound
    if n == 0 or not problem.clauses:
        raise GadgetError("cardpath-max2sat gadget needs at least one variable and one clause")

    block = alternation_length(n, k)
    template = Predicate(name="max2sat-window", scope=tuple(f"w{p}" for p in range(2 * block)),
                         params={"n": n, "k": k})
    sequence, domains = _max2sat_layout(problem)
    total = _reference_total(problem, template)
    domains = {"N": tuple(range(max(0, total - k), total + 1)), **domains}
    logger.debug("cardpath-max2sat: %d positions, best total %d", len(sequence), total)

    constraint = Cardpath(counter="N", sequence=tuple(sequence), template=template)
    return GadgetOutput(
        family="cardpath-max2sat",
        instance=Instance(variables=tuple(domains), domains=domains, constraint=constraint),
        question="no-gac-wipeout",
        meaning=f"yes iff some assignment violates at most {k} clauses",
        decode=lambda t: tuple(t[f"B0_{i}"] == 1 for i in range(1, n + 1)),
    )
