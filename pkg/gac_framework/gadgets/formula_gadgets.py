"""
Gadgets built from 3-CNF formulas. In every encoding the Boolean x_i is
represented by the signed value i (true literal) or -i (false literal).
"""
import itertools
from typing import Dict, List, Tuple

from ..core import (
    AmongVar, AtMost1, Common, Disjoint, Gcc, ImpliesCnf, Instance, NValue, Occurrence, ScalarProduct,
)
from ..utils.logging import get_logger
from .output import GadgetOutput, register_gadget
from .sources import Cnf3, Cnf3Positive

logger = get_logger(__name__)

SATISFIABLE = "yes iff the formula is satisfiable"


def _literal_domains(cnf: Cnf3, prefix: str) -> Dict[str, Tuple[int, ...]]:
    return {f"{prefix}{i}": (i, -i) for i in range(1, cnf.num_vars + 1)}


def _clause_domains(cnf: Cnf3, prefix: str) -> Dict[str, Tuple[int, ...]]:
    return {f"{prefix}{j}": tuple(clause) for j, clause in enumerate(cnf.clauses, start=1)}


def _instance(domains: Dict[str, Tuple[int, ...]], constraint) -> Instance:
    return Instance(variables=tuple(domains), domains=domains, constraint=constraint)


def _model_from_signs(cnf: Cnf3, witness: dict, prefix: str, true_value_sign: int) -> Tuple[bool, ...]:
    return tuple(witness[f"{prefix}{i}"] == true_value_sign * i for i in range(1, cnf.num_vars + 1))


@register_gadget(name="support", source="3sat", tags=["impliesCnf"])
def build_support_gadget(cnf: Cnf3) -> GadgetOutput:
    """X -> phi: the guard value 1 has a support iff phi is satisfiable"""
    domains = {"X": (0, 1)}
    domains.update({f"x{i}": (0, 1) for i in range(1, cnf.num_vars + 1)})
    constraint = ImpliesCnf(scope=tuple(domains), cnf=cnf.clauses)
    return GadgetOutput(
        family="support",
        instance=_instance(domains, constraint),
        question="gac-support",
        args={"var": "X", "value": 1},
        meaning=SATISFIABLE,
        decode=lambda t: tuple(t[f"x{i}"] != 0 for i in range(1, cnf.num_vars + 1)),
    )


@register_gadget(name="nvalue", source="3sat", tags=["nvalue"])
def build_nvalue_gadget(cnf: Cnf3) -> GadgetOutput:
    """
    NValue over literal variables X_i in {i,-i} and clause variables taking the
    clause's literals, with N fixed to n: clause variables must reuse a value
    the literal variables take, i.e. a true literal.
    """
    domains = _literal_domains(cnf, "X")
    domains.update(_clause_domains(cnf, "C"))
    domains["N"] = (cnf.num_vars,)
    return GadgetOutput(
        family="nvalue",
        instance=_instance(domains, NValue(scope=tuple(domains))),
        question="no-gac-wipeout",
        meaning=SATISFIABLE,
        decode=lambda t: _model_from_signs(cnf, t, "X", 1),
    )


def _among_var_parts(cnf: Cnf3):
    domains = {"N": (len(cnf.clauses),)}
    domains.update(_clause_domains(cnf, "C"))
    domains.update(_literal_domains(cnf, "D"))
    return domains


@register_gadget(name="among-var", source="3sat", tags=["amongVar"])
def build_among_var_gadget(cnf: Cnf3) -> GadgetOutput:
    """All m clause variables must take a value among the D_i in {i,-i}"""
    domains = _among_var_parts(cnf)
    constraint = AmongVar(scope=tuple(domains), split=len(cnf.clauses))
    return GadgetOutput(
        family="among-var",
        instance=_instance(domains, constraint),
        question="no-gac-wipeout",
        meaning=SATISFIABLE,
        decode=lambda t: _model_from_signs(cnf, t, "D", 1),
    )


@register_gadget(name="common", source="3sat", tags=["common"])
def build_common_gadget(cnf: Cnf3) -> GadgetOutput:
    """The among-var gadget read as Common, with M left free over 0..n"""
    among = _among_var_parts(cnf)
    domains = {"N": among.pop("N"), "M": tuple(range(cnf.num_vars + 1))}
    domains.update(among)
    constraint = Common(scope=tuple(domains), split=len(cnf.clauses))
    return GadgetOutput(
        family="common",
        instance=_instance(domains, constraint),
        question="no-gac-wipeout",
        meaning=SATISFIABLE,
        decode=lambda t: _model_from_signs(cnf, t, "D", 1),
    )


@register_gadget(name="disjoint", source="3sat", tags=["disjoint"])
def build_disjoint_gadget(cnf: Cnf3) -> GadgetOutput:
    """X_i take the false literals, the clause variables a literal none of them took"""
    domains = _literal_domains(cnf, "X")
    domains.update(_clause_domains(cnf, "C"))
    constraint = Disjoint(scope=tuple(domains), split=cnf.num_vars)
    return GadgetOutput(
        family="disjoint",
        instance=_instance(domains, constraint),
        question="no-gac-wipeout",
        meaning=SATISFIABLE,
        decode=lambda t: _model_from_signs(cnf, t, "X", -1),
    )


@register_gadget(name="gcc-repeat", source="3sat", tags=["gcc"])
def build_gcc_repeat_gadget(cnf: Cnf3) -> GadgetOutput:
    """
    Gcc whose scope lists each clause variable once and each literal variable
    Y_i at m positions. Every value may occur at most m times, so a clause
    variable cannot share the value of a literal variable: the Y_i take the
    false literals.
    """
    m = len(cnf.clauses)
    domains = _clause_domains(cnf, "C")
    literal_domains = _literal_domains(cnf, "Y")
    domains.update(literal_domains)
    scope = tuple(_clause_domains(cnf, "C")) + tuple(var for var in literal_domains for _ in range(m))
    occ = tuple(Occurrence(value=sign * i, low=0, high=m)
                for i in range(1, cnf.num_vars + 1) for sign in (1, -1))
    return GadgetOutput(
        family="gcc-repeat",
        instance=_instance(domains, Gcc(scope=scope, occ=occ)),
        question="no-gac-wipeout",
        meaning=SATISFIABLE,
        decode=lambda t: _model_from_signs(cnf, t, "Y", -1),
    )


class _SetSystem:
    """Set variables over a shared universe, each given by required and possible elements"""

    def __init__(self):
        self.universe: List[str] = []
        self.sets: List[Tuple[str, set, set]] = []

    def element(self, label: str) -> str:
        if label not in self.universe:
            self.universe.append(label)
        return label

    def add_set(self, name: str, required, possible):
        self.sets.append((name, set(required), set(possible) | set(required)))

    def pad(self, cardinality: int):
        for name, required, possible in self.sets:
            for extra in range(cardinality - 2):
                label = self.element(f"pad:{name}:{extra}")
                required.add(label)
                possible.add(label)

    def instance(self, cardinality: int) -> Instance:
        domains, vectors = {}, []
        for name, required, possible in self.sets:
            vector = []
            for index, label in enumerate(self.universe):
                var = f"{name}_{index}"
                if label in required:
                    domains[var] = (1,)
                elif label in possible:
                    domains[var] = (0, 1)
                else:
                    domains[var] = (0,)
                vector.append(var)
            vectors.append(tuple(vector))
        constraint = AtMost1(universe=tuple(self.universe), sets=tuple(vectors), cardinality=cardinality)
        return _instance(domains, constraint)


@register_gadget(name="atmost1", source="3sat", tags=["atMost1"])
def build_atmost1_gadget(cnf: Cnf3, cardinality: int = 2) -> GadgetOutput:
    """
    Per clause a set holding its marker and one literal occurrence; per
    positive occurrence of x_i in one clause and negative occurrence in
    another, two auxiliary sets that forbid using both occurrences.
    """
    if cardinality < 2:
        raise ValueError("atmost1 gadget needs cardinality >= 2")
    system = _SetSystem()
    markers = [system.element(f"m{j}") for j in range(len(cnf.clauses))]
    occurrences = [{lit: system.element(f"o{j}:{lit}") for lit in dict.fromkeys(clause)}
                   for j, clause in enumerate(cnf.clauses)]

    for j, marker in enumerate(markers):
        system.add_set(f"X{j}", [marker], occurrences[j].values())

    for (s, positive), (t, negative) in itertools.product(enumerate(occurrences), repeat=2):
        if s == t:
            continue
        for lit in positive:
            if lit > 0 and -lit in negative:
                tag = f"{s}_{t}_{lit}"
                system.add_set(f"Y{tag}", [markers[s]], [positive[lit], negative[-lit]])
                system.add_set(f"Z{tag}", [negative[-lit]], [markers[s], markers[t]])

    system.pad(cardinality)
    instance = system.instance(cardinality)
    logger.debug("atmost1 gadget: %d sets over %d elements", len(system.sets), len(system.universe))

    def decode(t: dict) -> Tuple[bool, ...]:
        model = [False] * cnf.num_vars
        for j, chosen in enumerate(occurrences):
            for lit, label in chosen.items():
                if lit > 0 and t[f"X{j}_{system.universe.index(label)}"] == 1:
                    model[lit - 1] = True
        return tuple(model)

    return GadgetOutput(
        family="atmost1",
        instance=instance,
        question="no-gac-wipeout",
        meaning=SATISFIABLE + " (a yes always decodes to a model; a no is exact on the fixtures)",
        decode=decode,
        complete=False,
    )


@register_gadget(name="scalarproduct", source="1in3", tags=["scalarProduct"])
def build_scalarproduct_gadget(cnf: Cnf3Positive, target: int = 1) -> GadgetOutput:
    """
    A 0/1 grid whose first row is the model. Columns 0..3m-1 are literal
    occurrences, columns 3m..3m+n-1 the negations of the variables. Clause
    rows force exactly one true occurrence per clause; one row per occurrence
    ties it to its variable's negation column. Constant rows that share no
    column get a balancing column of their own, and target-1 all-ones columns
    lift every product to target.
    """
    if target < 1:
        raise ValueError("scalarproduct gadget needs target >= 1")
    m, n = len(cnf.clauses), cnf.num_vars
    width = 3 * m + n
    constant_rows: List[List[int]] = []
    for j in range(m):
        row = [0] * width
        for k in range(3):
            row[3 * j + k] = 1
        constant_rows.append(row)
    for j, clause in enumerate(cnf.clauses):
        for k, lit in enumerate(clause):
            row = [0] * width
            row[3 * j + k] = 1
            row[3 * m + lit - 1] = 1
            constant_rows.append(row)

    balancing = [(a, b) for a, b in itertools.combinations(range(len(constant_rows)), 2)
                 if sum(x * y for x, y in zip(constant_rows[a], constant_rows[b])) == 0]
    for a, b in balancing:
        for index, row in enumerate(constant_rows):
            row.append(1 if index in (a, b) else 0)
    for row in constant_rows:
        row.extend([1] * (target - 1))

    domains, rows = {}, []
    model_row = []
    for col in range(width + len(balancing) + target - 1):
        var = f"R0_{col}"
        if col < width:
            domains[var] = (0, 1)
        elif col < width + len(balancing):
            domains[var] = (0,)
        else:
            domains[var] = (1,)
        model_row.append(var)
    rows.append(tuple(model_row))
    for r, values in enumerate(constant_rows, start=1):
        row = []
        for col, value in enumerate(values):
            var = f"R{r}_{col}"
            domains[var] = (value,)
            row.append(var)
        rows.append(tuple(row))

    return GadgetOutput(
        family="scalarproduct",
        instance=_instance(domains, ScalarProduct(rows=tuple(rows), target=target)),
        question="no-gac-wipeout",
        meaning="yes iff the positive formula has a 1-in-3 model",
        decode=lambda t: tuple(t[f"R0_{3 * m + i}"] == 0 for i in range(n)),
    )
