"""
Acceptance suites: differential runs between engines, propagators, gadgets
and oracles over seeded corpora.

A suite is a generator of (case, outcome) pairs registered under a name.
`run_suite` drives it into a SuiteReport, in case order.
"""
import random
import sys
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from tqdm import tqdm

from ..core import (
    BudgetExhaustedError, Disjoint, GadgetError, Instance, check, instance_to_dict, is_subdomain, removed_values,
    wipeout_normal_form,
)
from ..engine import (
    SearchBudget, gac_domain, gac_domain_via_support, gac_support, gac_support_via_domain, gac_support_via_wipeout,
    is_it_gac, is_it_gac_via_maxgac, max_gac, max_gac_via_support, no_gac_wipeout, no_gac_wipeout_via_support,
    search_space, superset_sweep_max_gac,
)
from ..gadgets import (
    Cnf3, Cnf3Positive, Graph, GraphPair, Max2SatInput, build_gadget, gadgets, oracle_solve, verify_gadget,
    write_cnf, write_graph,
)
from ..propagators import disjoint_decomposition_ac, propagate
from ..utils.logging import get_logger
from ..utils.registry import make_register
from . import corpus
from .reports import SuiteReport

logger = get_logger(__name__)

suites: Dict[str, dict] = {}
suites_by_tag: Dict[str, List[str]] = {}

_register = make_register(suites, suites_by_tag)

Case = Tuple[dict, str]


def register_suite(name: str = None, description: str = None, tags: List[str] = None):
    """
    Register a suite generator.

    Parameters:
        name (str, optional): Name used by `suite <name>`. Defaults to the function name.
        description (str, optional): Defaults to the first line of the docstring.
        tags (List[str], optional): Tags used to pick suites for the smoke run.
    """
    return _register(name=name, description=description, tags=tags)


SCALES = ("small", "full")

PLANT_RATE = 0.25

# source generator bounds per scale, then per-family overrides
SOURCE_BOUNDS = {
    "small": {
        "3sat": {"max_vars": 4, "max_clauses": 4, "plant_rate": PLANT_RATE},
        "1in3": {"max_vars": 4, "max_clauses": 2, "plant_rate": PLANT_RATE},
        "max2sat": {"max_vars": 2, "max_clauses": 3, "max_bound": 2, "plant_rate": PLANT_RATE},
        "3col": {"max_vertices": 4},
        "3col-pair": {"max_vertices": 4, "plant_rate": PLANT_RATE},
    },
    "full": {
        "3sat": {"max_vars": 4, "max_clauses": 6, "plant_rate": PLANT_RATE},
        "1in3": {"max_vars": 4, "max_clauses": 3, "plant_rate": PLANT_RATE},
        "max2sat": {"max_vars": 3, "max_clauses": 4, "max_bound": 2, "plant_rate": PLANT_RATE},
        "3col": {"max_vertices": 5},
        "3col-pair": {"max_vertices": 5, "plant_rate": PLANT_RATE},
    },
}

FAMILY_BOUNDS = {
    "small": {
        "atmost1": {"max_vars": 3, "max_clauses": 2},
        "card": {"max_vars": 3, "max_clauses": 2, "max_occurrences": 3},
        "scalarproduct": {"max_clauses": 2},
    },
    "full": {
        "atmost1": {"max_vars": 3, "max_clauses": 3},
        "card": {"max_vars": 3, "max_clauses": 2, "max_occurrences": 3},
    },
}

# sources a gadget family cannot take at all are never drawn
SOURCE_FILTERS = {
    "cardpath-3col": Graph.is_connected,
}

# random sources whose gadget search space is larger are set aside and replaced
SPACE_LIMITS = {"small": 20_000, "full": 1_000_000}

SMALL_SIZE = 20
FULL_GADGET_SOURCES = 200
FULL_PROPAGATOR_CASES = 300


@dataclass
class SuiteOptions:
    seed: int = 0
    scale: str = "small"
    size: Optional[int] = None
    budget: SearchBudget = None
    max_arity: int = 4
    max_domain: int = 4
    fixtures_only: bool = False
    progress: bool = True
    corpus_size: int = 500
    families: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.scale not in SCALES:
            raise ValueError(f"Unknown scale {self.scale!r}; expected one of {', '.join(SCALES)}")
        unknown = sorted(set(self.families or ()) - set(gadgets))
        if unknown:
            raise ValueError(f"Unknown gadget families: {', '.join(unknown)}")
        self.budget = self.budget or SearchBudget.default()

    @property
    def space_limit(self) -> int:
        return min(SPACE_LIMITS[self.scale], self.budget.max_tuples_explored)

    def count(self, full: int) -> int:
        """Cases per stream: the explicit size, else the small default or the given full-scale count"""
        if self.size is not None:
            return self.size
        return full if self.scale == "full" else SMALL_SIZE

    def rng(self, stream: str) -> random.Random:
        """An independent generator per stream, so adding cases to one stream leaves the others unchanged"""
        return random.Random(f"{self.seed}/{stream}")


def _compare(name: str, engines: Tuple[str, str], left, right, instance: Instance = None, **extra) -> Case:
    outcome = "agree" if left == right else "disagree"
    case = {"name": name, "engines": list(engines), "answers": [left, right], **extra}
    if outcome == "disagree" and instance is not None:
        case["instance"] = instance_to_dict(instance)
    return case, outcome


def _law(name: str, law: str, holds: bool, instance: Instance) -> Case:
    return _compare(name, ("law", law), True, holds, instance)


def _skipped(name: str, reason: str, cause: str = "budget") -> Case:
    """A case left undecided; cause is budget, oversized or precondition"""
    return {"name": name, "reason": reason, "cause": cause}, "skipped"


def _scope_domains(domains, instance: Instance) -> dict:
    return {var: list(domains[var]) for var in instance.scope}


# Reducer equivalence and engine laws

def reducer_cases(name: str, instance: Instance, rng: random.Random, budget: SearchBudget) -> Iterator[Case]:
    """Every reducer against its direct question, then the engine laws, on one instance"""
    pairs = [(var, value) for var in instance.scope for value in instance.domains[var]]
    if pairs:
        var, value = rng.choice(pairs)
        direct = gac_support(instance, var, value, budget)
        yield _compare(f"{name}/gac-support", ("generic", "via-wipeout"), direct.answer,
                       gac_support_via_wipeout(instance, var, value, budget).answer, instance, pair=[var, value])
        yield _compare(f"{name}/gac-support", ("generic", "via-domain"), direct.answer,
                       gac_support_via_domain(instance, var, value, budget).answer, instance, pair=[var, value])
        if direct.witness is not None:
            witness = direct.witness
            sound = (witness[var] == value and check(instance.constraint, witness)
                     and all(witness[x] in instance.domains[x] for x in instance.scope))
            yield _law(f"{name}/witness", "witness-soundness", sound, instance)

    yield _compare(f"{name}/no-gac-wipeout", ("generic", "via-support"), no_gac_wipeout(instance, budget).answer,
                   no_gac_wipeout_via_support(instance, budget).answer, instance)

    maximal = gac_domain(instance, budget)
    rebuilt = gac_domain_via_support(instance, budget)
    yield _compare(f"{name}/gac-domain", ("generic", "via-support"),
                   _scope_domains(maximal.domains, instance), _scope_domains(rebuilt.domains, instance), instance)

    yield _compare(f"{name}/is-it-gac", ("generic", "via-maxgac"), is_it_gac(instance, budget).answer,
                   is_it_gac_via_maxgac(instance, budget).answer, instance)

    candidates = [maximal.domains]
    shrinkable = [var for var in instance.scope if maximal.domains[var]]
    if shrinkable:
        var = rng.choice(shrinkable)
        candidates.append({**maximal.domains, var: maximal.domains[var][1:]})
    for index, candidate in enumerate(candidates):
        direct = max_gac(instance, candidate, budget).answer
        yield _compare(f"{name}/max-gac/{index}", ("generic", "via-support"), direct,
                       max_gac_via_support(instance, candidate, budget).answer, instance)
        removed = removed_values(instance.domains, wipeout_normal_form(candidate, instance.scope))
        if len(removed) <= 6:
            yield _compare(f"{name}/max-gac/{index}", ("generic", "superset-sweep"), direct,
                           superset_sweep_max_gac(instance, candidate, budget).answer, instance)

    narrowed = instance.with_domains(maximal.domains)
    yield _law(f"{name}/contractance", "contractance", is_subdomain(maximal.domains, instance.domains), instance)
    yield _law(f"{name}/idempotence", "idempotence",
               gac_domain(narrowed, budget).domains == maximal.domains, instance)
    yield _law(f"{name}/single-pass", "single-pass", is_it_gac(narrowed, budget).answer, instance)


@register_suite(name="reducers", tags=["smoke"])
def reducers_suite(options: SuiteOptions) -> Iterator[Case]:
    """Reducers agree with direct questions; engine laws hold"""
    size = options.count(options.corpus_size)
    instances = corpus.reducer_corpus(options.seed, size, options.max_arity, options.max_domain)
    rng = options.rng("reducers")
    for index, instance in enumerate(instances):
        name = f"reducers/{index}:{instance.constraint.kind}"
        try:
            yield from reducer_cases(name, instance, rng, options.budget)
        except BudgetExhaustedError as e:
            yield _skipped(name, str(e))


# Propagators against the generic engine

@register_suite(name="propagators", tags=["smoke"])
def propagators_suite(options: SuiteOptions) -> Iterator[Case]:
    """Specialized propagators equal generic gac-domain"""
    size = options.count(FULL_PROPAGATOR_CASES)
    for propagator, generate in corpus.PROPAGATOR_CORPORA.items():
        rng = options.rng(propagator)
        for index in range(size):
            instance = generate(rng)
            name = f"propagators/{propagator}/{index}"
            try:
                outcome = propagate(instance, propagator)
                direct = gac_domain(instance, options.budget)
            except BudgetExhaustedError as e:
                yield _skipped(name, str(e))
                continue
            yield _compare(name, (propagator, "generic"), _scope_domains(outcome.domains, instance),
                           _scope_domains(direct.domains, instance), instance)


# Gadgets against oracles

def _source_text(source) -> str:
    if isinstance(source, GraphPair):
        return write_graph(source.first) + "\n" + write_graph(source.second)
    if isinstance(source, Graph):
        return write_graph(source)
    return write_cnf(source)


F1 = Cnf3(3, ((1, 2, 3), (-1, -2, -3)))
F2 = Cnf3(3, tuple((a * 1, b * 2, c * 3) for a in (1, -1) for b in (1, -1) for c in (1, -1)))
U1 = Cnf3(1, ((1, 1, 1), (-1, -1, -1)))
P1 = Cnf3Positive(3, ((1, 2, 3),))
Q1 = Cnf3Positive(1, ((1, 1, 1),))
K3 = Graph(3, ((0, 1), (0, 2), (1, 2)))
K4 = Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
W1 = Max2SatInput(2, ((1, 2), (-1, -2)), 0)
W2 = Max2SatInput(2, ((1, 2), (1, -2), (-1, 2), (-1, -2)), 0)
W2_ONE = Max2SatInput(2, W2.clauses, 1)

K3_ON_4 = Graph(4, K3.edges)

FIXTURES = {
    "3sat": {"F1": F1, "F2": F2},
    "1in3": {"P1": P1, "Q1": Q1},
    "3col": {"K3": K3, "K4": K4},
    "3col-pair": {
        "K3+K4": GraphPair(K3_ON_4, K4),
        "K3+K3": GraphPair(K3_ON_4, K3_ON_4),
        "K4+K4": GraphPair(K4, K4),
    },
    "max2sat": {"W1": W1, "W2": W2, "W2/k=1": W2_ONE},
}

# U1 is the unsatisfiable fixture within reach of these two: card allows three occurrences
# per variable, and atmost1 on F2 is beyond any desk budget
FAMILY_FIXTURES = {
    "card": {"F1": F1, "F2": F2, "U1": U1},
    "atmost1": {"F1": F1, "U1": U1},
}


def fixtures_for(family: str) -> Dict[str, object]:
    if family in FAMILY_FIXTURES:
        return FAMILY_FIXTURES[family]
    return FIXTURES[gadgets[family]["source"]]


def is_exhaustive(family: str) -> bool:
    """Graph families run over every small graph instead of a random stream"""
    return gadgets[family]["source"] == "3col"


def random_sources(family: str, options: SuiteOptions) -> Iterator:
    """
    Sources for one family: every labelled graph up to the scale's size for
    3col families, otherwise an endless seeded stream.
    """
    kind = gadgets[family]["source"]
    bounds = dict(SOURCE_BOUNDS[options.scale][kind])
    bounds.update(FAMILY_BOUNDS[options.scale].get(family, {}))
    accept = SOURCE_FILTERS.get(family, lambda source: True)
    rng = options.rng(f"gadgets/{family}")
    if kind == "3col":
        yield from (graph for graph in corpus.all_graphs(**bounds) if accept(graph))
        return
    generate = {
        "3sat": corpus.random_cnf3,
        "1in3": corpus.random_positive_cnf3,
        "max2sat": corpus.random_max2sat,
        "3col-pair": corpus.random_graph_pair,
    }[kind]
    while True:
        source = generate(rng, **bounds)
        if accept(source):
            yield source


def gadget_case(name: str, family: str, source, budget: SearchBudget, space_limit: Optional[int] = None) -> Case:
    """
    Build one gadget, verify it against the oracle and turn the verdict into
    a case. The outcome is the verification outcome, or skipped when the
    gadget rejects the source, its search space exceeds space_limit or the
    budget runs out.
    """
    try:
        gadget = build_gadget(family, source)
    except GadgetError as e:
        return _skipped(name, str(e), "precondition")
    space = search_space(gadget.instance)
    if space_limit is not None and space > space_limit:
        return _skipped(name, f"search space {space} exceeds {space_limit}", "oversized")
    report = verify_gadget(gadget, source, budget)
    if report.error is not None:
        return _skipped(name, report.error)
    case = {
        "name": name,
        "engines": [f"{family}:{gadget.question}", f"oracle:{source.kind}"],
        "answers": [report.engine_answer, report.oracle_answer],
        "certificateValid": report.certificate_valid,
        "tuplesExplored": report.tuples_explored,
    }
    if report.outcome != "agree":
        case["source"] = _source_text(source)
    return case, report.outcome


@dataclass
class Coverage:
    """Decided cases of one gadget family against the number it must reach"""
    family: str
    target: int
    verified: int = 0
    yes: int = 0
    no: int = 0
    incomplete: int = 0
    skipped: Dict[str, int] = field(default_factory=dict)

    def record(self, case: dict, outcome: str):
        if outcome == "agree":
            self.verified += 1
            if case["answers"][1]:
                self.yes += 1
            else:
                self.no += 1
        elif outcome == "incomplete":
            self.incomplete += 1
        elif outcome == "skipped":
            self.skipped[case["cause"]] = self.skipped.get(case["cause"], 0) + 1

    @property
    def reached(self) -> bool:
        return self.verified >= self.target and self.yes > 0 and self.no > 0

    def case(self) -> Case:
        record = {
            "name": f"gadgets/{self.family}/coverage",
            "target": self.target,
            "verified": self.verified,
            "yes": self.yes,
            "no": self.no,
            "incomplete": self.incomplete,
            "skipped": dict(sorted(self.skipped.items())),
        }
        return record, "covered" if self.reached else "shortfall"


def family_cases(family: str, options: SuiteOptions) -> Iterator[Case]:
    """
    Fixtures, then sources until the family has `target` verified cases with
    both answers among them, then the coverage record. Random streams give up
    after ten draws per targeted case; graph families always run every graph.
    """
    coverage = Coverage(family, options.count(FULL_GADGET_SOURCES))
    for label, source in fixtures_for(family).items():
        case, outcome = gadget_case(f"gadgets/{family}/{label}", family, source, options.budget)
        coverage.record(case, outcome)
        yield case, outcome
    if options.fixtures_only:
        return

    exhaustive = is_exhaustive(family)
    max_draws = max(10 * coverage.target, 100)
    for index, source in enumerate(random_sources(family, options)):
        if not exhaustive and (coverage.reached or index >= max_draws):
            break
        case, outcome = gadget_case(f"gadgets/{family}/{index}", family, source, options.budget,
                                    options.space_limit)
        coverage.record(case, outcome)
        yield case, outcome
    logger.info("%s: %d verified (%d yes, %d no), skipped %s", family, coverage.verified, coverage.yes,
                coverage.no, coverage.skipped)
    yield coverage.case()


@register_suite(name="gadgets", tags=["smoke"])
def gadgets_suite(options: SuiteOptions) -> Iterator[Case]:
    """Every gadget family answers as its source oracle does, on enough decided sources"""
    for family in gadgets:
        if options.families is None or family in options.families:
            yield from family_cases(family, options)


# Worked examples and structural checks

def disjoint_example() -> Instance:
    domains = {"X1": (1, 2), "X2": (1, 3), "Y1": (1, 2), "Y2": (1, 3), "Y3": (2, 3)}
    return Instance(variables=tuple(domains), domains=domains,
                    constraint=Disjoint(scope=tuple(domains), split=2))


DISJOINT_PRUNINGS = [["X2", 3], ["Y1", 1], ["Y2", 1]]
DISJOINT_GAC = {"X1": (1,), "X2": (1,), "Y1": (2,), "Y2": (3,), "Y3": (2, 3)}


def _free_model_cells(gadget) -> int:
    """Model row cells of the scalarproduct grid left free, one per core column"""
    return sum(1 for var in gadget.instance.constraint.rows[0] if gadget.instance.domains[var] == (0, 1))


@register_suite(name="paper-examples", tags=["smoke"])
def examples_suite(options: SuiteOptions) -> Iterator[Case]:
    """The Disjoint worked example, gadget sizes and fixture verdicts"""
    instance = disjoint_example()
    generic = gac_domain(instance, options.budget)
    removed = [list(pair) for pair in removed_values(instance.domains, generic.domains)]
    yield _compare("examples/disjoint/prunings", ("listed", "generic"), True,
                   all(pair in removed for pair in DISJOINT_PRUNINGS), instance, removed=removed)
    yield _compare("examples/disjoint/fixpoint", ("generic", "via-support"), generic.domains,
                   gac_domain_via_support(instance, options.budget).domains, instance)
    yield _compare("examples/disjoint/domains", ("expected", "generic"), DISJOINT_GAC, generic.domains, instance)
    yield _compare("examples/disjoint/is-it-gac", ("expected", "generic"), False,
                   is_it_gac(instance, options.budget).answer, instance)
    decomposition = disjoint_decomposition_ac(instance)
    yield _compare("examples/disjoint/decomposition", ("expected", "disjoint-decomposition"), [],
                   [list(pair) for pair in decomposition.removed], instance)

    sizes = [
        ("nvalue", "nvalue", F1, lambda g: len(g.instance.variables), F1.num_vars + len(F1.clauses) + 1),
        ("scalarproduct", "scalarproduct", P1, lambda g: len(g.instance.constraint.rows), 4 * len(P1.clauses) + 1),
        ("scalarproduct/model-columns", "scalarproduct", P1, _free_model_cells, 3 * len(P1.clauses) + P1.num_vars),
        ("gcc-repeat", "gcc-repeat", F1, lambda g: len(g.instance.constraint.scope),
         len(F1.clauses) + F1.num_vars * len(F1.clauses)),
        ("card", "card", F1, lambda g: len(g.instance.constraint.children), 5 * len(F1.clauses)),
    ]
    for label, family, source, measure, expected in sizes:
        yield _compare(f"examples/size/{label}", ("expected", family), expected, measure(build_gadget(family, source)))

    verdicts = [("F1", F1, True), ("F2", F2, False), ("U1", U1, False), ("P1", P1, True), ("Q1", Q1, False),
                ("K3", K3, True), ("K4", K4, False), ("W1", W1, True), ("W2", W2, False), ("W2/k=1", W2_ONE, True)]
    for label, source, expected in verdicts:
        yield _compare(f"examples/oracle/{label}", ("expected", f"oracle:{source.kind}"), expected,
                       oracle_solve(source)[0])


@register_suite(name="smoke")
def smoke_suite(options: SuiteOptions) -> Iterator[Case]:
    """A few cases from every other suite"""
    quick = SuiteOptions(seed=options.seed, scale="small", size=min(options.size or 5, 5), budget=options.budget,
                         max_arity=options.max_arity, max_domain=options.max_domain, fixtures_only=True,
                         progress=False)
    for name in suites_by_tag.get("smoke", []):
        yield from suites[name]["function"](quick)


def run_suite(name: str, options: SuiteOptions) -> SuiteReport:
    """Drive a registered suite into a report, with a progress bar on stderr"""
    if name not in suites:
        raise ValueError(f"Unknown suite {name!r}; available: {', '.join(suites)}")
    report = SuiteReport(name, options.seed)
    cases = suites[name]["function"](options)
    for case, outcome in tqdm(cases, desc=name, unit="case", file=sys.stderr, disable=not options.progress):
        report.add_case(case, outcome)
        if outcome == "disagree":
            logger.warning("%s: %s disagree (%s vs %s)", case["name"], " / ".join(case["engines"]),
                           *case["answers"])
        elif outcome == "shortfall":
            logger.warning("%s: %d of %d verified (%d yes, %d no), skipped %s", case["name"], case["verified"],
                           case["target"], case["yes"], case["no"], case["skipped"])
    logger.info("%s: %s", name, report.tallies)
    return report
