"""
Polynomial-time checkers, one per constraint kind.

A tuple is a mapping VarId -> Value, so repeated scope positions always read
the same value. Every checker may be handed a StepCounter; it ticks once per
scope position read (and per inner comparison in the quadratic kinds), which
is how the polynomiality of each checker is measured.
"""
import itertools
from typing import Dict, List, Mapping, Optional, Sequence

from ..utils.registry import make_register
from .constraints import VarId, Value
from .errors import MissingVariableError
from .predicates import predicates

checkers: Dict[str, dict] = {}
checkers_by_tag: Dict[str, List[str]] = {}

_register = make_register(checkers, checkers_by_tag)


def register_checker(kind: str, tags: List[str] = None):
    """Register the checker of one constraint kind, under the kind name"""
    return _register(name=kind, tags=tags)


class StepCounter:
    def __init__(self):
        self.steps = 0

    def tick(self, n: int = 1):
        self.steps += n


def _tick(steps: Optional[StepCounter], n: int = 1):
    if steps is not None:
        steps.tick(n)


def _read(t: Mapping[VarId, Value], positions: Sequence[VarId], steps: Optional[StepCounter]):
    _tick(steps, len(positions))
    return [t[var] for var in positions]


def evaluate(constraint, t: Mapping[VarId, Value], steps: Optional[StepCounter] = None) -> bool:
    """
    Truth of the constraint's defining predicate on t.

    Raises MissingVariableError when t does not assign every scope variable.
    Domains play no role here.
    """
    missing = [var for var in constraint.variables() if var not in t]
    if missing:
        raise MissingVariableError(missing)
    return check(constraint, t, steps)


def check(constraint, t: Mapping[VarId, Value], steps: Optional[StepCounter] = None) -> bool:
    """evaluate without the coverage test, for callers that built t from the scope"""
    return checkers[constraint.kind]["function"](constraint, t, steps)


def evaluate_positional(template, values: Sequence[Value], steps: Optional[StepCounter] = None) -> bool:
    """Bind the template's placeholders to values in order and check it"""
    return check(template, dict(zip(template.scope, values)), steps)


@register_checker("table", tags=["extensional"])
def check_table(constraint, t, steps):
    return tuple(_read(t, constraint.scope, steps)) in constraint.allowed


@register_checker("binaryNetwork", tags=["extensional"])
def check_binary_network(constraint, t, steps):
    values = _read(t, constraint.scope, steps)
    for relation in constraint.relations:
        _tick(steps)
        if (values[relation.i], values[relation.j]) not in relation.allowed:
            return False
    return True


@register_checker("impliesCnf", tags=["global"])
def check_implies_cnf(constraint, t, steps):
    guard, *xs = _read(t, constraint.scope, steps)
    if guard == 0:
        return True
    for clause in constraint.cnf:
        _tick(steps, len(clause))
        if not any((xs[abs(lit) - 1] != 0) == (lit > 0) for lit in clause):
            return False
    return True


@register_checker("allDifferent", tags=["global"])
def check_all_different(constraint, t, steps):
    values = _read(t, constraint.scope, steps)
    return len(set(values)) == len(values)


@register_checker("nvalue", tags=["global"])
def check_nvalue(constraint, t, steps):
    *xs, n = _read(t, constraint.scope, steps)
    return len(set(xs)) == n


@register_checker("among", tags=["global"])
def check_among(constraint, t, steps):
    n, *xs = _read(t, constraint.scope, steps)
    wanted = set(constraint.value_set)
    return sum(1 for x in xs if x in wanted) == n


@register_checker("amongVar", tags=["global"])
def check_among_var(constraint, t, steps):
    n, *rest = _read(t, constraint.scope, steps)
    xs, ds = rest[:constraint.split], set(rest[constraint.split:])
    return sum(1 for x in xs if x in ds) == n


@register_checker("common", tags=["global"])
def check_common(constraint, t, steps):
    n, m, *rest = _read(t, constraint.scope, steps)
    xs, ys = rest[:constraint.split], rest[constraint.split:]
    x_values, y_values = set(xs), set(ys)
    return (sum(1 for x in xs if x in y_values) == n
            and sum(1 for y in ys if y in x_values) == m)


@register_checker("gcc", tags=["global"])
def check_gcc(constraint, t, steps):
    values = _read(t, constraint.scope, steps)
    for entry in constraint.occ:
        _tick(steps)
        count = values.count(entry.value)
        if not entry.low <= count <= entry.high:
            return False
    return True


@register_checker("gccVar", tags=["global"])
def check_gcc_var(constraint, t, steps):
    values = _read(t, constraint.scope, steps)
    split = len(values) - len(constraint.values)
    xs, occurrences = values[:split], values[split:]
    for value, occurrence in zip(constraint.values, occurrences):
        _tick(steps)
        if xs.count(value) != occurrence:
            return False
    return True


@register_checker("disjoint", tags=["global"])
def check_disjoint(constraint, t, steps):
    values = _read(t, constraint.scope, steps)
    return not set(values[:constraint.split]) & set(values[constraint.split:])


@register_checker("scalarProduct", tags=["global"])
def check_scalar_product(constraint, t, steps):
    grid = [_read(t, row, steps) for row in constraint.rows]
    for left, right in itertools.combinations(grid, 2):
        _tick(steps, len(left))
        if sum(a * b for a, b in zip(left, right)) != constraint.target:
            return False
    return True


@register_checker("atMost1", tags=["global"])
def check_at_most_1(constraint, t, steps):
    members = [[value != 0 for value in _read(t, vector, steps)] for vector in constraint.sets]
    if any(sum(vector) != constraint.cardinality for vector in members):
        return False
    for left, right in itertools.combinations(members, 2):
        _tick(steps, len(left))
        if sum(1 for a, b in zip(left, right) if a and b) > 1:
            return False
    return True


@register_checker("card", tags=["meta"])
def check_card(constraint, t, steps):
    _tick(steps)
    satisfied = sum(1 for child in constraint.children if check(child, t, steps))
    return t[constraint.counter] == satisfied


@register_checker("cardpath", tags=["meta"])
def check_cardpath(constraint, t, steps):
    values = _read(t, constraint.sequence, steps)
    k = constraint.arity
    satisfied = 0
    for start in range(constraint.window_count):
        if evaluate_positional(constraint.template, values[start:start + k], steps):
            satisfied += 1
    return t[constraint.counter] == satisfied


@register_checker("predicate", tags=["intensional"])
def check_predicate(constraint, t, steps):
    values = _read(t, constraint.scope, steps)
    return predicates[constraint.name]["function"](values, constraint.params)
