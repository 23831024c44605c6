import itertools
from typing import Dict, List, Optional, Set, Tuple

from ..core import ArityTooLargeError, Instance, UnsupportedInstanceError, Value, evaluate_positional
from ..utils.config import get_settings
from .outcome import PropagationOutcome, make_outcome, wipeout_outcome
from .registry import register_propagator, require_distinct, require_kind

State = Tuple[Value, ...]


def _bits(counts: int) -> Set[int]:
    found, index = set(), 0
    while counts:
        if counts & 1:
            found.add(index)
        counts >>= 1
        index += 1
    return found


def _sumset(left: int, right: int) -> int:
    total = 0
    while left:
        low = left & -left
        total |= right << (low.bit_length() - 1)
        left ^= low
    return total


class CountLattice:
    """
    For each (sequence position, value), the totals of satisfied windows that
    a full assignment through that value can reach and that lie in D(N).
    Totals are bitsets over 0..#windows.
    """

    def __init__(self, windows: int):
        self.windows = windows
        self.cells: Dict[Tuple[int, Value], int] = {}
        self.totals = 0

    def mark(self, position: int, value: Value, counts: int):
        self.cells[(position, value)] = self.cells.get((position, value), 0) | counts

    def counts(self, position: int, value: Value) -> Set[int]:
        return _bits(self.cells.get((position, value), 0))

    def supported(self, position: int, value: Value) -> bool:
        return bool(self.cells.get((position, value), 0))

    def achievable(self) -> Set[int]:
        return _bits(self.totals)


def _window_tuples(domains: List[Tuple[Value, ...]], start: int, k: int, limit: int):
    size = 1
    for offset in range(k):
        size *= len(domains[start + offset])
    if size > limit:
        raise ArityTooLargeError(f"window {start} has {size} tuples, limit is {limit}")
    return itertools.product(*domains[start:start + k])


def count_lattice(instance: Instance, window_limit: Optional[int] = None) -> CountLattice:
    """
    Two sliding passes over the sequence. The forward pass keeps, per window
    prefix state, the satisfaction counts reachable from the left; the
    backward pass the counts reachable to the right. A window tuple is
    supported when its prefix counts, its own contribution and the suffix
    counts add up to a value of D(N).
    """
    constraint = instance.constraint
    limit = window_limit or get_settings().window_limit
    sequence = constraint.sequence
    template = constraint.template
    k = constraint.arity
    windows = constraint.window_count
    domains = [instance.domains[var] for var in sequence]
    allowed = 0
    for n in instance.domains[constraint.counter]:
        if 0 <= n <= windows:
            allowed |= 1 << n

    satisfied: List[Dict[State, int]] = []
    for start in range(windows):
        satisfied.append({t: int(evaluate_positional(template, t))
                          for t in _window_tuples(domains, start, k, limit)})

    forward: List[Dict[State, int]] = [dict.fromkeys(itertools.product(*domains[0:k - 1]), 1)]
    for start in range(windows):
        layer: Dict[State, int] = {}
        for t, sat in satisfied[start].items():
            before = forward[start].get(t[:-1], 0)
            if before:
                layer[t[1:]] = layer.get(t[1:], 0) | (before << sat)
        forward.append(layer)

    backward: List[Dict[State, int]] = [dict() for _ in range(windows + 1)]
    backward[windows] = dict.fromkeys(itertools.product(*domains[windows:windows + k - 1]), 1)
    for start in reversed(range(windows)):
        layer = {}
        for t, sat in satisfied[start].items():
            after = backward[start + 1].get(t[1:], 0)
            if after:
                layer[t[:-1]] = layer.get(t[:-1], 0) | (after << sat)
        backward[start] = layer

    lattice = CountLattice(windows)
    for start in range(windows):
        for t, sat in satisfied[start].items():
            before = forward[start].get(t[:-1], 0)
            after = backward[start + 1].get(t[1:], 0)
            if not before or not after:
                continue
            totals = _sumset(before << sat, after) & allowed
            if totals:
                lattice.totals |= totals
                for offset, value in enumerate(t):
                    lattice.mark(start + offset, value, totals)
    return lattice


@register_propagator(name="cardpath-dp", kinds=["cardpath"], tags=["gac", "dynamic-programming"])
def cardpath_dp_gac(instance: Instance, window_limit: Optional[int] = None) -> PropagationOutcome:
    """GAC on Cardpath over a sequence without repeated variables"""
    require_kind(instance, "cardpath-dp")
    constraint = instance.constraint
    require_distinct(constraint.sequence, "cardpath sequence")
    if constraint.counter in constraint.sequence:
        raise UnsupportedInstanceError("cardpath: counter also occurs in the sequence")
    if any(not instance.domains[var] for var in instance.scope):
        return wipeout_outcome(instance, "cardpath-dp", reason="empty domain")

    lattice = count_lattice(instance, window_limit)
    filtered = {constraint.counter: [n for n in instance.domains[constraint.counter] if n in lattice.achievable()]}
    for position, var in enumerate(constraint.sequence):
        filtered[var] = [value for value in instance.domains[var] if lattice.supported(position, value)]
    return make_outcome(instance, filtered, "cardpath-dp", windows=lattice.windows)
