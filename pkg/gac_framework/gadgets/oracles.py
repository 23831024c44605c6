"""
Independent exhaustive solvers for the source problems. They share no code
with the consistency engine and serve as ground truth for gadget checks.
"""
import itertools
from typing import Optional, Tuple

from ..core import ScaleLimitError, SourceError
from ..utils.config import get_settings
from .sources import Cnf3, Cnf3Positive, Graph, GraphPair, Max2SatInput, SourceProblem

Model = Tuple[bool, ...]


def _check_scale(size: int, what: str):
    limit = get_settings().oracle_max_vars
    if size > limit:
        raise ScaleLimitError(f"{what} has {size} variables, oracle limit is {limit}")


def sat3_oracle(cnf: Cnf3) -> Tuple[bool, Optional[Model]]:
    """Backtracking over variables in order, pruning on a fully falsified clause"""
    _check_scale(cnf.num_vars, "formula")
    assignment = [None] * cnf.num_vars

    def falsified(clause) -> bool:
        return all(assignment[abs(lit) - 1] is not None and assignment[abs(lit) - 1] != (lit > 0) for lit in clause)

    def search(index: int) -> bool:
        if any(falsified(clause) for clause in cnf.clauses):
            return False
        if index == cnf.num_vars:
            return True
        for value in (True, False):
            assignment[index] = value
            if search(index + 1):
                return True
        assignment[index] = None
        return False

    if search(0):
        return True, tuple(assignment)
    return False, None


def one_in_three_oracle(cnf: Cnf3Positive) -> Tuple[bool, Optional[Model]]:
    """Exactly one true occurrence per clause, repeated occurrences counted"""
    _check_scale(cnf.num_vars, "formula")
    for model in itertools.product((False, True), repeat=cnf.num_vars):
        if cnf.one_in_three_by(model):
            return True, model
    return False, None


def three_col_oracle(graph: Graph) -> Tuple[bool, Optional[Tuple[int, ...]]]:
    _check_scale(graph.num_vertices, "graph")
    neighbours = {v: set() for v in range(graph.num_vertices)}
    for u, v in graph.edges:
        neighbours[u].add(v)
        neighbours[v].add(u)
    colors = [None] * graph.num_vertices

    def search(vertex: int) -> bool:
        if vertex == graph.num_vertices:
            return True
        for color in range(3):
            if all(colors[other] != color for other in neighbours[vertex]):
                colors[vertex] = color
                if search(vertex + 1):
                    return True
        colors[vertex] = None
        return False

    if search(0):
        return True, tuple(colors)
    return False, None


def max2sat_oracle(problem: Max2SatInput) -> Tuple[bool, Optional[Model]]:
    """Is there an assignment violating at most `bound` clauses?"""
    _check_scale(problem.num_vars, "formula")
    best = None
    for model in itertools.product((True, False), repeat=problem.num_vars):
        violated = problem.violations(model)
        if best is None or violated < best[0]:
            best = (violated, model)
    if best is not None and best[0] <= problem.bound:
        return True, best[1]
    return False, None


def graph_pair_oracle(pair: GraphPair) -> Tuple[bool, Optional[Tuple[int, ...]]]:
    first, coloring = three_col_oracle(pair.first)
    second, _ = three_col_oracle(pair.second)
    return first and not second, coloring if first and not second else None


def oracle_solve(source: SourceProblem):
    """
    Exact answer and certificate for a source problem.

    Returns (answer, certificate); the certificate is a model, a coloring or
    None when the answer is no.
    """
    if isinstance(source, Cnf3Positive):
        return one_in_three_oracle(source)
    if isinstance(source, Cnf3):
        return sat3_oracle(source)
    if isinstance(source, Graph):
        return three_col_oracle(source)
    if isinstance(source, GraphPair):
        return graph_pair_oracle(source)
    if isinstance(source, Max2SatInput):
        return max2sat_oracle(source)
    raise SourceError(f"no oracle for {type(source).__name__}")


def validate_certificate(source: SourceProblem, certificate) -> bool:
    """Check a decoded certificate against the source problem"""
    if certificate is None:
        return False
    if isinstance(source, Cnf3Positive):
        return len(certificate) == source.num_vars and source.one_in_three_by(certificate)
    if isinstance(source, Cnf3):
        return len(certificate) == source.num_vars and source.satisfied_by(certificate)
    if isinstance(source, Graph):
        return source.proper_coloring(certificate)
    if isinstance(source, GraphPair):
        return source.first.proper_coloring(certificate)
    if isinstance(source, Max2SatInput):
        return len(certificate) == source.num_vars and source.violations(certificate) <= source.bound
    raise SourceError(f"no certificate check for {type(source).__name__}")
