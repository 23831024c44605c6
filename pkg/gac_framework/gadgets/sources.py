"""
Source problems that gadgets are built from, with their text formats.

Formulas use DIMACS CNF (`p cnf n m`, Max2SAT adds the violation bound:
`p cnf n m k`). Graphs use the DIMACS edge format (`p edge n m`, `e u v`).
Both are 1-based on disk; graph vertices are 0-based in memory.
"""
from dataclasses import dataclass
from typing import Dict, List, Tuple, Union

import networkx as nx

from ..core import SourceError

Clause = Tuple[int, ...]


def _check_literals(num_vars: int, clauses, width: int):
    if num_vars < 0:
        raise SourceError("variable count must be non-negative")
    for clause in clauses:
        if len(clause) != width:
            raise SourceError(f"clause {clause} must have exactly {width} literals")
        for literal in clause:
            if literal == 0 or abs(literal) > num_vars:
                raise SourceError(f"literal {literal} outside 1..{num_vars}")


@dataclass(frozen=True)
class Cnf3:
    num_vars: int
    clauses: Tuple[Clause, ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(clause) for clause in self.clauses))
        _check_literals(self.num_vars, self.clauses, 3)

    @property
    def kind(self) -> str:
        return "3sat"

    def occurrences(self) -> Dict[int, int]:
        """Number of clauses each variable occurs in"""
        counts = {var: 0 for var in range(1, self.num_vars + 1)}
        for clause in self.clauses:
            for var in {abs(literal) for literal in clause}:
                counts[var] += 1
        return counts

    def satisfied_by(self, model: Tuple[bool, ...]) -> bool:
        return all(any(model[abs(lit) - 1] == (lit > 0) for lit in clause) for clause in self.clauses)


@dataclass(frozen=True)
class Cnf3Positive(Cnf3):
    """Positive 3-CNF read as a 1-in-3 problem: exactly one true occurrence per clause"""

    def __post_init__(self):
        super().__post_init__()
        if any(literal < 0 for clause in self.clauses for literal in clause):
            raise SourceError("1-in-3 formulas must be positive")

    @property
    def kind(self) -> str:
        return "1in3"

    def one_in_three_by(self, model: Tuple[bool, ...]) -> bool:
        return all(sum(1 for lit in clause if model[lit - 1]) == 1 for clause in self.clauses)


@dataclass(frozen=True)
class Graph:
    num_vertices: int
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if self.num_vertices < 0:
            raise SourceError("vertex count must be non-negative")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise SourceError(f"self-loop on vertex {u}")
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise SourceError(f"edge ({u}, {v}) outside 0..{self.num_vertices - 1}")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @property
    def kind(self) -> str:
        return "3col"

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.num_vertices))
        graph.add_edges_from(self.edges)
        return graph

    def is_connected(self) -> bool:
        return self.num_vertices > 0 and nx.is_connected(self.to_networkx())

    def proper_coloring(self, colors: Tuple[int, ...]) -> bool:
        return (len(colors) == self.num_vertices
                and all(c in (0, 1, 2) for c in colors)
                and all(colors[u] != colors[v] for u, v in self.edges))


@dataclass(frozen=True)
class GraphPair:
    """Two graphs on one vertex set: is the first 3-colorable and the second not?"""
    first: Graph
    second: Graph

    @property
    def kind(self) -> str:
        return "3col-pair"


@dataclass(frozen=True)
class Max2SatInput:
    num_vars: int
    clauses: Tuple[Clause, ...]
    bound: int

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(clause) for clause in self.clauses))
        _check_literals(self.num_vars, self.clauses, 2)
        if not 0 <= self.bound <= len(self.clauses):
            raise SourceError(f"violation bound {self.bound} outside 0..{len(self.clauses)}")

    @property
    def kind(self) -> str:
        return "max2sat"

    def violations(self, model: Tuple[bool, ...]) -> int:
        return sum(1 for clause in self.clauses if not any(model[abs(lit) - 1] == (lit > 0) for lit in clause))


SourceProblem = Union[Cnf3, Cnf3Positive, Graph, GraphPair, Max2SatInput]


def _data_lines(text: str) -> List[List[str]]:
    return [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("c")]


def _parse_dimacs(text: str, header_fields: int) -> Tuple[List[int], List[List[int]]]:
    lines = _data_lines(text)
    if not lines or lines[0][0] != "p" or len(lines[0]) != 2 + header_fields or lines[0][1] != "cnf":
        raise SourceError(f"expected header 'p cnf' with {header_fields} numbers")
    try:
        header = [int(word) for word in lines[0][2:]]
        literals = [int(word) for words in lines[1:] for word in words]
    except ValueError as e:
        raise SourceError(f"not an integer: {e}") from e

    clauses, current = [], []
    for literal in literals:
        if literal == 0:
            clauses.append(current)
            current = []
        else:
            current.append(literal)
    if current:
        raise SourceError("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise SourceError(f"header announces {header[1]} clauses, found {len(clauses)}")
    return header, clauses


def parse_cnf(text: str, positive: bool = False) -> Cnf3:
    header, clauses = _parse_dimacs(text, 2)
    if positive:
        return Cnf3Positive(header[0], tuple(map(tuple, clauses)))
    return Cnf3(header[0], tuple(map(tuple, clauses)))


def parse_max2sat(text: str) -> Max2SatInput:
    header, clauses = _parse_dimacs(text, 3)
    return Max2SatInput(header[0], tuple(map(tuple, clauses)), header[2])


def parse_graph(text: str) -> Graph:
    lines = _data_lines(text)
    if not lines or lines[0][:2] != ["p", "edge"] or len(lines[0]) != 4:
        raise SourceError("expected header 'p edge n m'")
    try:
        n, m = int(lines[0][2]), int(lines[0][3])
        edges = []
        for words in lines[1:]:
            if words[0] != "e" or len(words) != 3:
                raise SourceError(f"bad edge line: {' '.join(words)}")
            edges.append((int(words[1]) - 1, int(words[2]) - 1))
    except ValueError as e:
        raise SourceError(f"not an integer: {e}") from e
    if len(edges) != m:
        raise SourceError(f"header announces {m} edges, found {len(edges)}")
    return Graph(n, tuple(edges))


def write_cnf(cnf: Union[Cnf3, Max2SatInput]) -> str:
    header = f"p cnf {cnf.num_vars} {len(cnf.clauses)}"
    if isinstance(cnf, Max2SatInput):
        header += f" {cnf.bound}"
    return "\n".join([header] + [" ".join(map(str, clause)) + " 0" for clause in cnf.clauses]) + "\n"


def write_graph(graph: Graph) -> str:
    lines = [f"p edge {graph.num_vertices} {len(graph.edges)}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in graph.edges]
    return "\n".join(lines) + "\n"


def parse_source(kind: str, text: str) -> SourceProblem:
    """Parse source text by source kind: 3sat, 1in3, max2sat or 3col"""
    if kind == "3sat":
        return parse_cnf(text)
    if kind == "1in3":
        return parse_cnf(text, positive=True)
    if kind == "max2sat":
        return parse_max2sat(text)
    if kind == "3col":
        return parse_graph(text)
    if kind == "3col-pair":
        parts = text.split("\n\n", 1)
        if len(parts) != 2:
            raise SourceError("a graph pair is two edge lists separated by a blank line")
        return GraphPair(parse_graph(parts[0]), parse_graph(parts[1]))
    raise SourceError(f"unknown source kind {kind!r}")
