"""
Constraint specifications.

Every constraint kind is a frozen pydantic model carrying a ``kind``
discriminator, so a whole instance file validates through one
``ConstraintSpec`` union. Models only describe a constraint; the predicate
each kind stands for lives in ``checkers``.
"""
from typing import Annotated, Dict, FrozenSet, Literal, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from .errors import InstanceError
from .predicates import predicate_arity, predicates

VarId = str
Value = int


class ConstraintBase(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid", populate_by_name=True)

    @property
    def positions(self) -> Tuple[VarId, ...]:
        """Scope in positional order, repeated VarIds included"""
        return self.scope

    def variables(self) -> Tuple[VarId, ...]:
        """Distinct scope variables in order of first occurrence"""
        return tuple(dict.fromkeys(self.positions))

    def check_structure(self):
        """Raise InstanceError when kind-specific shape rules are broken"""
        if not self.positions:
            raise InstanceError(f"{self.kind}: empty scope")

    def _fail(self, message: str):
        raise InstanceError(f"{self.kind}: {message}")


class Table(ConstraintBase):
    kind: Literal["table"] = "table"
    scope: Tuple[VarId, ...]
    tuples: Tuple[Tuple[Value, ...], ...]

    _allowed: FrozenSet[Tuple[Value, ...]] = PrivateAttr(default=frozenset())

    def model_post_init(self, __context):
        self._allowed = frozenset(self.tuples)

    @property
    def allowed(self) -> FrozenSet[Tuple[Value, ...]]:
        return self._allowed

    def check_structure(self):
        super().check_structure()
        for row in self.tuples:
            if len(row) != len(self.scope):
                self._fail(f"tuple {row} does not match scope length {len(self.scope)}")


class BinaryRelation(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    i: int
    j: int
    pairs: Tuple[Tuple[Value, Value], ...]

    _allowed: FrozenSet[Tuple[Value, Value]] = PrivateAttr(default=frozenset())

    def model_post_init(self, __context):
        self._allowed = frozenset(self.pairs)

    @property
    def allowed(self) -> FrozenSet[Tuple[Value, Value]]:
        return self._allowed


class BinaryNetwork(ConstraintBase):
    """One global constraint whose checker is the conjunction of binary relations"""
    kind: Literal["binaryNetwork"] = "binaryNetwork"
    scope: Tuple[VarId, ...]
    relations: Tuple[BinaryRelation, ...]

    def check_structure(self):
        super().check_structure()
        for relation in self.relations:
            if not (0 <= relation.i < len(self.scope) and 0 <= relation.j < len(self.scope)):
                self._fail(f"relation positions ({relation.i}, {relation.j}) outside scope")
            if relation.i == relation.j:
                self._fail(f"relation on a single position {relation.i}")


class ImpliesCnf(ConstraintBase):
    """guard -> cnf, with literal +k / -k naming the k-th variable after the guard"""
    kind: Literal["impliesCnf"] = "impliesCnf"
    scope: Tuple[VarId, ...]
    cnf: Tuple[Tuple[int, ...], ...]

    def check_structure(self):
        super().check_structure()
        for clause in self.cnf:
            for literal in clause:
                if literal == 0 or abs(literal) > len(self.scope) - 1:
                    self._fail(f"literal {literal} has no variable")


class AllDifferent(ConstraintBase):
    kind: Literal["allDifferent"] = "allDifferent"
    scope: Tuple[VarId, ...]


class NValue(ConstraintBase):
    """scope = [X1..Xn, N]"""
    kind: Literal["nvalue"] = "nvalue"
    scope: Tuple[VarId, ...]

    def check_structure(self):
        if len(self.scope) < 2:
            self._fail("needs at least one X and the counter N")


class AmongConst(ConstraintBase):
    """scope = [N, X1..Xn]; N counts the X taking a value of valueSet"""
    kind: Literal["among"] = "among"
    scope: Tuple[VarId, ...]
    value_set: Tuple[Value, ...] = Field(alias="valueSet")


class AmongVar(ConstraintBase):
    """scope = [N, X1..Xn, D1..Dm] with n = split; N counts the X equal to some D"""
    kind: Literal["amongVar"] = "amongVar"
    scope: Tuple[VarId, ...]
    split: int

    def check_structure(self):
        super().check_structure()
        if self.split < 0 or 1 + self.split > len(self.scope):
            self._fail(f"split {self.split} outside scope")


class Common(ConstraintBase):
    """scope = [N, M, X1..Xn, Y1..Ym] with n = split"""
    kind: Literal["common"] = "common"
    scope: Tuple[VarId, ...]
    split: int

    def check_structure(self):
        super().check_structure()
        if self.split < 0 or 2 + self.split > len(self.scope):
            self._fail(f"split {self.split} outside scope")


class Occurrence(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    value: Value
    low: int = Field(ge=0)
    high: int = Field(ge=0)


class Gcc(ConstraintBase):
    """Fixed-interval global cardinality; values absent from occ are unconstrained"""
    kind: Literal["gcc"] = "gcc"
    scope: Tuple[VarId, ...]
    occ: Tuple[Occurrence, ...]

    def intervals(self) -> Dict[Value, Tuple[int, int]]:
        return {entry.value: (entry.low, entry.high) for entry in self.occ}

    def check_structure(self):
        super().check_structure()
        seen = set()
        for entry in self.occ:
            if entry.low > entry.high:
                self._fail(f"empty interval for value {entry.value}")
            if entry.value in seen:
                self._fail(f"value {entry.value} listed twice")
            seen.add(entry.value)


class GccVar(ConstraintBase):
    """scope = [X1..Xn, O1..Om]; O_j counts the X equal to values[j]"""
    kind: Literal["gccVar"] = "gccVar"
    scope: Tuple[VarId, ...]
    values: Tuple[Value, ...]

    def check_structure(self):
        super().check_structure()
        if len(self.values) > len(self.scope):
            self._fail("more occurrence variables than scope positions")


class Disjoint(ConstraintBase):
    """scope = [X1..Xn, Y1..Ym] with n = split; no X shares a value with a Y"""
    kind: Literal["disjoint"] = "disjoint"
    scope: Tuple[VarId, ...]
    split: int

    def check_structure(self):
        super().check_structure()
        if not 0 <= self.split <= len(self.scope):
            self._fail(f"split {self.split} outside scope")


class ScalarProduct(ConstraintBase):
    """Every pair of distinct rows has scalar product equal to target"""
    kind: Literal["scalarProduct"] = "scalarProduct"
    rows: Tuple[Tuple[VarId, ...], ...]
    target: int = Field(ge=0)

    @property
    def positions(self) -> Tuple[VarId, ...]:
        return tuple(var for row in self.rows for var in row)

    def check_structure(self):
        super().check_structure()
        widths = {len(row) for row in self.rows}
        if len(widths) != 1:
            self._fail("rows have different lengths")


class AtMost1(ConstraintBase):
    """
    Set variables given by 0/1 characteristic vectors over a universe: every
    set has cardinality exactly `cardinality` and any two share at most one
    element.
    """
    kind: Literal["atMost1"] = "atMost1"
    universe: Tuple[str, ...]
    sets: Tuple[Tuple[VarId, ...], ...]
    cardinality: int = Field(ge=0)

    @property
    def positions(self) -> Tuple[VarId, ...]:
        return tuple(var for vector in self.sets for var in vector)

    def check_structure(self):
        super().check_structure()
        for vector in self.sets:
            if len(vector) != len(self.universe):
                self._fail("characteristic vector does not match universe size")


class Card(ConstraintBase):
    """counter = number of satisfied children"""
    kind: Literal["card"] = "card"
    counter: VarId
    children: Tuple["ConstraintSpec", ...]

    @property
    def positions(self) -> Tuple[VarId, ...]:
        return (self.counter,) + tuple(var for child in self.children for var in child.positions)

    def check_structure(self):
        for child in self.children:
            child.check_structure()


class Cardpath(ConstraintBase):
    """counter = number of windows of `sequence` on which the template holds"""
    kind: Literal["cardpath"] = "cardpath"
    counter: VarId
    sequence: Tuple[VarId, ...]
    template: "ConstraintSpec"

    @property
    def positions(self) -> Tuple[VarId, ...]:
        return (self.counter,) + self.sequence

    @property
    def arity(self) -> int:
        return len(self.template.positions)

    @property
    def window_count(self) -> int:
        return len(self.sequence) - self.arity + 1

    def check_structure(self):
        if not hasattr(self.template, "scope") or self.template.kind in ("card", "cardpath"):
            self._fail(f"template kind {self.template.kind} is not positional")
        self.template.check_structure()
        if len(set(self.template.scope)) != len(self.template.scope):
            self._fail("template placeholders must be distinct")
        if not 1 <= self.arity <= len(self.sequence):
            self._fail(f"template arity {self.arity} not in 1..{len(self.sequence)}")


class Predicate(ConstraintBase):
    """A named predicate from the closed catalog"""
    kind: Literal["predicate"] = "predicate"
    name: str
    scope: Tuple[VarId, ...]
    params: Dict[str, int] = Field(default_factory=dict)

    def check_structure(self):
        super().check_structure()
        if self.name not in predicates:
            self._fail(f"unknown predicate {self.name!r}")
        try:
            arity = predicate_arity(self.name, self.params)
        except KeyError as e:
            self._fail(f"missing parameter {e.args[0]!r} for {self.name}")
        if arity is not None and arity != len(self.scope):
            self._fail(f"{self.name} takes {arity} variables, scope has {len(self.scope)}")


ConstraintSpec = Annotated[
    Union[
        Table, BinaryNetwork, ImpliesCnf, AllDifferent, NValue, AmongConst, AmongVar, Common,
        Gcc, GccVar, Disjoint, ScalarProduct, AtMost1, Card, Cardpath, Predicate,
    ],
    Field(discriminator="kind"),
]

Card.model_rebuild()
Cardpath.model_rebuild()


def conjunction(counter: VarId, *children) -> Tuple[Card, Tuple[Value, ...]]:
    """
    C1 and C2 and ... as a Card meta-constraint.

    Returns the Card together with the domain its counter must be given.
    """
    return Card(counter=counter, children=children), (len(children),)


def disjunction(counter: VarId, *children) -> Tuple[Card, Tuple[Value, ...]]:
    """C1 or C2 or ... as a Card whose counter ranges over 1..len(children)"""
    return Card(counter=counter, children=children), tuple(range(1, len(children) + 1))


def negation(counter: VarId, child) -> Tuple[Card, Tuple[Value, ...]]:
    return Card(counter=counter, children=(child,)), (0,)
