import json
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from .constraints import ConstraintSpec, VarId, Value
from .errors import InstanceError, InstanceParseError

DomainMap = Dict[VarId, Tuple[Value, ...]]


def normalize_domains(domains: Mapping[VarId, Iterable[Value]]) -> DomainMap:
    """Copy a domain mapping into canonical form: ascending tuples without duplicates"""
    return {var: tuple(sorted(set(values))) for var, values in domains.items()}


def is_wiped_out(domains: Mapping[VarId, Tuple[Value, ...]], scope: Iterable[VarId]) -> bool:
    return any(len(domains[var]) == 0 for var in scope)


def wipeout_normal_form(domains: Mapping[VarId, Tuple[Value, ...]], scope: Iterable[VarId]) -> DomainMap:
    """A map with some empty scope domain is read as every scope domain empty"""
    scope = list(scope)
    normal = dict(domains)
    if is_wiped_out(domains, scope):
        for var in scope:
            normal[var] = ()
    return normal


def is_subdomain(inner: Mapping[VarId, Tuple[Value, ...]], outer: Mapping[VarId, Tuple[Value, ...]]) -> bool:
    return all(var in outer and set(values) <= set(outer[var]) for var, values in inner.items())


def removed_values(before: Mapping[VarId, Tuple[Value, ...]],
                   after: Mapping[VarId, Tuple[Value, ...]]) -> List[Tuple[VarId, Value]]:
    return [(var, value) for var, values in before.items() for value in values
            if value not in set(after.get(var, ()))]


class Instance(BaseModel):
    """One constraint together with the domains of its variables"""
    model_config = ConfigDict(frozen=True)

    variables: Tuple[VarId, ...]
    domains: Dict[VarId, Tuple[Value, ...]]
    constraint: ConstraintSpec

    @field_validator("domains", mode="before")
    @classmethod
    def _canonical_domains(cls, value):
        if isinstance(value, Mapping):
            return normalize_domains(value)
        return value

    @model_validator(mode="after")
    def _check_invariants(self):
        if any(not var for var in self.variables):
            raise InstanceError("variable ids must be non-empty")
        if len(set(self.variables)) != len(self.variables):
            raise InstanceError("variable ids must be unique")
        if set(self.domains) != set(self.variables):
            extra = sorted(set(self.domains) - set(self.variables))
            missing = sorted(set(self.variables) - set(self.domains))
            raise InstanceError(f"domains do not cover the variables (missing {missing}, extra {extra})")
        undeclared = [var for var in self.constraint.variables() if var not in self.domains]
        if undeclared:
            raise InstanceError(f"constraint references undeclared variables: {', '.join(undeclared)}")
        self.constraint.check_structure()
        return self

    @property
    def scope(self) -> Tuple[VarId, ...]:
        """Distinct constraint variables in order of first occurrence"""
        return self.constraint.variables()

    def domain(self, var: VarId) -> Tuple[Value, ...]:
        return self.domains[var]

    def with_domains(self, domains: Mapping[VarId, Iterable[Value]]) -> "Instance":
        """Same constraint over new domains for some or all variables"""
        merged = dict(self.domains)
        merged.update(normalize_domains(domains))
        if set(merged) != set(self.variables):
            raise InstanceError("replacement domains name unknown variables")
        return self.model_copy(update={"domains": merged})

    def restrict(self, var: VarId, value: Value) -> "Instance":
        return self.with_domains({var: (value,)})


class VariableEntry(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    id: str = Field(min_length=1)
    domain: Tuple[int, ...]


class InstanceFile(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    variables: Tuple[VariableEntry, ...]
    constraint: ConstraintSpec


def _location(error: dict) -> str:
    return ".".join(str(part) for part in error["loc"]) or "<root>"


def instance_to_dict(instance: Instance) -> dict:
    return {
        "variables": [{"id": var, "domain": list(instance.domains[var])} for var in instance.variables],
        "constraint": instance.constraint.model_dump(mode="json", by_alias=True),
    }


def instance_from_dict(data: dict) -> Instance:
    try:
        parsed = InstanceFile.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        raise InstanceParseError(first["msg"], _location(first)) from e

    domains = {}
    for entry in parsed.variables:
        if entry.id in domains:
            raise InstanceError(f"variable {entry.id!r} declared twice")
        domains[entry.id] = entry.domain

    return Instance(
        variables=tuple(domains),
        domains=domains,
        constraint=parsed.constraint,
    )


def parse_instance(text: Union[bytes, str]) -> Instance:
    """
    Parse an instance file.

    Raises InstanceParseError with a line/column or field location when the
    text is not a well-formed instance file, and InstanceError when it is but
    violates an instance invariant.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise InstanceParseError(str(e), f"byte {e.start}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceParseError(e.msg, f"line {e.lineno}, column {e.colno}") from e
    if not isinstance(data, dict):
        raise InstanceParseError("top level must be an object", "<root>")
    return instance_from_dict(data)


def serialize_instance(instance: Instance) -> bytes:
    """Canonical UTF-8 JSON: sorted keys, ascending domains, two-space indent"""
    return (json.dumps(instance_to_dict(instance), sort_keys=True, indent=2) + "\n").encode("utf-8")
