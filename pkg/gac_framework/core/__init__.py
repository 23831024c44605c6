from .checkers import StepCounter, check, evaluate, evaluate_positional
from .constraints import (
    AllDifferent, AmongConst, AmongVar, AtMost1, BinaryNetwork, BinaryRelation, Card, Cardpath, Common,
    ConstraintSpec, Disjoint, Gcc, GccVar, ImpliesCnf, NValue, Occurrence, Predicate, ScalarProduct, Table,
    Value, VarId, conjunction, disjunction, negation,
)
from .errors import (
    ArityTooLargeError, BudgetExhaustedError, GacError, GadgetError, InstanceError, InstanceParseError,
    MissingVariableError, ScaleLimitError, SourceError, UnsupportedInstanceError,
)
from .instance import (
    DomainMap, Instance, instance_from_dict, instance_to_dict, is_subdomain, is_wiped_out, normalize_domains,
    parse_instance, removed_values, serialize_instance, wipeout_normal_form,
)
from .predicates import predicates, register_predicate

__all__ = [
    "AllDifferent", "AmongConst", "AmongVar", "AtMost1", "BinaryNetwork", "BinaryRelation", "Card", "Cardpath",
    "Common", "ConstraintSpec", "Disjoint", "Gcc", "GccVar", "ImpliesCnf", "NValue", "Occurrence", "Predicate",
    "ScalarProduct", "Table", "Value", "VarId", "conjunction", "disjunction", "negation",
    "StepCounter", "check", "evaluate", "evaluate_positional",
    "ArityTooLargeError", "BudgetExhaustedError", "GacError", "GadgetError", "InstanceError", "InstanceParseError",
    "MissingVariableError", "ScaleLimitError", "SourceError", "UnsupportedInstanceError",
    "DomainMap", "Instance", "instance_from_dict", "instance_to_dict", "is_subdomain", "is_wiped_out",
    "normalize_domains", "parse_instance", "removed_values", "serialize_instance", "wipeout_normal_form",
    "predicates", "register_predicate",
]
