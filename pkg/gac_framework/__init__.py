"""
Generalized arc consistency questions over single global constraints: a
budgeted generic engine, the reductions between the questions, specialized
propagators and NP-hardness gadgets checked against exhaustive oracles.
"""
from .core import Instance, parse_instance, serialize_instance
from .engine import QUESTIONS, SearchBudget, ask
from .gadgets import build_gadget, verify_gadget
from .propagators import propagate

__all__ = [
    "Instance", "parse_instance", "serialize_instance",
    "QUESTIONS", "SearchBudget", "ask",
    "build_gadget", "verify_gadget",
    "propagate",
]
