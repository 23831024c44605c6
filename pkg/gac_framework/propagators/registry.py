from typing import Dict, List

from ..core import Instance, UnsupportedInstanceError
from ..utils.logging import get_logger
from ..utils.registry import make_register
from .outcome import PropagationOutcome

logger = get_logger(__name__)

propagators: Dict[str, dict] = {}
propagators_by_tag: Dict[str, List[str]] = {}

_register = make_register(propagators, propagators_by_tag)


def register_propagator(name: str = None, kinds: List[str] = None, description: str = None, tags: List[str] = None):
    """
    Register a specialized filtering algorithm.

    Parameters:
        name (str, optional): Name used on the command line. Defaults to the function name.
        kinds (List[str]): Constraint kinds the algorithm accepts.
        description (str, optional): Defaults to the first line of the docstring.
        tags (List[str], optional): Tags such as "gac" or "decomposition".
    """
    return _register(name=name, description=description, tags=tags, kinds=list(kinds or []))


def require_kind(instance: Instance, name: str):
    kinds = propagators[name]["kinds"]
    if instance.constraint.kind not in kinds:
        raise UnsupportedInstanceError(f"{name} filters {', '.join(kinds)} constraints, not {instance.constraint.kind}")


def require_distinct(variables, what: str):
    if len(set(variables)) != len(variables):
        raise UnsupportedInstanceError(f"{what} repeats a variable")


def propagate(instance: Instance, name: str = None) -> PropagationOutcome:
    """
    Run the named propagator, or the first registered one for the instance's kind.
    """
    if name is None:
        candidates = [entry["name"] for entry in propagators.values() if instance.constraint.kind in entry["kinds"]]
        if not candidates:
            raise UnsupportedInstanceError(f"No propagator for {instance.constraint.kind} constraints")
        name = candidates[0]
    if name not in propagators:
        raise ValueError(f"Unknown propagator {name!r}; available: {', '.join(propagators)}")

    require_kind(instance, name)
    outcome = propagators[name]["function"](instance)
    logger.info("%s removed %d values%s", name, len(outcome.removed), " (wipe-out)" if outcome.wipeout else "")
    return outcome
