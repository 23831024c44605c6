from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from ..core import GadgetError, Instance, SourceError, instance_to_dict
from ..engine import QuestionResult, SearchBudget, ask
from ..utils.registry import make_register

gadgets: Dict[str, dict] = {}
gadgets_by_tag: Dict[str, List[str]] = {}

_register = make_register(gadgets, gadgets_by_tag)


def register_gadget(name: str = None, source: str = None, description: str = None, tags: List[str] = None):
    """
    Register a gadget builder.

    Parameters:
        name (str, optional): Family name. Defaults to the function name.
        source (str): Source kind the builder consumes (3sat, 1in3, 3col, 3col-pair, max2sat).
        description (str, optional): Defaults to the first line of the docstring.
        tags (List[str], optional): Tags such as the constraint kind built.
    """
    return _register(name=name, description=description, tags=tags, source=source)


@dataclass
class GadgetOutput:
    """
    A built instance, the question that answers the source problem, and how
    to read a witness back as a source certificate.
    """
    family: str
    instance: Instance
    question: str
    meaning: str
    args: Dict[str, Any] = field(default_factory=dict)
    decode: Optional[Callable[[dict], Any]] = None
    witness_search: Optional[Callable[[Optional[SearchBudget]], Optional[dict]]] = None
    complete: bool = True

    def ask(self, budget: Optional[SearchBudget] = None, engine: str = "generic") -> QuestionResult:
        return ask(self.instance, self.question, budget, engine=engine, **self.args)

    def witness(self, result: QuestionResult, budget: Optional[SearchBudget] = None) -> Optional[dict]:
        """The result's own witness, or one found by the gadget's witness search for witness-less questions"""
        if result.witness is not None:
            return result.witness
        if self.witness_search is not None:
            return self.witness_search(budget)
        return None

    def metadata(self) -> dict:
        args = dict(self.args)
        if "candidate" in args:
            args["candidate"] = {var: list(values) for var, values in args["candidate"].items()}
        return {
            "family": self.family,
            "question": self.question,
            "args": args,
            "sourceAnswerMeaning": self.meaning,
        }

    def to_dict(self) -> dict:
        return instance_to_dict(self.instance)


def build_gadget(family: str, source, **params) -> GadgetOutput:
    if family not in gadgets:
        raise GadgetError(f"Unknown gadget family {family!r}; available: {', '.join(gadgets)}")
    entry = gadgets[family]
    if getattr(source, "kind", None) != entry["source"]:
        raise SourceError(f"{family} is built from a {entry['source']} source, got {getattr(source, 'kind', source)}")
    return entry["function"](source, **params)
