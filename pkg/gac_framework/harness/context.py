from typing import Any, Dict, Optional

from ..engine import SearchBudget
from ..utils.config import Settings, get_settings


class RunContext:
    """
    Per-invocation state shared by every command: budget, seed, output
    format and the loaded settings.
    """

    def __init__(self,
                 settings: Settings = None,
                 budget: Optional[int] = None,
                 seed: int = 0,
                 output_format: str = "json",
                 verbose: bool = False,
                 metadata: Dict = None):
        settings = settings or get_settings()
        self._context = {
            "settings": settings,
            "budget": SearchBudget(budget or settings.budget),
            "seed": seed,
            "format": output_format,
            "verbose": verbose,
            "metadata": metadata or {},
        }

    def get(self, key: str, default=None):
        return self._context.get(key, default)

    def set(self, key: str, value: Any):
        self._context[key] = value

    def get_settings(self) -> Settings:
        return self._context["settings"]

    def get_budget(self) -> SearchBudget:
        return self._context["budget"]

    def get_seed(self) -> int:
        return self._context["seed"]

    def get_format(self) -> str:
        return self._context["format"]
