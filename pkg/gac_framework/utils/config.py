import os
from dataclasses import dataclass
from functools import lru_cache

from dotenv import load_dotenv


@dataclass(frozen=True)
class Settings:
    budget: int = 10_000_000
    window_limit: int = 1_000_000
    oracle_max_vars: int = 20
    corpus_size: int = 500
    corpus_max_arity: int = 4
    corpus_max_domain: int = 4
    log_level: str = "WARNING"


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Load settings from the environment (and a .env file if present)"""
    load_dotenv()
    return Settings(
        budget=_env_int("GAC_BUDGET", Settings.budget),
        window_limit=_env_int("GAC_WINDOW_LIMIT", Settings.window_limit),
        oracle_max_vars=_env_int("GAC_ORACLE_MAX_VARS", Settings.oracle_max_vars),
        corpus_size=_env_int("GAC_CORPUS_SIZE", Settings.corpus_size),
        corpus_max_arity=_env_int("GAC_CORPUS_MAX_ARITY", Settings.corpus_max_arity),
        corpus_max_domain=_env_int("GAC_CORPUS_MAX_DOMAIN", Settings.corpus_max_domain),
        log_level=os.getenv("GAC_LOG_LEVEL", Settings.log_level),
    )
