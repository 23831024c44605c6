from .context import RunContext
from .corpus import (
    all_graphs, random_cnf3, random_graph_pair, random_instance, random_max2sat, random_positive_cnf3,
    reducer_corpus,
)
from .reports import RunReport, SuiteReport, render
from .runner import Runner, exit_code_for
from .suites import SuiteOptions, register_suite, run_suite

__all__ = [
    "RunContext",
    "all_graphs", "random_cnf3", "random_graph_pair", "random_instance", "random_max2sat", "random_positive_cnf3",
    "reducer_corpus",
    "RunReport", "SuiteReport", "render",
    "Runner", "exit_code_for",
    "SuiteOptions", "register_suite", "run_suite",
]
