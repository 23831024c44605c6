from . import formula_gadgets, graph_gadgets, meta_gadgets
from .formula_gadgets import (
    build_among_var_gadget, build_atmost1_gadget, build_common_gadget, build_disjoint_gadget,
    build_gcc_repeat_gadget, build_nvalue_gadget, build_scalarproduct_gadget, build_support_gadget,
)
from .graph_gadgets import build_isitgac_gadget, build_maxgac_gadget, covering_walk
from .meta_gadgets import build_card_gadget, build_cardpath_3col_gadget, build_cardpath_max2sat_gadget
from .oracles import (
    max2sat_oracle, one_in_three_oracle, oracle_solve, sat3_oracle, three_col_oracle, validate_certificate,
)
from .output import GadgetOutput, build_gadget, gadgets, gadgets_by_tag, register_gadget
from .sources import (
    Cnf3, Cnf3Positive, Graph, GraphPair, Max2SatInput, SourceProblem, parse_cnf, parse_graph, parse_max2sat,
    parse_source, write_cnf, write_graph,
)
from .verify import VerificationReport, verify_gadget

__all__ = [
    "formula_gadgets", "graph_gadgets", "meta_gadgets",
    "build_among_var_gadget", "build_atmost1_gadget", "build_common_gadget", "build_disjoint_gadget",
    "build_gcc_repeat_gadget", "build_nvalue_gadget", "build_scalarproduct_gadget", "build_support_gadget",
    "build_isitgac_gadget", "build_maxgac_gadget", "covering_walk",
    "build_card_gadget", "build_cardpath_3col_gadget", "build_cardpath_max2sat_gadget",
    "max2sat_oracle", "one_in_three_oracle", "oracle_solve", "sat3_oracle", "three_col_oracle",
    "validate_certificate",
    "GadgetOutput", "build_gadget", "gadgets", "gadgets_by_tag", "register_gadget",
    "Cnf3", "Cnf3Positive", "Graph", "GraphPair", "Max2SatInput", "SourceProblem", "parse_cnf", "parse_graph",
    "parse_max2sat", "parse_source", "write_cnf", "write_graph",
    "VerificationReport", "verify_gadget",
]
