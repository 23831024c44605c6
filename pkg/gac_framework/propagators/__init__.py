from .alldifferent import alldifferent_gac
from .among import among_const_gac
from .cardpath import CountLattice, cardpath_dp_gac, count_lattice
from .decomposition import binary_network_ac, disjoint_as_network, disjoint_decomposition_ac
from .gcc import gcc_fixed_gac
from .outcome import PropagationOutcome, make_outcome
from .registry import propagate, propagators, propagators_by_tag, register_propagator

__all__ = [
    "alldifferent_gac", "among_const_gac", "CountLattice", "cardpath_dp_gac", "count_lattice",
    "binary_network_ac", "disjoint_as_network", "disjoint_decomposition_ac", "gcc_fixed_gac",
    "PropagationOutcome", "make_outcome", "propagate", "propagators", "propagators_by_tag", "register_propagator",
]
