"""Exact crystal, Edelman-Greene, Stanley and exchange-walk computations on reduced words."""

from ._core import (
    CoxeterSystem,
    ck_components,
    charpoly_matches,
    crystal_e,
    crystal_f,
    crystal_graph,
    eg_insert,
    hook_length_count,
    promotion_chain,
    simulate,
    spectrum,
    stanley,
    stationary_distribution,
    tableau_crystal_e,
    tableau_crystal_f,
    transition_dot,
    transition_matrix,
    tsetlin_chain,
    verify,
)

__all__ = [
    "CoxeterSystem",
    "ck_components",
    "charpoly_matches",
    "crystal_e",
    "crystal_f",
    "crystal_graph",
    "eg_insert",
    "hook_length_count",
    "promotion_chain",
    "simulate",
    "spectrum",
    "stanley",
    "stationary_distribution",
    "tableau_crystal_e",
    "tableau_crystal_f",
    "transition_dot",
    "transition_matrix",
    "tsetlin_chain",
    "verify",
]
