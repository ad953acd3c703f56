"""Arboreal networks, Ptolemaic graphs and symbolic maps."""

from ._core import (
    ArborealError,
    Graph,
    LabelledNetwork,
    Network,
    SymbolicMap,
    are_isomorphic,
    arboreal_representation,
    check_arboreal_conditions,
    clique_modules,
    ecc_min,
    evaluate_map,
    explain,
    graph_of_map,
    h_tilde,
    has_alternating_cycle,
    is_arboreal,
    is_chordal,
    is_discriminating,
    is_ptolemaic,
    make_discriminating,
    maximal_cliques,
    naive_representation,
    ptolemaic_obstruction,
    ptolemy_inequality_holds,
    random_arboreal_network,
    random_labelled_network,
    random_network,
    represent_with_cover,
    shared_ancestry_graph,
    strong_clique_modules,
)

__all__ = [name for name in dir() if not name.startswith("_")]
