"""Algebraic distances on graphs and hypergraphs (JOR relaxation)."""

from ._algdist import (
    Graph,
    Hypergraph,
    RelaxationConfig,
    bipartite_expand,
    brute_force_matching,
    compute_edge_distances,
    edge_distances,
    evaluate_cut,
    fallback_bisect,
    greedy_matching,
    hpart_experiment,
    hyperedge_distances,
    initial_vectors,
    iteration_matrix,
    jor_sweep,
    matching_experiment,
    matching_preprocess,
    normalized_distance,
    path_growing_matching,
    pencil_eigen,
    read_hgr,
    read_matrix_market,
    relax,
    relax_from,
    run_cli,
    stability_root,
)

__all__ = [name for name in dir() if not name.startswith("_")]
