"""Generic rigidity toolkit: rigidity-matroid ranks, rigidity and global-rigidity
verdicts, graph constructions and exact counting helpers."""

from ._core import (
    Graph,
    RankReport,
    RigidityError,
    Verdict,
    brute_force_expected_gpi,
    build_gpi,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    exact_expected_gpi_edges,
    generic_rank,
    grn_lower_bound,
    harary_graph,
    is_globally_rigid,
    is_independent,
    is_linked,
    is_rigid,
    is_t_redundantly_rigid,
    lovasz_yemini_cover_bound,
    lovasz_yemini_family,
    m_dk,
    maximal_cliques,
    monte_carlo_gpi,
    path_graph,
    random_ordering,
    run_cli,
    sharpness_example,
    stress_matrix_rank,
    verify_comblemma,
    vertex_connectivity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
