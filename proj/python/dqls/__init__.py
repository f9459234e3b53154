"""Dissipative quasi-local stabilizability toolkit."""

from ._dqls import (
    DqlsError,
    PureState,
    analyze_tripartite,
    build_stabilizer,
    decide,
    dicke_state,
    dqls_subspace,
    ghz_epsilon,
    ghz_state,
    graph_state,
    parent_hamiltonian,
    predict,
    random_state,
    reconstruct,
    run_table,
    schmidt_span,
    w_state,
)

__all__ = [
    "DqlsError",
    "PureState",
    "analyze_tripartite",
    "build_stabilizer",
    "decide",
    "dicke_state",
    "dqls_subspace",
    "ghz_epsilon",
    "ghz_state",
    "graph_state",
    "parent_hamiltonian",
    "predict",
    "random_state",
    "reconstruct",
    "run_table",
    "schmidt_span",
    "w_state",
]
