"""Python bindings for the codegree hypergraph toolkit."""

from ._codegree import (
    Hypergraph3,
    InternalError,
    ResourceError,
    balanced_tripartite_complete,
    blow_up,
    canonical_form,
    complete,
    density_sequence,
    ex2_exact,
    ex2_heuristic,
    explicit_c7_embedding,
    find_c5_minus,
    find_embedding,
    freeness_check,
    inductive_embedding,
    mubayi_rodl,
    tight_cycle,
    tight_cycle_minus,
    verify_embedding,
)

__all__ = [
    "Hypergraph3",
    "InternalError",
    "ResourceError",
    "balanced_tripartite_complete",
    "blow_up",
    "canonical_form",
    "complete",
    "density_sequence",
    "ex2_exact",
    "ex2_heuristic",
    "explicit_c7_embedding",
    "find_c5_minus",
    "find_embedding",
    "freeness_check",
    "inductive_embedding",
    "mubayi_rodl",
    "tight_cycle",
    "tight_cycle_minus",
    "verify_embedding",
]
