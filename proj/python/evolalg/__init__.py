"""Evolution algebras of finite simple graphs.

Exact construction, automorphism and isomorphism computation, graph
recovery, and Frucht-type realization of finite groups, backed by the
C++ core in :mod:`evolalg._core`.
"""

from evolalg._core import (
    CapError,
    EvolutionAlgebra,
    FiniteGroup,
    NotInImageError,
    NotRegularError,
    ParseError,
    RealizationError,
    SimpleGraph,
    ValidationError,
    algebra_automorphisms,
    algebra_isomorphism,
    build_algebra,
    graph_automorphisms,
    graph_isomorphism,
    group_isomorphic,
    is_automorphism,
    minimal_generators,
    realize_algebra,
    realize_graph,
    rebase,
    recover_graph,
    verify_realization,
)

__all__ = [
    "CapError",
    "EvolutionAlgebra",
    "FiniteGroup",
    "NotInImageError",
    "NotRegularError",
    "ParseError",
    "RealizationError",
    "SimpleGraph",
    "ValidationError",
    "algebra_automorphisms",
    "algebra_isomorphism",
    "build_algebra",
    "graph_automorphisms",
    "graph_isomorphism",
    "group_isomorphic",
    "is_automorphism",
    "minimal_generators",
    "realize_algebra",
    "realize_graph",
    "rebase",
    "recover_graph",
    "verify_realization",
]
