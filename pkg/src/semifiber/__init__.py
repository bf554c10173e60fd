"""Numerical semigroups, their quotients ``S/d`` and the fibers ``M_d(Delta)``."""

from .construction import (
    DeltaDaSpec,
    apery_quotient_reduction,
    build_delta_d_a,
    predicted_apery,
    predicted_depth,
    predicted_invariants,
    realize_embedding_dimension,
    wilf_identity_margin,
)
from .core import (
    NATURALS,
    AperyTable,
    Invariants,
    Monoid,
    NumericalSemigroup,
    apery,
    contains,
    depth,
    from_generators,
    invariants,
    is_symmetric,
    pseudo_frobenius,
    type_of,
    wilf_margin,
)
from .errors import SemigroupError
from .presentation import (
    Presentation,
    factorizations,
    lifted_presentation,
    minimal_presentation,
    verify_presentation,
)
from .quotient_fiber import (
    FiberContext,
    FiberElement,
    cofinite_extension,
    enumerate_fiber,
    in_fiber,
    intersect,
    is_md_set,
    md_closure,
    quotient,
    relative_generators,
)
from .rank import (
    RankOneSpec,
    embedding_dim_via_rank,
    gluing_quotient_check,
    max_rank_witness,
    mu,
    rank_one_build,
    rank_one_invariants,
    rank_one_pf,
    relative_msg,
)

__version__ = "0.1.0"

__all__ = [
    "AperyTable",
    "DeltaDaSpec",
    "FiberContext",
    "FiberElement",
    "Invariants",
    "Monoid",
    "NATURALS",
    "NumericalSemigroup",
    "Presentation",
    "RankOneSpec",
    "SemigroupError",
    "apery",
    "apery_quotient_reduction",
    "build_delta_d_a",
    "cofinite_extension",
    "contains",
    "depth",
    "embedding_dim_via_rank",
    "enumerate_fiber",
    "factorizations",
    "from_generators",
    "gluing_quotient_check",
    "in_fiber",
    "intersect",
    "invariants",
    "is_md_set",
    "is_symmetric",
    "lifted_presentation",
    "max_rank_witness",
    "md_closure",
    "minimal_presentation",
    "mu",
    "predicted_apery",
    "predicted_depth",
    "predicted_invariants",
    "pseudo_frobenius",
    "quotient",
    "rank_one_build",
    "rank_one_invariants",
    "rank_one_pf",
    "realize_embedding_dimension",
    "relative_generators",
    "relative_msg",
    "type_of",
    "verify_presentation",
    "wilf_identity_margin",
    "wilf_margin",
]
