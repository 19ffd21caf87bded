"""Automorphism groups and derivations of zero-dimensional monomial
algebras K[S]/I over pointed affine semigroups, in exact arithmetic."""

from .semigroup import (
    AffineSemigroup,
    SemigroupError,
    build_semigroup,
    dual_rays,
    first_octant,
)
from .ideal import (
    MonomialIdeal,
    build_ideal,
    complement,
    fullify,
    is_cofinite,
    is_full,
)
from .derivations import (
    classify_lnd,
    demazure_roots,
    inner_outer_split,
    is_trivial,
    lnd_degrees,
    non_liftable_witness,
    roots_of_ideal,
)
from .quotient import (
    QuotientAlgebra,
    aut_generators,
    build_quotient,
    derivation_matrix,
    exp_matrix,
    exp_parametric,
    is_algebra_automorphism,
    toric_automorphisms,
    torus_matrix,
    verify_centralizer_torus,
    verify_conjugation,
)
from .oracle import (
    all_derivations,
    compare_with_classification,
    graded_components,
    homogeneous_lnd_dims,
)

__all__ = [
    "AffineSemigroup",
    "SemigroupError",
    "MonomialIdeal",
    "QuotientAlgebra",
    "build_semigroup",
    "dual_rays",
    "first_octant",
    "build_ideal",
    "complement",
    "fullify",
    "is_cofinite",
    "is_full",
    "classify_lnd",
    "demazure_roots",
    "inner_outer_split",
    "is_trivial",
    "lnd_degrees",
    "non_liftable_witness",
    "roots_of_ideal",
    "aut_generators",
    "build_quotient",
    "derivation_matrix",
    "exp_matrix",
    "exp_parametric",
    "is_algebra_automorphism",
    "toric_automorphisms",
    "torus_matrix",
    "verify_centralizer_torus",
    "verify_conjugation",
    "all_derivations",
    "compare_with_classification",
    "graded_components",
    "homogeneous_lnd_dims",
]

__version__ = "0.1.0"
