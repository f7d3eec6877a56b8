"""Exact tools for simply laced Kac-Moody root systems and root subdiagrams of E10."""

from .cartan import (
    GCM,
    DiagramType,
    DynkinDiagram,
    Kind,
    are_isomorphic,
    canonical_form,
    classify,
    connected_components,
    is_hyperbolic,
    validate_gcm,
)
from .catalog import CatalogEntry, enumerate_hyperbolic_simply_laced, get, identify
from .embed import (
    Embedding,
    check_root_subdiagram,
    compose,
    hyperbolic_extension,
    principle_a,
    principle_b,
    principle_b_prime,
    principle_c,
    principle_d,
    prove_main,
    rank2_embedding,
    t_family,
)
from .lattice import (
    RootLattice,
    RootVector,
    WeightVector,
    fundamental_weights,
    is_positive_real_root_descent,
    is_positive_real_root_norm,
    null_root,
    pairing,
    real_roots_up_to_height,
    reflect_by,
    simple_reflection,
)
from .orth import extend_direct_sum, find_orthogonal_real_roots, orthogonal_sublattice

__version__ = "0.1.0"
