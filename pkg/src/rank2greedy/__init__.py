"""Greedy elements of rank-2 cluster algebras via Dyck-path compatible pairs."""

from .laurent import LaurentPoly2, NotDivisibleError, EmptyPolynomialError
from .dyck import (
    DyckPath,
    SubsetPair,
    CoeffGrid,
    EdgeSet,
    max_dyck_path,
    subpath_edges,
    is_compatible,
    enumerate_compatible_pairs,
    iter_compatible_pairs,
    extremal_pair,
    extremal_fast_check,
    precedes,
    TooLargeError,
    PointNotOnPathError,
    PrecedenceViolatedError,
)
from .greedy import (
    GreedyElement,
    RegionP,
    greedy_element,
    pointed_support,
    region_lattice_points,
    support_equals_region,
    imaginary_triangle_check,
    NegativeIndexError,
    NotImaginaryRootError,
)
from .roots import (
    CartanParams,
    WeylWord,
    Sequences,
    quadratic_form,
    is_imaginary,
    reflect,
    weyl_word,
    sequences,
    delta,
    check_identities,
    NotWildError,
    IdentityViolatedError,
)
from .cluster import (
    ClusterVarTable,
    cluster_variable,
    sigma_apply,
    verify_sigma_on_greedy,
    NotLaurentError,
)
from .verify import (
    PSpec,
    PkIndices,
    PkReport,
    MuReport,
    build_p,
    pk_indices,
    check_pk_positive,
    check_eq1,
    check_eq2,
    mu_map,
    check_support_comparison,
    check_same_shape,
    RangeViolatedError,
)

__version__ = "0.1.0"
