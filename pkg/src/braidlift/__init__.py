"""Exact torsion-lifting criteria for monomial complex reflection groups.

Decides which elements and subgroups of G(de, e, r) lift to finite-order
(torsion) subgroups of the quasi-abelianized braid group B/[P,P], and
reproduces the related classifications (torsion-free quotients, odd-order
lifting, free actions on the reflection arrangement, Frobenius and Cayley
constructions) with independent brute-force cross-checks.
"""

from .arrangement import (
    Coord,
    Hyperplane,
    ScalarRoot,
    Swap,
    act,
    acts_faithfully_on_arrangement,
    format_hyperplane,
    hyperplane_index,
    hyperplanes,
    in_parabolic,
    orbits,
    parse_hyperplane,
    scalar_on_normal,
    stabilizes,
)
from .classify import (
    EXCEPTIONAL_BIEBERBACH,
    FrobeniusSpec,
    PermutationGroup,
    as_symmetric_subgroup,
    bieberbach_bruteforce,
    cayley_embedding,
    exceptional_bieberbach_list,
    free_action_general,
    free_action_symmetric,
    frobenius_coset_action,
    has_free_cycle_type,
    has_free_monomial_type,
    has_odd_lift_property,
    is_bieberbach_series,
    permutation_group,
)
from .errors import (
    BraidLiftError,
    GuardExceeded,
    InvariantViolation,
    MismatchError,
    NoIntegralSolution,
    ParseError,
)
from .lattice import (
    Cocycle,
    LatticeVector,
    SemidirectElement,
    canonical_splitting,
    coboundary,
    conjugate_complement,
    conjugate_splitting,
    fixed_lattice_rank,
    is_cocycle,
    is_splitting,
    permute_vector,
    semidirect_compose,
    semidirect_identity,
    semidirect_inverse,
    semidirect_order,
    small_generating_set,
    trivialize_cocycle,
)
from .lifting import (
    LiftReport,
    LiftWitness,
    element_lifts_fast,
    element_lifts_oracle,
    obstruction_shortcuts,
    subgroup_lifts,
    subgroup_lifts_local,
)
from .monomial import (
    ENUMERATION_GUARD,
    CycleData,
    GroupDescriptor,
    MonomialElement,
    Subgroup,
    center,
    closure,
    diagonal,
    enumerate_elements,
    format_element,
    from_permutation,
    identity,
    is_central,
    pad,
    parse_element,
    standard_generators,
)

__version__ = "0.1.0"
