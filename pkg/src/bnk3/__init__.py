"""Exact Brill-Noether, lattice and lifting invariants of polarized K3 surfaces."""

from .bn_numerics import (
    CurveCliffordContext,
    DomainError,
    LinearSystemType,
    clifford_index,
    expected_square,
    generic_clifford,
    is_bn_special_type,
    is_non_computing,
    rho,
)
from .dm_lifting import (
    AuditReport,
    LiftCandidate,
    ReductionUnavailable,
    audit_genus,
    delta_upper,
    enumerate_lift_candidates,
    enumerate_non_computing,
    reduce_rank4,
)
from .k3_lattice import (
    LatticeClass,
    MarkingLattice,
    complement_class,
    discriminant,
    enumerate_bn_special_nl,
    hodge_constraint,
    marking_certificate,
)
from .lm_bundles import (
    BundleInvariants,
    MukaiVector,
    lm_invariants,
    min_c2_for_stable,
    mukai_self_pairing,
    quotient_invariants,
)

__version__ = "0.1.0"
