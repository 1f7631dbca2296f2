"""Numerical invariants of Lazarsfeld-Mukai bundles, their quotients, and the
Mukai pairing used to test whether a stable sheaf with given Chern data can
exist.

c1 is carried only through its self-intersection; that is all the formulas
below need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bn_numerics import DomainError, check_type, clifford_index, rho


@dataclass(frozen=True)
class BundleInvariants:
    rank: int
    c1_sq: int
    c2: int
    h0: int | None = None
    glm_type_ii: bool = False

    def __post_init__(self):
        if self.rank < 1:
            raise DomainError(f"rank must be >= 1, got {self.rank}")
        # a globally generated gLM sheaf with c1^2 = 0 has c2 = 0
        if self.glm_type_ii and self.c1_sq == 0 and self.c2 != 0:
            raise DomainError(
                f"type (II) gLM bundle with c1^2 = 0 must have c2 = 0, got c2={self.c2}"
            )

    @property
    def gamma(self) -> int:
        return self.c2 - 2 * (self.rank - 1)

    @property
    def mukai(self) -> MukaiVector:
        return MukaiVector(self.rank, self.c1_sq, self.c2)


@dataclass(frozen=True)
class LMInvariants(BundleInvariants):
    """BundleInvariants of E_{C,A}, plus chi(F (x) E) = 2(1 - rho)."""

    chi_F_tensor_E: int = 0


@dataclass(frozen=True)
class MukaiVector:
    rank: int
    c1_sq: int
    c2: int

    @property
    def self_pairing(self) -> int:
        return mukai_self_pairing(self)


def lm_invariants(g: int, r: int, d: int) -> LMInvariants:
    check_type(g, r, d)
    if r < 1:
        raise DomainError(f"LM bundles need r >= 1, got r={r}")
    if d > 2 * g - 2:
        raise DomainError(f"LM bundles need d <= 2g-2 = {2 * g - 2}, got d={d}")
    return LMInvariants(
        rank=r + 1,
        c1_sq=2 * g - 2,
        c2=d,
        h0=g - clifford_index(r, d) + 1,
        chi_F_tensor_E=2 * (1 - rho(g, r, d)),
    )


def mukai_self_pairing(v: MukaiVector) -> int:
    """<v, v> = (1 - rk) c1^2 + 2 rk c2 - 2 rk^2."""
    if v.rank < 1:
        raise DomainError(f"rank must be >= 1, got {v.rank}")
    return (1 - v.rank) * v.c1_sq + 2 * v.rank * v.c2 - 2 * v.rank**2


def stability_feasible(v: MukaiVector) -> bool:
    """Stable sheaves on a K3 have <v, v> >= -2."""
    return mukai_self_pairing(v) >= -2


def min_c2_bound(rank: int, c1_sq: int) -> Fraction:
    return Fraction((rank - 1) * c1_sq, 2 * rank) + rank - Fraction(1, rank)


def min_c2_for_stable(rank: int, c1_sq: int) -> int:
    if rank < 1 or c1_sq < 0:
        raise DomainError(f"need rank >= 1 and c1^2 >= 0, got ({rank}, {c1_sq})")
    return math.ceil(min_c2_bound(rank, c1_sq))


def quotient_invariants(g: int, r: int, d: int, r_p: int, d_p: int) -> BundleInvariants:
    """Invariants of E_{C,A}/N where A is a g^r_d and M = H - N has type g^{r'}_{d'}.

    Uses M^2 = 2r'-2 and H.M = d', so c2 = d + M^2 - H.M and the Clifford
    index drops by gamma(M).
    """
    check_type(g, r, d)
    check_type(g, r_p, d_p)
    if r_p < 1:
        raise DomainError(f"need r' >= 1, got r'={r_p}")
    if d_p > 2 * g - 2:
        raise DomainError(f"need d' <= 2g-2 = {2 * g - 2}, got d'={d_p}")
    c2 = d - clifford_index(r_p, d_p) - 2
    if c2 < 0:
        raise DomainError(
            f"quotient would have c2={c2} < 0; g^{r_p}_{d_p} cannot come from g^{r}_{d}"
        )
    return BundleInvariants(rank=r, c1_sq=2 * r_p - 2, c2=c2)


def glm_instability_threshold(r: int, k: int, ell: int = 0) -> Fraction:
    """r + r(k - ell)/(r - 1); a quotient of genus r' above it is not stable.

    ``ell`` is the length of E^vv/E when the quotient is not locally free.
    """
    if r < 2:
        raise DomainError(f"quotient rank must be >= 2, got r={r}")
    if k < 0 or not 0 <= ell <= k:
        raise DomainError(f"need k >= 0 and 0 <= ell <= k, got k={k}, ell={ell}")
    return r + Fraction(r * (k - ell), r - 1)


def glm_gamma_ceiling(g: int, r_p: int, gamma_A: int) -> Fraction:
    """Largest gamma(E) compatible with rho(g, r', d') >= 0."""
    if r_p < 1:
        raise DomainError(f"need r' >= 1, got r'={r_p}")
    return gamma_A + r_p - Fraction(r_p * g, r_p + 1)


def bn_special_from_glm(g: int, r_p: int, gamma_A: int, gamma_E: int) -> bool:
    return gamma_E > glm_gamma_ceiling(g, r_p, gamma_A)
