"""Donagi-Morrison lift candidates and the genus 14-19 case audit.

A lift candidate for a g^r_d A is a type g^{r'}_{d'} for M = det(E_{C,A}/N),
with r' = r + delta. Candidates are cut out by the inequalities that a stable
quotient forces; each one carries a ledger naming the constraints it was
checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .bn_numerics import (
    DomainError,
    LinearSystemType,
    check_type,
    clifford_index,
    generic_clifford,
    rank_shift,
    rho,
)
from .k3_lattice import MarkingCertificate, discriminant, marking_certificate
from .lm_bundles import (
    BundleInvariants,
    min_c2_for_stable,
    mukai_self_pairing,
    quotient_invariants,
)


class ReductionUnavailable(DomainError):
    """The rank-4 series cannot be traded for a BN-special rank-3 one."""


def _rho_raw(g: int, r: int, d: int) -> int:
    return g - (r + 1) * (g - d + r)


def potential_lift(g: int, r: int, d: int, r_p: int, d_p: int) -> bool:
    check_type(g, r, d)
    check_type(g, r_p, d_p)
    return clifford_index(r_p, d_p) <= clifford_index(r, d) and d_p >= d


def delta_bound(g: int, r: int, gamma_A: int) -> Fraction:
    if r < 2:
        raise DomainError(f"delta bound needs r >= 2, got r={r}")
    return Fraction(r, r - 1) * (gamma_A + Fraction(3, 2) - Fraction(g, 2))


def delta_upper(g: int, r: int, gamma_A: int) -> int:
    """floor of (r/(r-1)) (gamma(A) + 3/2 - g/2); may be negative."""
    return math.floor(delta_bound(g, r, gamma_A))


@dataclass(frozen=True)
class Constraint:
    id: str
    satisfied: bool
    form: str
    required: bool = True


@dataclass(frozen=True)
class LiftCandidate:
    g: int
    r: int
    d: int
    r_p: int
    d_p: int
    quotient: BundleInvariants
    ledger: tuple[Constraint, ...] = field(repr=False)

    @property
    def delta(self) -> int:
        return self.r_p - self.r

    @property
    def gamma_M(self) -> int:
        return self.d_p - 2 * self.r_p

    @property
    def rho_p(self) -> int:
        return rho(self.g, self.r_p, self.d_p)

    @property
    def discriminant(self) -> int:
        return discriminant(self.g, self.r_p, self.d_p)

    @property
    def certificate(self) -> MarkingCertificate:
        return marking_certificate(self.g, self.r_p, self.d_p)

    @property
    def mukai_pairing(self) -> int:
        return mukai_self_pairing(self.quotient.mukai)

    @property
    def flags(self) -> list[str]:
        """Ids of informational constraints the candidate fails."""
        return [c.id for c in self.ledger if not c.satisfied]


def _check_lift_input(g: int, r: int, d: int, gamma_C: int) -> None:
    check_type(g, r, d)
    if r < 2:
        raise DomainError(f"lift enumeration needs r >= 2, got r={r}")
    if rho(g, r, d) >= 0:
        raise DomainError(f"g^{r}_{d} is not BN special in genus {g}: rho={rho(g, r, d)}")
    top = generic_clifford(g)
    if not 0 <= gamma_C <= top:
        raise DomainError(f"gamma_C must lie in [0, {top}], got {gamma_C}")


def _ledger(g, r, d, r_p, d_p, quotient) -> tuple[Constraint, ...]:
    delta = r_p - r
    gamma_A = d - 2 * r
    gamma_M = d_p - 2 * r_p
    q = delta // r
    return (
        Constraint("r_prime_ge_r", r_p >= r, "r' >= r"),
        Constraint("gamma_M_le_gamma_A", gamma_M <= gamma_A, "gamma(M) <= gamma(A)"),
        Constraint(
            "eq1_gamma_M",
            gamma_M <= gamma_A - delta + q,
            "gamma(M) <= gamma(A) - delta + floor(delta/r)",
        ),
        Constraint("eq2_d_prime", d_p <= d + delta + q, "d' <= d + delta + floor(delta/r)"),
        Constraint(
            "rho_monotone", rho(g, r_p, d_p) <= rho(g, r, d), "rho(g,r',d') <= rho(g,r,d)"
        ),
        Constraint(
            "mukai_feasible",
            mukai_self_pairing(quotient.mukai) >= -2,
            "<v(E),v(E)> >= -2",
            required=False,
        ),
        Constraint(
            "min_c2",
            quotient.c2 >= min_c2_for_stable(quotient.rank, max(quotient.c1_sq, 0)),
            "c2(E) >= (rk-1)c1^2/(2rk) + rk - 1/rk",
            required=False,
        ),
    )


def make_candidate(g, r, d, r_p, d_p) -> LiftCandidate:
    quotient = quotient_invariants(g, r, d, r_p, d_p)
    ledger = _ledger(g, r, d, r_p, d_p, quotient)
    for c in ledger:
        if c.required and not c.satisfied:
            raise AssertionError(f"candidate g^{r_p}_{d_p} violates {c.form}")
    return LiftCandidate(g, r, d, r_p, d_p, quotient, ledger)


def enumerate_lift_candidates(g: int, r: int, d: int, gamma_C: int) -> list[LiftCandidate]:
    """All types (r', d') a DM lift of a BN-special g^r_d can have via a stable quotient.

    The restriction of M must still contribute to the Clifford index of C, so
    gamma(M) >= gamma_C (equality allowed).
    """
    _check_lift_input(g, r, d, gamma_C)
    gamma_A = d - 2 * r
    out = []
    for delta in range(0, max(0, delta_upper(g, r, gamma_A)) + 1):
        r_p = r + delta
        q = delta // r
        d_max = min(d + delta + q, gamma_A - delta + q + 2 * r_p, 2 * g - 2)
        d_min = max(d, gamma_C + 2 * r_p)
        for d_p in range(d_min, d_max + 1):
            out.append(make_candidate(g, r, d, r_p, d_p))
    return out


def box_lift_candidates(
    g: int, r: int, d: int, gamma_C: int, r_span: int = 20, d_span: int = 40
) -> list[tuple[int, int]]:
    """Brute-force filter of the box r <= r' <= r+r_span, d <= d' <= d+d_span.

    Applies the raw inequalities only; kept independent of the enumerator.
    """
    _check_lift_input(g, r, d, gamma_C)
    gamma_A = d - 2 * r
    hits = []
    for r_p in range(r, r + r_span + 1):
        for d_p in range(d, d + d_span + 1):
            delta = r_p - r
            gamma_M = d_p - 2 * r_p
            if (
                gamma_M <= gamma_A - delta + delta // r
                and d_p <= d + delta + delta // r
                and gamma_M >= gamma_C
            ):
                hits.append((r_p, d_p))
    return hits


def enumerate_non_computing(g: int) -> list[tuple[int, int]]:
    """BN-special g^r_d with d <= g-1 whose Clifford index exceeds floor((g-1)/2)."""
    top = generic_clifford(g)
    out = []
    for r in range(1, g):
        for d in range(r, g):
            if rho(g, r, d) < 0 and d - 2 * r > top:
                out.append((r, d))
    return out


def reduce_rank4(g: int, d: int) -> tuple[int, int]:
    """Drop a g^4_d to a g^3_{d-1} by subtracting a non-basepoint.

    Only useful when the g^3_{d-1} is itself BN special.
    """
    if rho(g, 4, d) >= 0:
        raise DomainError(f"g^4_{d} is not BN special in genus {g}")
    if d < 1 or rho(g, 3, d - 1) >= 0:
        raise ReductionUnavailable(
            f"g^3_{d - 1} has rho={_rho_raw(g, 3, d - 1)} >= 0 in genus {g}; "
            "the rank-4 locus is not contained in a BN-special rank-3 locus"
        )
    return 3, d - 1


def is_expected_maximal(g: int, r: int, d: int) -> bool:
    if r < 1:
        raise DomainError(f"need r >= 1, got r={r}")
    return (
        _rho_raw(g, r, d) < 0
        and _rho_raw(g, r, d + 1) >= 0
        and _rho_raw(g, r - 1, d - 1) >= 0
    )


@dataclass(frozen=True)
class LargeSlope:
    applies: bool
    rho_value: int


def large_slope_special(g: int, r: int, d: int) -> LargeSlope:
    """A type with d <= r always has rho = -rg - (r+1)(r-d) < 0."""
    if r < 1:
        raise DomainError(f"need r >= 1, got r={r}")
    value = -r * g - (r + 1) * (r - d)
    assert value == _rho_raw(g, r, d)
    return LargeSlope(d <= r, value)


def proof_strategy_bound(g: int, r: int) -> Fraction:
    """Upper bound on c2(E) = d below which a line subbundle N is forced."""
    if r < 2:
        raise DomainError(f"need r >= 2, got r={r}")
    return (
        Fraction(g * (r - 1), r)
        + Fraction(2 * g - 2, r * (r + 1))
        + r
        - Fraction(1, r)
    )


EXCLUDED_G3_GENERA = frozenset({2, 3, 4, 8})


def g3_lifting_bound(g: int, gamma: int, m: int, mu: int) -> Fraction:
    """Degree bound under which a g^3_d on a curve of Clifford index gamma lifts."""
    if g in EXCLUDED_G3_GENERA:
        raise DomainError(f"g^3_d lifting bound does not hold for g in {{2,3,4,8}}, got {g}")
    if min(gamma, m, mu) < 0:
        raise DomainError(f"need gamma, m, mu >= 0, got ({gamma}, {m}, {mu})")
    five_q = Fraction(5, 4) * gamma
    return min(
        five_q + Fraction(mu + m + 9, 2),
        five_q + Fraction(m, 2) + 5,
        Fraction(3, 2) * gamma + 5,
        Fraction(gamma + g - 1, 2) + 4,
    )


@dataclass
class AuditCase:
    source: LinearSystemType
    route: str
    reduced_to: LinearSystemType | None
    candidates: list[LiftCandidate]
    gamma_C: int
    reduction_unavailable: bool = False

    @property
    def verdict(self) -> bool:
        if self.route == "large_slope":
            return True
        # no lifting result covers a rank-4 series that cannot be reduced
        if self.reduction_unavailable:
            return False
        return all(c.rho_p < 0 for c in self.candidates)

    @property
    def gamma_E_bound_ok(self) -> bool:
        """gamma(E) <= gamma(A) - gamma(C) for every candidate quotient."""
        a = self.reduced_to or self.source
        return all(c.quotient.gamma <= a.gamma - self.gamma_C for c in self.candidates)

    @property
    def mukai_ok(self) -> bool:
        return all(c.mukai_pairing >= -2 for c in self.candidates)


@dataclass
class AuditReport:
    g: int
    cases: list[AuditCase]

    @property
    def in_theorem_range(self) -> bool:
        return 14 <= self.g <= 19

    @property
    def verdict(self) -> bool:
        return all(case.verdict for case in self.cases)


def audit_genus(g: int) -> AuditReport:
    """Replay the case analysis for non-computing series in genus g.

    Rank-4 series are first reduced to rank 3. Each remaining case is
    settled when every lift candidate gives rho(g, r', d') < 0.
    """
    gamma_C = generic_clifford(g)
    cases = []
    for r, d in enumerate_non_computing(g):
        source = LinearSystemType(g, r, d)
        if large_slope_special(g, r, d).applies:
            cases.append(AuditCase(source, "large_slope", None, [], gamma_C))
            continue
        reduced = None
        route = "direct"
        r_a, d_a = r, d
        unavailable = False
        if r == 4:
            try:
                r_a, d_a = reduce_rank4(g, d)
            except ReductionUnavailable:
                # expected maximal rank-4 locus (g >= 20): enumerate on the g^4_d itself
                unavailable = True
            else:
                reduced = LinearSystemType(g, r_a, d_a)
                route = "rank4_reduced"
        candidates = enumerate_lift_candidates(g, r_a, d_a, gamma_C)
        for c in candidates:
            if c.rho_p < 0:
                assert c.certificate.is_special_marking
            assert c.rho_p == rho(g, r_a, c.d_p) + rank_shift(g, r_a, c.d_p, c.delta)
        cases.append(AuditCase(source, route, reduced, candidates, gamma_C, unavailable))
    return AuditReport(g, cases)
