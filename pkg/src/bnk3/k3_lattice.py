"""Rank-2 markings <H, L> of a polarized K3 surface and the Noether-Lefschetz
divisors they cut out.

A marking of type g^r_d has Gram matrix [[2g-2, d], [d, 2r-2]]. Only the
abstract Gram data is handled; no primitivity check against an actual
Picard lattice is made.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bn_numerics import DomainError, check_type, rho


def discriminant(g: int, r: int, d: int) -> int:
    check_type(g, r, d)
    return 4 * (g - 1) * (r - 1) - d * d


def hodge_constraint(g: int, r: int, d: int) -> bool:
    """Hodge index condition: the marking has negative discriminant."""
    check_type(g, r, d)
    return d * d > 4 * (g - 1) * (r - 1)


@dataclass(frozen=True)
class MarkingLattice:
    g: int
    r: int
    d: int

    def __post_init__(self):
        check_type(self.g, self.r, self.d)

    @property
    def gram(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((2 * self.g - 2, self.d), (self.d, 2 * self.r - 2))

    @property
    def discriminant(self) -> int:
        (a, b), (c, e) = self.gram
        return a * e - b * c

    @property
    def H(self) -> LatticeClass:
        return LatticeClass(1, 0, self)

    @property
    def L(self) -> LatticeClass:
        return LatticeClass(0, 1, self)


@dataclass(frozen=True)
class LatticeClass:
    """The class a*H + b*L on a marking lattice."""

    a: int
    b: int
    lattice: MarkingLattice = field(repr=False)

    def __add__(self, other: LatticeClass) -> LatticeClass:
        _same_lattice(self, other)
        return LatticeClass(self.a + other.a, self.b + other.b, self.lattice)

    def __sub__(self, other: LatticeClass) -> LatticeClass:
        _same_lattice(self, other)
        return LatticeClass(self.a - other.a, self.b - other.b, self.lattice)

    def __neg__(self) -> LatticeClass:
        return LatticeClass(-self.a, -self.b, self.lattice)

    def __rmul__(self, k: int) -> LatticeClass:
        return LatticeClass(k * self.a, k * self.b, self.lattice)

    def dot(self, other: LatticeClass) -> int:
        return intersect(self, other, self.lattice)

    @property
    def square(self) -> int:
        return self.dot(self)


def _same_lattice(x: LatticeClass, y: LatticeClass) -> None:
    if x.lattice != y.lattice:
        raise DomainError(f"classes live on different lattices: {x.lattice} vs {y.lattice}")


def intersect(x: LatticeClass, y: LatticeClass, lat: MarkingLattice) -> int:
    if x.lattice != lat or y.lattice != lat:
        raise DomainError("classes do not belong to the given lattice")
    (hh, hl), (_, ll) = lat.gram
    return x.a * y.a * hh + (x.a * y.b + x.b * y.a) * hl + x.b * y.b * ll


def complement_class(g: int, r: int, d: int) -> tuple[int, int]:
    """Type (r'', d'') of H - L when L has type g^r_d.

    (H-L)^2 = 2g-2 - 2d + 2r - 2 gives r'' = g - d + r - 1, and H.(H-L) = 2g-2-d.
    """
    check_type(g, r, d)
    if d > 2 * g - 2:
        raise DomainError(f"complement needs d <= 2g-2 = {2 * g - 2}, got d={d}")
    return g - d + r - 1, 2 * g - 2 - d


@dataclass(frozen=True)
class NLDivisor:
    r: int
    d: int
    rho: int
    discriminant: int
    fixed_component: bool


def max_nl_rank(g: int) -> int:
    """Largest r for which some d <= g-1 can still give a negative discriminant.

    Beyond it, d^2 <= (g-1)^2 <= 4(g-1)(r-1) for every admissible d.
    """
    r = 1
    while (g - 1) ** 2 > 4 * (g - 1) * r:
        r += 1
    return r


def enumerate_bn_special_nl(g: int) -> list[NLDivisor]:
    """NL divisors K^r_{g,d} with 0 <= d <= g-1, rho < 0 and negative discriminant.

    Entries with d <= 1 are kept but flagged: on those loci H has a fixed
    component. Only r >= 1 is enumerated. Output is sorted by (r, d).
    """
    if g < 2:
        raise DomainError(f"genus must satisfy g >= 2, got g={g}")
    out = []
    for r in range(1, max_nl_rank(g) + 1):
        for d in range(0, g):
            p = rho(g, r, d)
            disc = discriminant(g, r, d)
            if p < 0 and disc < 0:
                out.append(NLDivisor(r, d, p, disc, d <= 1))
    return out


@dataclass(frozen=True)
class MarkingCertificate:
    h0_M_lower: int
    h0_HminusM_lower: int
    product: int
    is_special_marking: bool


def marking_certificate(g: int, r_p: int, d_p: int) -> MarkingCertificate:
    """Riemann-Roch lower bounds for h0(M) and h0(H-M) when M has type g^{r'}_{d'}.

    <H, M> is a BN-special marking as soon as the product reaches g+1.
    """
    check_type(g, r_p, d_p)
    if d_p > 2 * g - 2:
        raise DomainError(f"certificate needs d' <= 2g-2 = {2 * g - 2}, got d'={d_p}")
    h0_m = r_p + 1
    h0_n = g - d_p + r_p
    product = h0_m * h0_n
    special = product >= g + 1
    assert special == (rho(g, r_p, d_p) <= -1)
    return MarkingCertificate(h0_m, h0_n, product, special)
