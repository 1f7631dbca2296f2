"""Brill-Noether arithmetic for linear series g^r_d on curves of genus g.

Everything here is integer (or exact rational) arithmetic. ``r = 0`` and
``d = 0`` are accepted so that brute-force grids stay total; the predicates
decide whether a type is usable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class DomainError(ValueError):
    """An argument lies outside the domain of the requested invariant."""


def check_type(g: int, r: int, d: int) -> None:
    if g < 2:
        raise DomainError(f"genus must satisfy g >= 2, got g={g}")
    if r < 0:
        raise DomainError(f"rank must satisfy r >= 0, got r={r}")
    if d < 0:
        raise DomainError(f"degree must satisfy d >= 0, got d={d}")


def rho(g: int, r: int, d: int) -> int:
    """Brill-Noether number g - (r+1)(g-d+r)."""
    check_type(g, r, d)
    return g - (r + 1) * (g - d + r)


def clifford_index(r: int, d: int) -> int:
    """Clifford index d - 2r of a g^r_d (may be negative)."""
    if r < 0 or d < 0:
        raise DomainError(f"need r >= 0 and d >= 0, got r={r}, d={d}")
    return d - 2 * r


def generic_clifford(g: int) -> int:
    """Clifford index floor((g-1)/2) of a general curve of genus g."""
    if g < 2:
        raise DomainError(f"genus must satisfy g >= 2, got g={g}")
    return (g - 1) // 2


def is_bn_special_type(g: int, r: int, d: int) -> bool:
    return rho(g, r, d) < 0


def is_non_computing(g: int, r: int, d: int) -> bool:
    """A BN-special g^r_d whose Clifford index exceeds the generic one."""
    return rho(g, r, d) < 0 and clifford_index(r, d) > generic_clifford(g)


def expected_square(r: int, h1: int) -> int:
    """Self-intersection 2r - 2 - 2*h1 of a lift L, where h1 = h^1(S, L(-C))."""
    if r < 0 or h1 < 0:
        raise DomainError(f"need r >= 0 and h1 >= 0, got r={r}, h1={h1}")
    return 2 * r - 2 - 2 * h1


def rho_threshold(g: int, r: int) -> Fraction:
    """Largest real degree with rho <= -1, namely r + g - (g+1)/(r+1)."""
    check_type(g, r, 0)
    return r + g - Fraction(g + 1, r + 1)


def rank_shift(g: int, r: int, d: int, delta: int) -> int:
    """rho(g, r+delta, d) - rho(g, r, d) in closed form."""
    return delta * (d - g - 2 * r - delta - 1)


@dataclass(frozen=True)
class LinearSystemType:
    g: int
    r: int
    d: int

    def __post_init__(self):
        check_type(self.g, self.r, self.d)

    @property
    def rho(self) -> int:
        return rho(self.g, self.r, self.d)

    @property
    def gamma(self) -> int:
        return clifford_index(self.r, self.d)

    def __str__(self) -> str:
        return f"g^{self.r}_{self.d}"


@dataclass(frozen=True)
class CurveCliffordContext:
    g: int
    gamma_C: int

    def __post_init__(self):
        top = generic_clifford(self.g)
        if not 0 <= self.gamma_C <= top:
            raise DomainError(
                f"Clifford index of a genus {self.g} curve lies in [0, {top}], "
                f"got {self.gamma_C}"
            )
