import pytest
import sympy
from hypothesis import given, strategies as st

from bnk3.bn_numerics import DomainError, rho
from bnk3.k3_lattice import (
    LatticeClass,
    MarkingLattice,
    complement_class,
    discriminant,
    enumerate_bn_special_nl,
    hodge_constraint,
    intersect,
    marking_certificate,
)


def nl_oracle(g):
    box = []
    for r in range(1, 4 * g):
        for d in range(0, g):
            rho_value = g - (r + 1) * (g - d + r)
            disc = 4 * (g - 1) * (r - 1) - d * d
            if rho_value < 0 and disc < 0:
                box.append((r, d))
    return box


@pytest.mark.parametrize("g,r,d,expected", [(9, 1, 5, -25), (14, 2, 11, -69), (18, 4, 17, -85)])
def test_discriminant_examples(g, r, d, expected):
    assert discriminant(g, r, d) == expected


def test_discriminant_is_gram_determinant():
    for g in range(2, 61):
        for r in range(0, 13):
            for d in range(0, 2 * g - 1):
                lat = MarkingLattice(g, r, d)
                assert lat.discriminant == discriminant(g, r, d)
    for g, r, d in [(14, 2, 11), (18, 4, 17), (40, 7, 30)]:
        assert sympy.Matrix(MarkingLattice(g, r, d).gram).det() == discriminant(g, r, d)


def test_hodge_constraint_examples():
    assert hodge_constraint(14, 2, 11)
    assert not hodge_constraint(5, 2, 4)
    assert not hodge_constraint(8, 1, 0)


def test_hodge_equivalence_grid():
    for g in range(2, 61):
        for r in range(0, 13):
            for d in range(0, 2 * g - 1):
                assert hodge_constraint(g, r, d) == (discriminant(g, r, d) < 0)
                assert hodge_constraint(g, r, d) == (d * d > 4 * (g - 1) * (r - 1))


def test_intersect_examples():
    lat = MarkingLattice(18, 3, 16)
    H, L = lat.H, lat.L
    assert intersect(H, H, lat) == 34
    assert intersect(H - L, H - L, lat) == 6
    assert intersect(H, H - L, lat) == 18
    assert (H - L).square == 6


def test_intersect_rejects_foreign_class():
    a, b = MarkingLattice(18, 3, 16), MarkingLattice(18, 4, 17)
    with pytest.raises(DomainError):
        intersect(a.H, b.H, a)
    with pytest.raises(DomainError):
        a.H + b.L


@given(
    st.integers(2, 40), st.integers(0, 10), st.integers(0, 60),
    st.tuples(*[st.integers(-9, 9)] * 6),
)
def test_intersect_bilinear_symmetric(g, r, d, coeffs):
    lat = MarkingLattice(g, r, d)
    x = LatticeClass(coeffs[0], coeffs[1], lat)
    y = LatticeClass(coeffs[2], coeffs[3], lat)
    z = LatticeClass(coeffs[4], coeffs[5], lat)
    assert x.dot(y) == y.dot(x)
    assert (x + y).dot(z) == x.dot(z) + y.dot(z)
    assert (3 * x).dot(y) == 3 * x.dot(y)


def test_complement_examples():
    assert complement_class(11, 4, 10) == (4, 10)
    assert complement_class(18, 3, 16) == (4, 18)
    assert complement_class(*(14,) + complement_class(14, 2, 11)) == (2, 11)


def test_complement_matches_lattice():
    lat = MarkingLattice(18, 3, 16)
    comp = lat.H - lat.L
    r2, d2 = complement_class(18, 3, 16)
    assert comp.square == 2 * r2 - 2
    assert lat.H.dot(comp) == d2


def test_complement_involution():
    for g in range(2, 41):
        for r in range(0, 13):
            for d in range(0, 2 * g - 1):
                r2, d2 = complement_class(g, r, d)
                if r2 >= 0:
                    assert complement_class(g, r2, d2) == (r, d)


def test_complement_domain():
    with pytest.raises(DomainError):
        complement_class(5, 1, 9)


def test_nl_genus_five():
    # brute force gives (1,3) as well: rho(5,1,3) = -1 and disc = -9
    got = [(e.r, e.d, e.fixed_component) for e in enumerate_bn_special_nl(5)]
    assert got == [(1, 1, True), (1, 2, False), (1, 3, False)]


def test_nl_contains_expected():
    assert (2, 11) in [(e.r, e.d) for e in enumerate_bn_special_nl(14)]
    for g in range(2, 41):
        first = enumerate_bn_special_nl(g)[0]
        assert (first.r, first.d, first.fixed_component) == (1, 1, True)


def test_nl_matches_oracle():
    for g in range(2, 41):
        got = [(e.r, e.d) for e in enumerate_bn_special_nl(g)]
        assert got == nl_oracle(g), g
        assert got == sorted(got)


def test_nl_domain():
    with pytest.raises(DomainError):
        enumerate_bn_special_nl(1)


@pytest.mark.parametrize(
    "args,product,special",
    [((18, 4, 17), 25, True), ((14, 2, 11), 15, True), ((4, 1, 3), 4, False)],
)
def test_marking_certificate_examples(args, product, special):
    cert = marking_certificate(*args)
    assert cert.product == product
    assert cert.is_special_marking is special
    assert cert.h0_M_lower == args[1] + 1


def test_certificate_equivalence_grid():
    for g in range(2, 61):
        for r in range(0, 13):
            for d in range(0, 2 * g - 1):
                assert marking_certificate(g, r, d).is_special_marking == (rho(g, r, d) <= -1)


def test_certificate_domain():
    with pytest.raises(DomainError):
        marking_certificate(5, 2, 9)
