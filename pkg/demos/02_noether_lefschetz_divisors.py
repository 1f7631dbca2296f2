"""Which Noether-Lefschetz divisors K^r_{g,d} consist of BN-special K3 surfaces?

A marking <H, L> of type g^r_d contributes when rho(g, r, d) < 0 and the Gram
matrix [[2g-2, d], [d, 2r-2]] has negative discriminant.
"""
from bnk3.k3_lattice import MarkingLattice, complement_class, enumerate_bn_special_nl

g = 10
print(f"BN-special NL divisors in genus {g} (r, d, rho, disc):")
for e in enumerate_bn_special_nl(g):
    mark = "  <- H has a fixed component" if e.fixed_component else ""
    print(f"  ({e.r}, {e.d})  rho={e.rho:4d}  disc={e.discriminant:5d}{mark}")

# Swapping L for H - L keeps the lattice but changes the type.
lat = MarkingLattice(18, 3, 16)
comp = lat.H - lat.L
print("\n(H-L)^2 =", comp.square, " H.(H-L) =", lat.H.dot(comp))
print("complement type of g^3_16 in genus 18:", complement_class(18, 3, 16))
