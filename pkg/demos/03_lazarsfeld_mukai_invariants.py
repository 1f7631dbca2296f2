"""Numerical data of Lazarsfeld-Mukai bundles and their rank-r quotients."""
from bnk3.lm_bundles import (
    MukaiVector,
    lm_invariants,
    min_c2_for_stable,
    mukai_self_pairing,
    quotient_invariants,
)

e = lm_invariants(18, 3, 16)
print("E_{C,A} for a g^3_16 in genus 18:", e)

# Quotients E_{C,A}/N whose determinant M has type g^4_17 or g^3_16.
for r_p, d_p in [(3, 16), (4, 17)]:
    q = quotient_invariants(18, 3, 16, r_p, d_p)
    print(f"  M of type g^{r_p}_{d_p}: rank={q.rank} c1^2={q.c1_sq} c2={q.c2} "
          f"gamma={q.gamma} <v,v>={mukai_self_pairing(q.mukai)}")

# Smallest c2 a stable rank-3 sheaf can have for a given c1^2.
for c1_sq in range(0, 12, 2):
    print(f"  rank 3, c1^2={c1_sq:2d}: c2 >= {min_c2_for_stable(3, c1_sq)}")

print("stable sheaves need <v,v> >= -2:", mukai_self_pairing(MukaiVector(3, 4, 3)))
