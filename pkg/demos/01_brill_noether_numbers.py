"""Brill-Noether numbers and Clifford indices.

Run with ``python demos/01_brill_noether_numbers.py``.
"""
from bnk3.bn_numerics import clifford_index, generic_clifford, is_non_computing, rho

# A g^2_11 on a genus 14 curve: one dimension short of existing on a general curve.
print("rho(14, 2, 11) =", rho(14, 2, 11))

# Its Clifford index 7 exceeds the generic value 6, so it cannot compute gamma(C).
print("gamma(g^2_11) =", clifford_index(2, 11), " generic gamma(C) =", generic_clifford(14))
print("non-computing:", is_non_computing(14, 2, 11))

# Non-computing series first appear in genus 14.
for g in range(10, 17):
    hits = [(r, d) for r in range(1, g) for d in range(g) if is_non_computing(g, r, d)]
    print(f"g={g:2d}", hits)
