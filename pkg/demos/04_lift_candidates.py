"""Donagi-Morrison lift candidates for a g^3_16 on a genus 18 curve.

Each candidate type g^{r'}_{d'} gives a marking <H, M>; all five are BN special.
"""
from bnk3.dm_lifting import box_lift_candidates, delta_upper, enumerate_lift_candidates

g, r, d, gamma_c = 18, 3, 16, 8
print("delta ranges over 0 ..", delta_upper(g, r, d - 2 * r))
for c in enumerate_lift_candidates(g, r, d, gamma_c):
    cert = c.certificate
    print(f"  g^{c.r_p}_{c.d_p}: rho={c.rho_p:4d}  h0(M)h0(H-M) >= {cert.product}  "
          f"special={cert.is_special_marking}")

print("brute-force box agrees:", box_lift_candidates(g, r, d, gamma_c))
