"""Replay the non-computing case analysis for genus 14 through 20."""
from bnk3.dm_lifting import audit_genus

for g in range(14, 21):
    report = audit_genus(g)
    note = "" if report.in_theorem_range else "  (outside 14..19)"
    print(f"genus {g}: verdict={report.verdict}{note}")
    for case in report.cases:
        via = f" -> {case.reduced_to}" if case.reduced_to else ""
        extra = "  [rank-4 reduction unavailable]" if case.reduction_unavailable else ""
        types = ", ".join(f"g^{c.r_p}_{c.d_p}" for c in case.candidates)
        print(f"  {case.source}{via} [{case.route}]: {types}{extra}")
