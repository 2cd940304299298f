"""Exhaustively audit the inequality catalog.

Runs every catalog bound over all connected graphs with up to six vertices
and prints, per bound: its verdict, how many graphs were checked, and who
attains equality.  The interesting rows are the ones where the published
equality claim and the witnesses disagree.
"""

from degbound import audit_all, builtin_catalog, connected_graphs

population = []
for n in range(2, 7):
    population.extend(connected_graphs(n))
print(f"population: {len(population)} connected graphs of order 2..6\n")

reports = audit_all(builtin_catalog(), population, population="enumerate(n=2..6)")

print(f"{'bound':12s} {'verdict':30s} {'checked':>7s} {'equal':>5s}  claimed family")
for b in builtin_catalog():
    r = reports[b.bound_id]
    fam = r.equality_family or "-"
    print(f"{b.bound_id:12s} {r.verdict:30s} {r.counts['checked']:7d} "
          f"{r.counts['equality']:5d}  {fam}")

print("\nbounds whose witnesses disagree with the claimed family:")
for b in builtin_catalog():
    r = reports[b.bound_id]
    extra = r.family_mismatches["equality_not_in_family"]
    missing = r.family_mismatches["family_without_equality"]
    if extra or missing:
        print(f"  {b.bound_id}: unexpected witnesses {extra or 'none'}, "
              f"family members without equality {missing or 'none'}")

print("\nviolations:")
for b in builtin_catalog():
    r = reports[b.bound_id]
    if r.violation_witnesses:
        print(f"  {b.bound_id}: {len(r.violation_witnesses)} graphs, "
              f"e.g. {r.violation_witnesses[:5]}")
