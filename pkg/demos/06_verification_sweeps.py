"""Sweeping all small graphs to verify the structural claims, and the three
claims the sweeps refute.

Each suite classifies every connected graph in the range (exact toughness,
minimal toughness, class memberships) and checks one claim.  Most pass
with zero violations.  Three do not, and the counterexamples below are
confirmed by the unpruned oracle:

* T20 (deleting a non-bridge edge and completing the endpoint neighborhood
  into a clique preserves the toughness of g - e): false in general; the
  smallest counterexamples have 5 vertices.
* the expansion-based minimal-toughness decision for graphs with no
  induced 2K2: misses the net graph, where the added clique edges re-merge
  the components that the deleted edge separated.
* L19 (a witness always exists inside the deleted edge's endpoint
  neighborhood): false for one 7-vertex graph whose only witness is a
  far-away hub.
"""

from toughkit import EnumerationSource, run_suites, scan_minimally_tough
from toughkit.harness import SUITES

source = EnumerationSource(range(1, 7), mode="dedup")
print(f"running all {len(SUITES)} suites over {source.description} ...")
reports = {r.suite: r for r in run_suites(list(SUITES), source)}
print()
print(f"{'suite':<10}{'verdict':<14}{'instances':>10}{'violations':>12}")
for sid, rep in reports.items():
    print(f"{sid:<10}{rep.verdict:<14}{len(rep.instances):>10}{len(rep.violations):>12}")

print()
print("== what the minimally tough graphs on <= 5 vertices look like ==")
rows, _ = scan_minimally_tough(EnumerationSource(range(1, 6), mode="dedup"))
for row in rows:
    print(" ", row.to_line())

print()
print("== a refuted claim, up close ==")
t20 = reports["T20"]
print(f"T20 violations at n <= 6: {len(t20.violations)}; the first few:")
for g6, detail in t20.violations[:4]:
    print(f"  {g6}  {detail}")

print()
print("== the full report format for one suite ==")
print(reports["T16"].to_text())
