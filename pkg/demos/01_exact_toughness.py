"""Exact toughness values, witnesses, and the two independent engines.

The toughness of a graph is the minimum, over all cutsets S, of |S| divided
by the number of components left after removing S.  Complete graphs get
infinity (they have no cutset) and disconnected graphs get zero.  Everything
below is exact rational arithmetic; no floats anywhere.
"""

from fractions import Fraction

from toughkit import (
    Graph,
    clawfree_toughness,
    is_t_tough,
    naive_toughness_oracle,
    toughness,
    validate_tough_set,
)

# A few named graphs, built from explicit edge lists.
c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
c5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
star3 = Graph(4, [(0, 1), (0, 2), (0, 3)])
p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
k4 = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
petersen = Graph(
    10,
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)],
)

print("== toughness with minimizing cutsets ==")
for name, g in [
    ("C4", c4),
    ("C5", c5),
    ("K_{1,3}", star3),
    ("P4", p4),
    ("K4", k4),
    ("Petersen", petersen),
]:
    tau, witness = toughness(g)
    extra = f"  tough set {witness} leaving {witness.component_count} components" if witness else ""
    print(f"  tau({name}) = {tau}{extra}")

print()
print("== pruned engine vs the unpruned oracle ==")
for name, g in [("C5", c5), ("Petersen", petersen)]:
    print(f"  {name}: engine {toughness(g)[0]}, oracle {naive_toughness_oracle(g)}")

print()
print("== t-tough decisions ==")
for t in (Fraction(1, 2), Fraction(1), Fraction(3, 2)):
    ok, witness = is_t_tough(c5, t)
    line = f"  C5 is {t}-tough: {ok}"
    if witness:
        line += f"  (violating cutset {witness}: {witness.component_count} components)"
    print(line)

print()
print("== the claw-free shortcut: toughness is half the connectivity ==")
for name, g in [("C5", c5), ("P4", p4)]:
    print(f"  {name}: shortcut {clawfree_toughness(g)}, engine {toughness(g)[0]}")

print()
print("== structure of a tough set in a claw-free graph ==")
ok, problems = validate_tough_set(c5, [0, 2], Fraction(1))
print(f"  C5 with cutset {{0,2}} at t=1: valid = {ok}")
ok, problems = validate_tough_set(c4, [0, 2], Fraction(1, 2))
print(f"  C4 with cutset {{0,2}} at t=1/2: valid = {ok}")
for p in problems:
    print(f"    {p}")
