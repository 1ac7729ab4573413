"""The named minimally tough families: generators and the matching
characterization recognizers.

Stars, paths, cycles, double stars, pendant triangles, and the triangle-
from-tree construction: take a tree with maximum degree 3 whose degree-1
and degree-3 vertices form an independent set, then replace every degree-3
vertex by a triangle on its three neighbors.  The output is minimally
1/2-tough and claw-free, and the recognizer inverts the construction.
"""

from fractions import Fraction

from toughkit import (
    ClawfreeHalfFromTree,
    Cycle,
    DoubleStar,
    Graph,
    Path,
    SplitTriangle,
    Star,
    canonical_key,
    encode_graph6,
    generate,
    is_minimally_t_tough,
    minimal_toughness_value,
    recognize_clawfree_half,
    recognize_clawfree_min_tough,
    recognize_split_min_tough,
    split_expand,
    toughness,
)

F = Fraction

print("== generators, as graph6, with their toughness ==")
for d, t in [
    (Star(4), F(1, 4)),
    (Path(5), F(1, 2)),
    (Cycle(5), F(1)),
    (DoubleStar(3, 2), F(1, 3)),
    (SplitTriangle(3), F(1, 3)),
]:
    g = generate(d)
    print(f"  {d}: {encode_graph6(g)}  minimally {t}-tough = "
          f"{is_minimally_t_tough(g, t)}")

print()
print("== the triangle-from-tree construction ==")
spider = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
out = generate(ClawfreeHalfFromTree(spider))
print(f"  spider with three length-2 legs ({spider.n} vertices) "
      f"-> {encode_graph6(out)} ({out.n} vertices)")
print(f"  output is the net graph, minimally {minimal_toughness_value(out)}-tough")
accepted, tree = recognize_clawfree_half(out)
print(f"  recognizer inverts it: accepted = {accepted}, "
      f"tree isomorphic to the spider = {canonical_key(tree) == canonical_key(spider)}")

print()
print("== characterization recognizers ==")
for name, g in [
    ("K_{1,4}", generate(Star(4))),
    ("pendant triangle b=3", generate(SplitTriangle(3))),
    ("C4", generate(Cycle(4))),
]:
    print(f"  split shape of {name}: 1/b = {recognize_split_min_tough(g)}")
for name, g in [
    ("C6", generate(Cycle(6))),
    ("P3", generate(Path(3))),
    ("K3", generate(Cycle(3))),
]:
    print(f"  claw-free value of {name}: {recognize_clawfree_min_tough(g)}")

print()
print("== the split expansion of an edge ==")
c5 = generate(Cycle(5))
h = split_expand(c5, (0, 1))
print(f"  C5 minus 0-1, first level completed: edges {sorted(h.edges())}")
print(f"  toughness {toughness(h)[0]} vs deleted-edge graph "
      f"{toughness(c5.delete_edge(0, 1))[0]}  (equal here; see the sweeps "
      "demo for the counterexamples)")
