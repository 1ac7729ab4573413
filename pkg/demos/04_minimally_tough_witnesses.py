"""Minimal toughness and per-edge witness sets.

A graph is minimally t-tough when its toughness is exactly t and deleting
any edge pushes the toughness strictly below t.  For each edge the drop is
certified by a witness: the edge is a bridge, or a set S exists with
c(G-S) <= |S|/t while c((G-e)-S) > |S|/t.  Class structure gives special
witnesses: a closed-form set for edges inside the clique of a split graph,
a single vertex for claw-free graphs at t = 1/2, and (usually, see the
sweeps demo) a set inside the endpoint neighborhood when there is no
induced pair of independent edges.
"""

from fractions import Fraction

from toughkit import (
    Graph,
    clawfree_half_witness,
    edge_deletion_witness,
    is_minimally_t_tough,
    is_split,
    minimal_toughness_value,
    split_clique_edge_witness,
    toughness,
    twok2_neighborhood_witness,
)

F = Fraction

c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
c5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
paw = Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
net = Graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])
triangle_tails = Graph(
    9, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (1, 5), (5, 6), (2, 7), (7, 8)]
)

print("== minimal toughness decisions ==")
for name, g in [("C4", c4), ("paw", paw), ("net", net), ("triangle+P2 tails", triangle_tails)]:
    t = minimal_toughness_value(g)
    tau = toughness(g)[0]
    verdict = f"minimally {t}-tough" if t is not None else f"not minimal (tau = {tau})"
    print(f"  {name}: {verdict}")
print(f"  C4 at the wrong t: is_minimally_t_tough(C4, 1/2) = "
      f"{is_minimally_t_tough(c4, F(1, 2))}")

print()
print("== generic per-edge witnesses ==")
for e in c4.edges():
    print(" ", edge_deletion_witness(c4, F(1), e))

print()
print("== the closed-form split-clique witness ==")
cert = is_split(net)
for e in net.edges():
    u, v = e
    if u in cert.clique and v in cert.clique:
        w = split_clique_edge_witness(net, (cert.clique, cert.independent), e)
        print(f"  net {w}")

print()
print("== single-vertex witnesses at t = 1/2 (claw-free) ==")
for e in [(0, 1), (3, 4)]:
    print(f"  triangle+tails {clawfree_half_witness(triangle_tails, e)}")

print()
print("== neighborhood-restricted witnesses (no induced 2K2) ==")
for e in [(0, 1), (1, 2)]:
    w = twok2_neighborhood_witness(c5, F(1), e)
    u, v = e
    hood = sorted((set(c5.neighbors(u)) | set(c5.neighbors(v))) - {u, v})
    print(f"  C5 {w}   (allowed pool {hood})")
