"""Recognizing the four graph classes, with checkable certificates.

Positive answers come with an elimination order (chordal) or a partition
(split); negative answers come with an induced forbidden subgraph that can
be re-verified directly.
"""

from toughkit import Graph, is_2k2_free, is_chordal, is_claw_free, is_split

zoo = {
    "P5": Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)]),
    "C4": Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    "C5": Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]),
    "paw": Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)]),
    "claw": Graph(4, [(0, 1), (0, 2), (0, 3)]),
    "bowtie": Graph(5, [(0, 1), (0, 4), (1, 4), (2, 3), (2, 4), (3, 4)]),
    "net": Graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)]),
}

for name, g in zoo.items():
    print(f"== {name} ==")
    cc = is_chordal(g)
    if cc.verdict:
        print(f"  chordal   yes  elimination order {list(cc.elimination_order)}")
    else:
        print(f"  chordal   no   chordless cycle {sorted(cc.witness)}")
    sc = is_split(g)
    if sc.verdict:
        print(f"  split     yes  clique {sorted(sc.clique)}, independent {sorted(sc.independent)}")
    else:
        print(f"  split     no   induced obstruction {sorted(sc.witness)}")
    for label, cert in (("claw-free", is_claw_free(g)), ("2k2-free", is_2k2_free(g))):
        if cert.verdict:
            print(f"  {label:<9} yes")
        else:
            print(f"  {label:<9} no   induced witness {sorted(cert.witness)}")
    print()
