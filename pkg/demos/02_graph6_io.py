"""graph6 parsing and encoding, the adjacency-list fixture format, and the
exhaustive small-graph enumerator."""

from toughkit import (
    Graph,
    Graph6Error,
    encode_graph6,
    enumerate_connected_graphs,
    format_adjacency,
    parse_adjacency,
    parse_graph6,
)

print("== encode / parse round trips ==")
k2 = Graph(2, [(0, 1)])
k3 = Graph(3, [(0, 1), (0, 2), (1, 2)])
c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
for name, g in [("K2", k2), ("K3", k3), ("C4", c4), ("empty", Graph(0))]:
    line = encode_graph6(g)
    back = parse_graph6(line)
    print(f"  {name}: {line!r}  round-trip ok = {back == g}")

print()
print("== malformed input is rejected with a reason ==")
for bad in ["A", "A__", "Cl_", "A" + chr(62)]:
    try:
        parse_graph6(bad)
    except Graph6Error as exc:
        print(f"  {bad!r}: {exc}")

print()
print("== the adjacency-list fixture format ==")
text = format_adjacency(c4)
print("  C4 as text:", repr(text))
print("  parses back:", parse_adjacency(text) == c4)

print()
print("== connected graphs per vertex count ==")
for n in range(1, 7):
    classes = sum(1 for _ in enumerate_connected_graphs(n, dedup=True))
    print(f"  n={n}: {classes} isomorphism classes")
labeled = sum(1 for _ in enumerate_connected_graphs(4, dedup=False))
print(f"  n=4 labeled (no dedup): {labeled} graphs")

print()
print("== the 6 connected graphs on 4 vertices, as graph6 ==")
for g in enumerate_connected_graphs(4, dedup=True):
    print(f"  {encode_graph6(g)}  edges {g.edges()}")
