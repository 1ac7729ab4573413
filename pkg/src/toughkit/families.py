"""Generators for the named minimally tough families, and the matching
characterization-based recognizers.

Vertex numbering is fixed per family so graph6 fixtures are stable:

* ``Star(b)``: center 0, leaves 1..b.
* ``Path(n)``: 0-1-...-(n-1).
* ``Cycle(n)``: 0-1-...-(n-1)-0.
* ``DoubleStar(b, k)``: adjacent centers 0 and 1; 0 carries leaves 2..b,
  1 carries leaves b+1..b+k (so 0 has degree b).
* ``SplitTriangle(b)``: triangle 0,1,2; triangle vertex i carries the b-1
  pendant leaves 3+i*(b-1) .. 3+(i+1)*(b-1)-1.
* ``ClawfreeHalfFromTree(tree)``: every degree-3 vertex of the tree is
  deleted and its three neighbors are joined into a triangle; surviving
  tree vertices are renumbered in ascending order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, blocks, bridges
from .recognition import _clawfree_verdict, _twok2_verdict
from .toughness import Toughness, toughness


@dataclass(frozen=True)
class Star:
    b: int


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class DoubleStar:
    b: int
    k: int


@dataclass(frozen=True)
class SplitTriangle:
    b: int


@dataclass(frozen=True)
class ClawfreeHalfFromTree:
    tree: Graph


FamilyDescriptor = Star | Path | Cycle | DoubleStar | SplitTriangle | ClawfreeHalfFromTree


def _valid_half_tree(tree: Graph) -> str | None:
    """Why ``tree`` is not a valid input for the triangle construction, or None."""
    if not tree.is_tree():
        return "input is not a tree"
    if tree.n < 3:
        return "tree needs at least 3 vertices"
    if tree.max_degree() > 3:
        return "tree has a vertex of degree above 3"
    special = [v for v in range(tree.n) if tree.degree(v) in (1, 3)]
    for i, u in enumerate(special):
        for v in special[i + 1 :]:
            if tree.has_edge(u, v):
                return (
                    f"degree-1/degree-3 vertices {u} and {v} are adjacent; "
                    "they must form an independent set"
                )
    return None


def generate(d: FamilyDescriptor) -> Graph:
    """Build the graph described by a family descriptor."""
    if isinstance(d, Star):
        if d.b < 1:
            raise ValueError("star needs b >= 1")
        return Graph(d.b + 1, [(0, i) for i in range(1, d.b + 1)])
    if isinstance(d, Path):
        if d.n < 1:
            raise ValueError("path needs n >= 1")
        return Graph(d.n, [(i, i + 1) for i in range(d.n - 1)])
    if isinstance(d, Cycle):
        if d.n < 3:
            raise ValueError("cycle needs n >= 3")
        return Graph(d.n, [(i, (i + 1) % d.n) for i in range(d.n)])
    if isinstance(d, DoubleStar):
        if d.b < 2:
            raise ValueError("double star needs b >= 2")
        if not 1 <= d.k <= d.b - 1:
            raise ValueError("double star needs 1 <= k <= b-1")
        edges = [(0, 1)]
        edges += [(0, i) for i in range(2, d.b + 1)]
        edges += [(1, i) for i in range(d.b + 1, d.b + d.k + 1)]
        return Graph(d.b + d.k + 1, edges)
    if isinstance(d, SplitTriangle):
        if d.b < 1:
            raise ValueError("split triangle needs b >= 1")
        edges = [(0, 1), (0, 2), (1, 2)]
        nxt = 3
        for i in range(3):
            for _ in range(d.b - 1):
                edges.append((i, nxt))
                nxt += 1
        return Graph(nxt, edges)
    if isinstance(d, ClawfreeHalfFromTree):
        tree = d.tree
        reason = _valid_half_tree(tree)
        if reason is not None:
            raise ValueError(reason)
        deleted = [v for v in range(tree.n) if tree.degree(v) == 3]
        keep = [v for v in range(tree.n) if tree.degree(v) != 3]
        relabel = {v: i for i, v in enumerate(keep)}
        edges = [
            (relabel[u], relabel[v])
            for u, v in tree.edges()
            if u in relabel and v in relabel
        ]
        for v in deleted:
            a, b, c = (relabel[w] for w in tree.neighbors(v))
            edges += [(a, b), (a, c), (b, c)]
        return Graph(len(keep), edges)
    raise TypeError(f"unknown family descriptor: {d!r}")


def parse_descriptor(text: str) -> FamilyDescriptor:
    """Parse the command-line descriptor syntax.

    ``star:3``, ``path:5``, ``cycle:4``, ``doublestar:b,k``,
    ``splittriangle:b`` and ``clawhalf:<tree-file>`` (file read by the CLI).
    """
    kind, _, arg = text.partition(":")
    kind = kind.strip().lower()
    try:
        if kind == "star":
            return Star(int(arg))
        if kind == "path":
            return Path(int(arg))
        if kind == "cycle":
            return Cycle(int(arg))
        if kind == "doublestar":
            b, k = arg.split(",")
            return DoubleStar(int(b), int(k))
        if kind == "splittriangle":
            return SplitTriangle(int(arg))
    except ValueError as exc:
        raise ValueError(f"bad descriptor {text!r}: {exc}") from None
    raise ValueError(f"unknown family {kind!r}")


# -- recognizers -----------------------------------------------------------------


def recognize_clawfree_half(g: Graph) -> tuple[bool, Graph | None]:
    """Is g a minimally 1/2-tough claw-free graph?  Certified by a tree.

    Accepts exactly the connected claw-free graphs, on at least 3 vertices,
    whose blocks are single edges or triangles and whose reverse
    construction is a valid input tree: replace each triangle by a fresh
    vertex joined to the triangle's three corners, and require the result
    to be a tree with maximum degree 3 in which the fresh vertices are
    exactly the degree-3 vertices and the degree-1/degree-3 vertices form
    an independent set.  The certificate tree has the original vertices
    0..n-1 followed by one fresh vertex per triangle, in block order.
    """
    if g.n < 3 or not g.is_connected():
        return False, None
    if not _clawfree_verdict(g):
        return False, None
    decomposition = blocks(g)
    triangles = []
    for blk in decomposition.blocks:
        if len(blk) == 2:
            continue
        if len(blk) == 3:
            triangles.append(tuple(sorted(blk)))
        else:
            return False, None
    # Blocks are edge-disjoint, so distinct triangle blocks never share an edge.
    bridge_blocks = {b for b in decomposition.blocks if len(b) == 2}
    tree_edges = [e for e in g.edges() if frozenset(e) in bridge_blocks]
    n_tree = g.n + len(triangles)
    edges = list(tree_edges)
    for i, tri in enumerate(triangles):
        fresh = g.n + i
        edges += [(a, fresh) for a in tri]
    tree = Graph(n_tree, edges)
    if tree.edge_count != n_tree - 1 or not tree.is_connected():
        return False, None
    if tree.max_degree() > 3:
        return False, None
    fresh_set = set(range(g.n, n_tree))
    deg3 = {v for v in range(n_tree) if tree.degree(v) == 3}
    if deg3 != fresh_set:
        return False, None
    if _valid_half_tree(tree) is not None:
        return False, None
    return True, tree


def recognize_split_min_tough(g: Graph) -> Fraction | None:
    """Match the two shapes of minimally tough split graphs.

    Either a tree with at most two internal vertices and maximum degree
    b >= 2 (a star or a double star), or a triangle whose three corners
    each carry b-1 >= 1 pendant leaves; both have toughness exactly 1/b.
    """
    if g.is_tree() and g.n >= 3:
        internal = [v for v in range(g.n) if g.degree(v) >= 2]
        if len(internal) <= 2:
            return Fraction(1, g.max_degree())
        return None
    core = [v for v in range(g.n) if g.degree(v) >= 2]
    if len(core) != 3:
        return None
    a, b_, c = core
    if not (g.has_edge(a, b_) and g.has_edge(a, c) and g.has_edge(b_, c)):
        return None
    degs = {g.degree(v) for v in core}
    if len(degs) != 1:
        return None
    b = degs.pop() - 1
    if b < 2:
        return None
    if any(g.degree(v) != 1 for v in range(g.n) if v not in core):
        return None
    return Fraction(1, b)


def recognize_clawfree_min_tough(g: Graph) -> Fraction | None:
    """Settled values for minimally tough claw-free graphs: 1 and 1/2.

    Cycles of length at least 4 are the minimally 1-tough members; the
    triangle-from-tree construction covers 1/2.  Other values are not
    characterized and give None.
    """
    if g.n >= 4 and g.is_connected() and all(g.degree(v) == 2 for v in range(g.n)):
        return Fraction(1)
    if recognize_clawfree_half(g)[0]:
        return Fraction(1, 2)
    return None


def split_expand(g: Graph, e: tuple[int, int]) -> Graph:
    """Delete an edge and complete its endpoint neighborhood into a clique.

    For a connected graph with no induced pair of independent edges and a
    non-bridge edge uv, everything sits within distance two of {u, v} and
    there are no edges among the far vertices, so the result is a split
    graph whose toughness equals that of g - e.
    """
    if not _twok2_verdict(g):
        raise ValueError("graph has an induced pair of independent edges")
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    e = (u, v) if u < v else (v, u)
    if e in bridges(g):
        raise ValueError(f"edge {e} is a bridge")
    hood = (g._nbr[u] | g._nbr[v]) & ~(1 << u) & ~(1 << v)
    members = []
    m = hood
    while m:
        bit = m & -m
        m ^= bit
        members.append(bit.bit_length() - 1)
    new_edges = [
        (a, b)
        for i, a in enumerate(members)
        for b in members[i + 1 :]
        if not g.has_edge(a, b)
    ]
    return g.delete_edge(u, v).add_edges(new_edges)


def recognize_2k2_min_tough(g: Graph) -> Fraction | None:
    """Minimal-toughness decision that only ever computes split toughness
    after the first deletion.

    Bridges always drop the toughness; for a non-bridge edge the expansion
    ``split_expand`` preserves the toughness of g - e, so comparing its
    toughness against t decides the edge.  Must agree with the direct
    definition on every connected 2K2-free graph.
    """
    if not _twok2_verdict(g):
        raise ValueError("graph has an induced pair of independent edges")
    tau, _ = toughness(g)
    if not tau.is_finite:
        return None
    t = tau.value
    bridge_set = bridges(g)
    for edge_ in g.edges():
        if edge_ in bridge_set:
            continue
        expanded = split_expand(g, edge_)
        if not (toughness(expanded)[0] < Toughness.finite(t)):
            return None
    return t
