"""Immutable simple graphs on small vertex sets, plus basic structure queries.

Vertices are the integers 0..n-1 and neighborhoods are stored as bitmasks,
which keeps the exhaustive subset searches used elsewhere in the package
cheap.  Graphs are immutable after construction and every function in this
module is pure, so everything is safe to share across threads.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, NamedTuple

DEFAULT_VERTEX_CAP = 32
MAX_VERTEX_CAP = 64

_vertex_cap = DEFAULT_VERTEX_CAP


def vertex_cap() -> int:
    """Current cap on the vertex count of a Graph."""
    return _vertex_cap


def set_vertex_cap(cap: int) -> None:
    """Change the vertex cap.  At most 64 so vertex sets stay word sized."""
    global _vertex_cap
    if not 1 <= cap <= MAX_VERTEX_CAP:
        raise ValueError(f"vertex cap must be in 1..{MAX_VERTEX_CAP}, got {cap}")
    _vertex_cap = cap


def edge(u: int, v: int) -> tuple[int, int]:
    """Canonical form of an edge: endpoints sorted ascending."""
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """A simple undirected graph on vertices 0..n-1.

    ``_nbr[v]`` is the bitmask of neighbors of ``v``.  Instances are
    immutable; "mutating" operations return new graphs.
    """

    __slots__ = ("n", "_nbr")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0 or n > _vertex_cap:
            raise ValueError(f"vertex count {n} outside 0..{_vertex_cap}")
        nbr = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        self.n = n
        self._nbr = tuple(nbr)

    @classmethod
    def _from_masks(cls, n: int, masks: tuple[int, ...]) -> "Graph":
        # Trusted fast path: caller guarantees symmetry and irreflexivity.
        g = object.__new__(cls)
        g.n = n
        g._nbr = masks
        return g

    # -- basic accessors ---------------------------------------------------

    def neighbor_mask(self, v: int) -> int:
        return self._nbr[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return _mask_to_tuple(self._nbr[v])

    def degree(self, v: int) -> int:
        return self._nbr[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self._nbr)

    def min_degree(self) -> int:
        return min((m.bit_count() for m in self._nbr), default=0)

    def max_degree(self) -> int:
        return max((m.bit_count() for m in self._nbr), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._nbr[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in _mask_to_tuple(self._nbr[u] >> (u + 1) << (u + 1))
        ]

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._nbr) // 2

    def vertices(self) -> range:
        return range(self.n)

    # -- derived graphs ----------------------------------------------------

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge")
        nbr = list(self._nbr)
        nbr[u] &= ~(1 << v)
        nbr[v] &= ~(1 << u)
        return Graph._from_masks(self.n, tuple(nbr))

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbr = list(self._nbr)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        return Graph._from_masks(self.n, tuple(nbr))

    # -- global predicates ---------------------------------------------------

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return _component_count(self._nbr, (1 << self.n) - 1, 0) <= 1

    def is_tree(self) -> bool:
        return self.n >= 1 and self.edge_count == self.n - 1 and self.is_connected()

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self._nbr == other._nbr
        )

    def __hash__(self) -> int:
        return hash((self.n, self._nbr))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()})"


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def set_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


# -- connected components ----------------------------------------------------


def _component_count(nbr: tuple[int, ...], full: int, removed: int) -> int:
    """Number of connected components of the graph restricted to full & ~removed."""
    pool = full & ~removed
    count = 0
    while pool:
        count += 1
        comp = pool & -pool
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= nbr[b.bit_length() - 1]
            frontier = nxt & pool & ~comp
            comp |= frontier
        pool &= ~comp
    return count


def _component_masks(nbr: tuple[int, ...], full: int, removed: int) -> list[int]:
    """Bitmasks of the components, ordered by smallest contained vertex."""
    pool = full & ~removed
    out = []
    while pool:
        comp = pool & -pool
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= nbr[b.bit_length() - 1]
            frontier = nxt & pool & ~comp
            comp |= frontier
        out.append(comp)
        pool &= ~comp
    return out


class ComponentInfo(NamedTuple):
    count: int
    labels: dict[int, int]
    sizes: list[int]


def components(g: Graph, removed: Iterable[int] = ()) -> ComponentInfo:
    """Connected components of ``g`` minus the removed vertices.

    Component ids are dense, assigned 0,1,... by smallest contained vertex,
    and ``labels`` is defined exactly on the surviving vertices.
    """
    rm = set_to_mask(removed)
    if rm & ~((1 << g.n) - 1):
        raise ValueError("removed set outside vertex range")
    masks = _component_masks(g._nbr, (1 << g.n) - 1, rm)
    labels: dict[int, int] = {}
    sizes = []
    for i, m in enumerate(masks):
        sizes.append(m.bit_count())
        for v in _mask_to_tuple(m):
            labels[v] = i
    return ComponentInfo(len(masks), labels, sizes)


# -- bridges and blocks --------------------------------------------------------


def _biconnected(g: Graph) -> tuple[list[frozenset[int]], frozenset[int], int]:
    """Blocks, cut vertices and number of connected components (all of g)."""
    n = g.n
    disc = [0] * n  # 0 = unvisited, else 1-based discovery time
    low = [0] * n
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    estack: list[tuple[int, int]] = []
    time = 1
    ncomp = 0

    def dfs(root: int) -> None:
        nonlocal time
        # Iterative DFS with explicit stack of (vertex, parent, neighbor iter).
        stack = [(root, -1, iter(g.neighbors(root)))]
        disc[root] = low[root] = time
        time += 1
        root_children = 0
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == 0:
                    estack.append((v, w))
                    disc[w] = low[w] = time
                    time += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    estack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    # u separates v's subtree: pop one block.
                    verts = {u, v}
                    while estack and estack[-1] != (u, v):
                        a, b = estack.pop()
                        verts.add(a)
                        verts.add(b)
                    if estack:
                        estack.pop()
                    blocks.append(frozenset(verts))
                    if u != root or root_children > 1:
                        cuts.add(u)

    for v in range(n):
        if disc[v] == 0:
            ncomp += 1
            if g.degree(v) == 0:
                continue
            dfs(v)
    blocks.sort(key=lambda b: tuple(sorted(b)))
    return blocks, frozenset(cuts), ncomp


def bridges(g: Graph) -> frozenset[tuple[int, int]]:
    """Edges whose removal increases the number of components."""
    blks, _, _ = _biconnected(g)
    out = set()
    for b in blks:
        if len(b) == 2:
            u, v = sorted(b)
            out.add((u, v))
    return frozenset(out)


class BlockDecomposition(NamedTuple):
    blocks: list[frozenset[int]]
    cut_vertices: frozenset[int]


def blocks(g: Graph) -> BlockDecomposition:
    """Block-cut decomposition of a connected graph.

    Blocks are returned as vertex sets (a 2-set is a bridge edge), sorted by
    their sorted vertex tuples so output is reproducible.
    """
    blks, cuts, ncomp = _biconnected(g)
    if ncomp > 1:
        raise ValueError("graph is disconnected")
    return BlockDecomposition(blks, cuts)


# -- vertex connectivity -----------------------------------------------------


class VertexConnectivity(NamedTuple):
    value: int
    complete: bool


def _local_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally vertex-disjoint s-t paths (s,t nonadjacent).

    Unit-capacity max flow on the split-vertex digraph: each vertex v becomes
    v_in -> v_out with capacity 1; each edge gives both directions with large
    capacity.
    """
    n = g.n
    big = n + 1
    # node 2v = v_in, 2v+1 = v_out
    cap: list[dict[int, int]] = [dict() for _ in range(2 * n)]
    for v in range(n):
        cap[2 * v][2 * v + 1] = 1
    for u, v in g.edges():
        cap[2 * u + 1][2 * v] = big
        cap[2 * v + 1][2 * u] = big
    src, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = {src: -1}
        queue = [src]
        for x in queue:
            if x == sink:
                break
            for y, c in cap[x].items():
                if c > 0 and y not in prev:
                    prev[y] = x
                    queue.append(y)
        if sink not in prev:
            return flow
        # augment by 1 (all augmenting paths here have bottleneck >= 1)
        y = sink
        while y != src:
            x = prev[y]
            cap[x][y] -= 1
            cap[y][x] = cap[y].get(x, 0) + 1
            y = x
        flow += 1


def vertex_connectivity(g: Graph) -> VertexConnectivity:
    """Size of a minimum vertex cut, with a marker for complete graphs.

    Complete graphs have no cutset; the conventional value n-1 is reported
    together with ``complete=True``.  Disconnected graphs give 0.
    """
    n = g.n
    if g.is_complete():
        return VertexConnectivity(max(n - 1, 0), True)
    if not g.is_connected():
        return VertexConnectivity(0, False)
    best = n - 1
    for s, t in combinations(range(n), 2):
        if not g.has_edge(s, t):
            k = _local_connectivity(g, s, t)
            if k < best:
                best = k
                if best == 1:
                    break
    return VertexConnectivity(best, False)


# -- simplicial vertices --------------------------------------------------------


def simplicial_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose neighborhood induces a clique."""
    out = set()
    for v in range(g.n):
        nv = g._nbr[v]
        m = nv
        ok = True
        while m:
            b = m & -m
            m ^= b
            u = b.bit_length() - 1
            if (nv & ~b) & ~g._nbr[u]:
                ok = False
                break
        if ok:
            out.add(v)
    return frozenset(out)
