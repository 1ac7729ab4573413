"""Minimally tough graphs and the vertex sets that certify them.

A graph is minimally t-tough when its toughness is exactly t and deleting
any single edge drops the toughness below t.  For every edge e of such a
graph there is a witness: either e is a bridge, or some set S satisfies
c(G-S) <= |S|/t and c((G-e)-S) > |S|/t, making e a bridge of G-S.  The
searches here return the smallest such set, ties broken by
lexicographically least vertex tuple, and every returned witness is
re-checked from scratch before it is handed back.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .graphs import Graph, _component_count, _mask_to_tuple, bridges, set_to_mask
from .toughness import toughness


@dataclass(frozen=True)
class EdgeWitness:
    """Evidence that deleting one edge drops the toughness below t.

    ``bridge_case`` means the edge disconnects the graph by itself and the
    set is empty.  Otherwise ``omega_before = c(G-S) <= bound = |S|/t`` and
    ``omega_after = c((G-e)-S) > bound``, which also makes the edge a bridge
    of G-S.
    """

    edge: tuple[int, int]
    vertices: frozenset[int]
    bridge_case: bool
    omega_before: int
    omega_after: int
    bound: Fraction

    def holds(self, g: Graph, t: Fraction | int) -> bool:
        """Re-evaluate the witness conditions against the graph."""
        t = Fraction(t)
        u, v = self.edge
        if not g.has_edge(u, v):
            return False
        full = (1 << g.n) - 1
        if self.bridge_case:
            return not self.vertices and self.edge in bridges(g)
        removed = set_to_mask(self.vertices)
        if removed & (1 << u | 1 << v):
            return False
        before = _component_count(g._nbr, full, removed)
        masks = list(g._nbr)
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        after = _component_count(tuple(masks), full, removed)
        bound = Fraction(len(self.vertices), 1) / t
        return (
            before == self.omega_before
            and after == self.omega_after
            and self.bound == bound
            and before <= bound
            and after > bound
            and after == before + 1
        )

    def __str__(self) -> str:
        u, v = self.edge
        if self.bridge_case:
            return f"edge {u}-{v}: bridge, S = {{}}"
        inner = ",".join(str(x) for x in sorted(self.vertices))
        return (
            f"edge {u}-{v}: S = {{{inner}}}, "
            f"omega(G-S) = {self.omega_before} <= |S|/t = {self.bound}, "
            f"omega((G-e)-S) = {self.omega_after} > {self.bound}"
        )


def _deleted_edge_masks(g: Graph, u: int, v: int) -> tuple[int, ...]:
    masks = list(g._nbr)
    masks[u] &= ~(1 << v)
    masks[v] &= ~(1 << u)
    return tuple(masks)


def _first_violating_cutset(
    masks: tuple[int, ...],
    n: int,
    t: Fraction,
    candidates: tuple[int, ...] | None = None,
) -> tuple[int, ...] | None:
    """Smallest (size, then lex) cutset S of the graph behind ``masks`` with
    c(S) > |S|/t, optionally drawn from a restricted candidate pool."""
    p, q = t.numerator, t.denominator
    full = (1 << n) - 1
    pool = tuple(range(n)) if candidates is None else candidates
    # p*omega > q*size needs size*(p+q) < p*n since omega <= n - size
    max_size = min(len(pool), (p * n - 1) // (p + q) if p * n > 0 else 0)
    for size in range(1, max_size + 1):
        for combo in combinations(pool, size):
            removed = 0
            for x in combo:
                removed |= 1 << x
            omega = _component_count(masks, full, removed)
            if omega >= 2 and p * omega > q * size:
                return combo
    return None


def _tau_drops(g: Graph, u: int, v: int, t: Fraction, bridge_set) -> bool:
    """Does deleting edge (u,v) push the toughness strictly below t?"""
    if (u, v) in bridge_set:
        return True
    masks = _deleted_edge_masks(g, u, v)
    return _first_violating_cutset(masks, g.n, t) is not None


def is_minimally_t_tough(g: Graph, t: Fraction | int) -> bool:
    """Toughness equals t and every single-edge deletion drops it below t."""
    t = Fraction(t)
    if t <= 0:
        raise ValueError("t must be positive")
    tau, _ = toughness(g)
    if tau != t:
        return False
    bridge_set = bridges(g)
    return all(_tau_drops(g, u, v, t, bridge_set) for u, v in g.edges())


def minimal_toughness_value(g: Graph) -> Fraction | None:
    """The t for which g is minimally t-tough, or None."""
    tau, _ = toughness(g)
    if not tau.is_finite:
        return None
    t = tau.value
    bridge_set = bridges(g)
    if all(_tau_drops(g, u, v, t, bridge_set) for u, v in g.edges()):
        return t
    return None


def _build_witness(
    g: Graph, e: tuple[int, int], t: Fraction, combo: tuple[int, ...]
) -> EdgeWitness:
    u, v = e
    full = (1 << g.n) - 1
    removed = set_to_mask(combo)
    before = _component_count(g._nbr, full, removed)
    after = _component_count(_deleted_edge_masks(g, u, v), full, removed)
    bound = Fraction(len(combo), 1) / t
    w = EdgeWitness(e, frozenset(combo), False, before, after, bound)
    if not w.holds(g, t):
        raise RuntimeError(
            f"witness re-validation failed for edge {e}; "
            "is the graph really minimally tough?"
        )
    return w


def _bridge_witness(g: Graph, e: tuple[int, int]) -> EdgeWitness:
    full = (1 << g.n) - 1
    u, v = e
    before = _component_count(g._nbr, full, 0)
    after = _component_count(_deleted_edge_masks(g, u, v), full, 0)
    return EdgeWitness(e, frozenset(), True, before, after, Fraction(0))


def edge_deletion_witness(g: Graph, t: Fraction | int, e: tuple[int, int]) -> EdgeWitness:
    """Witness set for one edge of a minimally t-tough graph.

    Bridges short-circuit to the empty set.  Otherwise the smallest cutset
    of G-e whose component count beats |S|/t is returned, after re-checking
    all of its properties exactly.
    """
    t = Fraction(t)
    if t <= 0:
        raise ValueError("t must be positive")
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    e = (u, v) if u < v else (v, u)
    if e in bridges(g):
        return _bridge_witness(g, e)
    combo = _first_violating_cutset(_deleted_edge_masks(g, *e), g.n, t)
    if combo is None:
        raise RuntimeError(
            f"no witness for edge {e}: the graph is not minimally {t}-tough"
        )
    return _build_witness(g, e, t, combo)


def split_clique_edge_witness(
    g: Graph,
    partition: tuple[Iterable[int], Iterable[int]],
    e: tuple[int, int],
    t: Fraction | int | None = None,
) -> EdgeWitness:
    """Closed-form witness for an edge inside the clique of a split graph.

    For a minimally t-tough split graph with partition (C, I) and an edge
    e = uv inside C, the witness is exactly
    (C minus {u, v}) union {w in I adjacent to both u and v}.
    An empty set means e is a bridge.
    """
    C = frozenset(partition[0])
    I = frozenset(partition[1])
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    if u not in C or v not in C:
        raise ValueError(f"edge ({u},{v}) is not inside the clique side")
    if C & I or (C | I) != set(range(g.n)):
        raise ValueError("not a partition of the vertices")
    if any(not g.has_edge(a, b) for a in C for b in C if a < b):
        raise ValueError("clique side is not a clique")
    if any(g.has_edge(a, b) for a in I for b in I if a < b):
        raise ValueError("independent side is not independent")
    e = (u, v) if u < v else (v, u)
    s = (C - {u, v}) | {w for w in I if g.has_edge(u, w) and g.has_edge(v, w)}
    if not s:
        if e not in bridges(g):
            raise RuntimeError(f"formula set empty but edge {e} is not a bridge")
        return _bridge_witness(g, e)
    if t is None:
        tau, _ = toughness(g)
        if not tau.is_finite:
            raise ValueError("graph has no finite toughness")
        t = tau.value
    return _build_witness(g, e, Fraction(t), tuple(sorted(s)))


def clawfree_half_witness(g: Graph, e: tuple[int, int]) -> EdgeWitness:
    """Witness of size at most one for a minimally 1/2-tough claw-free graph.

    A non-bridge edge always lies in a component that is separated off by a
    single cut vertex; removing that vertex and the edge leaves three
    components against the bound |S|/t = 2.
    """
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    e = (u, v) if u < v else (v, u)
    if e in bridges(g):
        return _bridge_witness(g, e)
    t = Fraction(1, 2)
    full = (1 << g.n) - 1
    masks = _deleted_edge_masks(g, *e)
    for x in range(g.n):
        removed = 1 << x
        if _component_count(masks, full, removed) > 2 >= _component_count(
            g._nbr, full, removed
        ):
            return _build_witness(g, e, t, (x,))
    raise RuntimeError(
        f"no single-vertex witness for edge {e}: "
        "graph is not minimally 1/2-tough claw-free"
    )


def twok2_neighborhood_witness(
    g: Graph, t: Fraction | int, e: tuple[int, int]
) -> EdgeWitness:
    """Witness drawn from the open neighborhood of the edge's endpoints.

    In a minimally t-tough graph with no induced pair of independent edges,
    a non-bridge edge always has a witness inside N({u,v}) minus {u,v}; the
    search is restricted to that pool.
    """
    t = Fraction(t)
    if t <= 0:
        raise ValueError("t must be positive")
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    e = (u, v) if u < v else (v, u)
    if e in bridges(g):
        return _bridge_witness(g, e)
    hood = (g._nbr[u] | g._nbr[v]) & ~(1 << u) & ~(1 << v)
    combo = _first_violating_cutset(
        _deleted_edge_masks(g, *e), g.n, t, candidates=_mask_to_tuple(hood)
    )
    if combo is None:
        raise RuntimeError(
            f"no witness for edge {e} inside the endpoint neighborhood"
        )
    return _build_witness(g, e, t, combo)
