"""Recognizers for chordal, split, claw-free and 2K2-free graphs.

Each recognizer returns a certificate: a perfect elimination order or a
clique/independent partition on acceptance, or an induced forbidden
subgraph on rejection.  Negative witnesses are the lexicographically
smallest qualifying vertex tuple, so outputs are reproducible.  Witness
extraction scans vertex subsets and is intended for desk-scale graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, _mask_to_tuple

CHORDAL = "chordal"
SPLIT = "split"
CLAW_FREE = "claw-free"
TWO_K2_FREE = "2k2-free"


@dataclass(frozen=True)
class ClassCertificate:
    """Verdict for one graph class, with a checkable positive or negative side.

    Exactly one side is populated: ``elimination_order`` (chordal) or
    ``clique``/``independent`` (split) on acceptance, ``witness`` (an induced
    forbidden subgraph, as a sorted vertex tuple) on rejection.  Claw-free
    and 2K2-free acceptance carries no positive data.
    """

    family: str
    verdict: bool
    elimination_order: tuple[int, ...] | None = None
    clique: frozenset[int] | None = None
    independent: frozenset[int] | None = None
    witness: tuple[int, ...] | None = None


# -- chordal ---------------------------------------------------------------------


def _simplicial_in(masks: tuple[int, ...], remaining: int, v: int) -> bool:
    nv = masks[v] & remaining
    m = nv
    while m:
        b = m & -m
        m ^= b
        if (nv & ~b) & ~masks[b.bit_length() - 1]:
            return False
    return True


def _chordal_verdict(g: Graph) -> bool:
    masks = g._nbr
    remaining = (1 << g.n) - 1
    while remaining:
        m = remaining
        found = False
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            if _simplicial_in(masks, remaining, v):
                remaining ^= b
                found = True
                break
        if not found:
            return False
    return True


def _induces_cycle(g: Graph, vs: tuple[int, ...]) -> bool:
    mask = 0
    for v in vs:
        mask |= 1 << v
    # induced degrees all 2 and connected => a single chordless cycle
    for v in vs:
        if (g._nbr[v] & mask).bit_count() != 2:
            return False
    seen = 1 << vs[0]
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            f ^= b
            nxt |= g._nbr[b.bit_length() - 1]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def _lex_min_chordless_cycle(g: Graph) -> tuple[int, ...]:
    candidates = []
    for size in range(4, g.n + 1):
        for vs in combinations(range(g.n), size):
            if _induces_cycle(g, vs):
                candidates.append(vs)
    if not candidates:
        raise RuntimeError("no chordless cycle found in a non-chordal graph")
    return min(candidates)


def is_chordal(g: Graph) -> ClassCertificate:
    """Test for chordality (no induced cycle of length >= 4).

    Accepts with a perfect elimination order built by repeatedly removing
    the smallest simplicial vertex of the remaining induced subgraph;
    rejects with a chordless cycle.
    """
    masks = g._nbr
    remaining = (1 << g.n) - 1
    order = []
    while remaining:
        m = remaining
        found = False
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            if _simplicial_in(masks, remaining, v):
                order.append(v)
                remaining ^= b
                found = True
                break
        if not found:
            return ClassCertificate(
                CHORDAL, False, witness=_lex_min_chordless_cycle(g)
            )
    return ClassCertificate(CHORDAL, True, elimination_order=tuple(order))


# -- split -----------------------------------------------------------------------


def _split_verdict(g: Graph) -> bool:
    # Degree-sequence test: with d1 >= d2 >= ... and m = max{i : d_i >= i-1},
    # the graph is split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i.
    d = sorted((x.bit_count() for x in g._nbr), reverse=True)
    m = 0
    for i, di in enumerate(d, start=1):
        if di >= i - 1:
            m = i
    return sum(d[:m]) == m * (m - 1) + sum(d[m:])


def _maximum_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximum cliques, as sorted vertex tuples (desk scale)."""
    best: list[tuple[int, ...]] = [()]
    n = g.n

    def extend(clique: list[int], cands: int) -> None:
        if not cands:
            if len(clique) > len(best[0]):
                best.clear()
                best.append(tuple(clique))
            elif len(clique) == len(best[0]):
                best.append(tuple(clique))
            return
        if len(clique) + cands.bit_count() < len(best[0]):
            return
        m = cands
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            clique.append(v)
            extend(clique, m & g._nbr[v])
            clique.pop()
        if len(clique) > len(best[0]):
            best.clear()
            best.append(tuple(clique))
        elif len(clique) == len(best[0]) and clique:
            best.append(tuple(clique))

    extend([], (1 << n) - 1)
    return sorted(set(best))


def _independent_mask(g: Graph, mask: int) -> bool:
    m = mask
    while m:
        b = m & -m
        m ^= b
        if g._nbr[b.bit_length() - 1] & mask:
            return False
    return True


def _lex_min_split_obstruction(g: Graph) -> tuple[int, ...]:
    # minimal obstructions to being split: induced 2K2, C4 or C5
    candidates = []
    for vs in combinations(range(g.n), 4):
        if _induces_cycle(g, vs) or _induces_2k2(g, vs):
            candidates.append(vs)
    for vs in combinations(range(g.n), 5):
        if _induces_cycle(g, vs):
            candidates.append(vs)
    if not candidates:
        raise RuntimeError("no 2K2/C4/C5 found in a non-split graph")
    return min(candidates)


def is_split(g: Graph) -> ClassCertificate:
    """Test whether the vertices split into a clique plus an independent set.

    Acceptance extracts a partition by scanning the maximum cliques for one
    whose complement is independent (one always exists in a split graph);
    rejection produces an induced 2K2, C4 or C5.
    """
    full = (1 << g.n) - 1
    valid = []
    for clique in _maximum_cliques(g):
        cmask = 0
        for v in clique:
            cmask |= 1 << v
        if _independent_mask(g, full & ~cmask):
            valid.append((clique, full & ~cmask))
    if valid:
        clique, imask = valid[0]  # lex-least maximum clique among valid ones
        return ClassCertificate(
            SPLIT,
            True,
            clique=frozenset(clique),
            independent=frozenset(_mask_to_tuple(imask)),
        )
    return ClassCertificate(SPLIT, False, witness=_lex_min_split_obstruction(g))


# -- claw-free -------------------------------------------------------------------


def _clawfree_verdict(g: Graph) -> bool:
    for v in range(g.n):
        nb = g.neighbors(v)
        if len(nb) < 3:
            continue
        for a, b, c in combinations(nb, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return False
    return True


def _induces_claw(g: Graph, vs: tuple[int, ...]) -> bool:
    mask = 0
    for v in vs:
        mask |= 1 << v
    degs = sorted((g._nbr[v] & mask).bit_count() for v in vs)
    return degs == [1, 1, 1, 3]


def is_claw_free(g: Graph) -> ClassCertificate:
    """Test for an induced star on three leaves."""
    if _clawfree_verdict(g):
        return ClassCertificate(CLAW_FREE, True)
    witness = min(
        vs for vs in combinations(range(g.n), 4) if _induces_claw(g, vs)
    )
    return ClassCertificate(CLAW_FREE, False, witness=witness)


# -- 2K2-free --------------------------------------------------------------------


def _twok2_verdict(g: Graph) -> bool:
    edges = g.edges()
    for (a, b), (c, d) in combinations(edges, 2):
        if c in (a, b) or d in (a, b):
            continue
        if not (
            g.has_edge(a, c)
            or g.has_edge(a, d)
            or g.has_edge(b, c)
            or g.has_edge(b, d)
        ):
            return False
    return True


def _induces_2k2(g: Graph, vs: tuple[int, ...]) -> bool:
    mask = 0
    for v in vs:
        mask |= 1 << v
    return all((g._nbr[v] & mask).bit_count() == 1 for v in vs)


def is_2k2_free(g: Graph) -> ClassCertificate:
    """Test for an induced pair of independent edges."""
    if _twok2_verdict(g):
        return ClassCertificate(TWO_K2_FREE, True)
    witness = min(
        vs for vs in combinations(range(g.n), 4) if _induces_2k2(g, vs)
    )
    return ClassCertificate(TWO_K2_FREE, False, witness=witness)
