"""Exact toughness of small graphs.

The toughness of a connected noncomplete graph is the minimum of |S| / c(S)
over all cutsets S, where c(S) is the number of components left after
removing S.  Complete graphs get the value infinity and disconnected graphs
get zero.  All arithmetic is exact: ratios are compared by integer
cross-multiplication and reported as fractions.  No floating point is used
anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .graphs import (
    Graph,
    _component_count,
    _component_masks,
    _mask_to_tuple,
    set_to_mask,
    vertex_connectivity,
)


class Toughness:
    """Toughness value: infinite (complete graph), zero (disconnected), or a
    positive fraction.  Totally ordered, comparable against plain numbers."""

    __slots__ = ("_value",)

    def __init__(self, value: Fraction | None):
        if value is not None:
            value = Fraction(value)
            if value < 0:
                raise ValueError("toughness cannot be negative")
        self._value = value

    @classmethod
    def infinite(cls) -> "Toughness":
        return cls(None)

    @classmethod
    def zero(cls) -> "Toughness":
        return cls(Fraction(0))

    @classmethod
    def finite(cls, value: Fraction | int | str) -> "Toughness":
        value = Fraction(value)
        if value <= 0:
            raise ValueError("finite toughness must be positive")
        return cls(value)

    @property
    def is_infinite(self) -> bool:
        return self._value is None

    @property
    def is_zero(self) -> bool:
        return self._value == 0

    @property
    def is_finite(self) -> bool:
        return self._value is not None and self._value > 0

    @property
    def value(self) -> Fraction:
        """The fraction behind a finite or zero value; raises when infinite."""
        if self._value is None:
            raise ValueError("infinite toughness has no fraction value")
        return self._value

    def _key(self, other: object) -> tuple[Fraction | None, Fraction | None]:
        if isinstance(other, Toughness):
            return self._value, other._value
        if isinstance(other, (int, Fraction)):
            return self._value, Fraction(other)
        return self._value, NotImplemented  # type: ignore[return-value]

    def __eq__(self, other: object) -> bool:
        a, b = self._key(other)
        if b is NotImplemented:
            return NotImplemented
        return a == b

    def __lt__(self, other: object) -> bool:
        a, b = self._key(other)
        if b is NotImplemented:
            return NotImplemented
        if a is None:
            return False
        return b is None or a < b

    def __le__(self, other: object) -> bool:
        return self == other or self < other

    def __gt__(self, other: object) -> bool:
        a, b = self._key(other)
        if b is NotImplemented:
            return NotImplemented
        if b is None:
            return False
        return a is None or a > b

    def __ge__(self, other: object) -> bool:
        return self == other or self > other

    def __hash__(self) -> int:
        return hash(self._value)

    def __str__(self) -> str:
        if self._value is None:
            return "inf"
        return str(self._value)

    def __repr__(self) -> str:
        return f"Toughness({str(self)!r})"


@dataclass(frozen=True)
class WitnessSet:
    """A cutset together with the quantities it certifies."""

    vertices: frozenset[int]
    cut_size: int
    component_count: int
    ratio: Fraction

    def revalidate(self, g: Graph) -> bool:
        """Recompute everything from the graph and check consistency."""
        full = (1 << g.n) - 1
        omega = _component_count(g._nbr, full, set_to_mask(self.vertices))
        return (
            self.cut_size == len(self.vertices)
            and self.component_count == omega
            and omega >= 2
            and self.ratio == Fraction(self.cut_size, omega)
        )

    def __str__(self) -> str:
        inner = ",".join(str(v) for v in sorted(self.vertices))
        return "{" + inner + "}"


def witness_for(g: Graph, vertices: Iterable[int]) -> WitnessSet:
    """Build the WitnessSet for an explicit cutset (errors if not a cutset)."""
    vs = frozenset(vertices)
    full = (1 << g.n) - 1
    omega = _component_count(g._nbr, full, set_to_mask(vs))
    if omega < 2:
        raise ValueError(f"{sorted(vs)} is not a cutset (leaves {omega} component(s))")
    return WitnessSet(vs, len(vs), omega, Fraction(len(vs), omega))


def toughness(g: Graph) -> tuple[Toughness, WitnessSet | None]:
    """Exact toughness with a minimizing cutset.

    Complete graphs give (inf, None).  Disconnected graphs give (0, witness
    with the empty set).  Otherwise the search runs over cutsets in
    increasing size, lexicographic within a size, keeping the first strict
    improvement, and stops once no remaining size can beat the incumbent;
    the witness is therefore the smallest minimizing cutset, ties broken by
    lexicographically least vertex tuple.
    """
    n = g.n
    if g.is_complete():
        return Toughness.infinite(), None
    nbr = g._nbr
    full = (1 << n) - 1
    omega0 = _component_count(nbr, full, 0)
    if omega0 >= 2:
        return Toughness.zero(), WitnessSet(frozenset(), 0, omega0, Fraction(0))
    best_num, best_den = n, 1  # ratio n/1 beats any real cutset ratio
    best_set: tuple[int, ...] = ()
    best_omega = 0
    for size in range(1, n - 1):
        # every cutset of this size has ratio >= size/(n - size)
        if size * best_den >= best_num * (n - size):
            break
        for combo in combinations(range(n), size):
            removed = 0
            for v in combo:
                removed |= 1 << v
            omega = _component_count(nbr, full, removed)
            if omega >= 2 and size * best_den < best_num * omega:
                best_num, best_den = size, omega
                best_set = combo
                best_omega = omega
    ratio = Fraction(best_num, best_den)
    return (
        Toughness.finite(ratio),
        WitnessSet(frozenset(best_set), len(best_set), best_omega, ratio),
    )


def naive_toughness_oracle(g: Graph) -> Toughness:
    """Unpruned reference computation: iterate every one of the 2^n subsets.

    Exists solely to cross-validate the pruned search; capped at n <= 16.
    """
    n = g.n
    if n > 16:
        raise ValueError("naive oracle capped at n <= 16")
    if g.is_complete():
        return Toughness.infinite()
    nbr = g._nbr
    full = (1 << n) - 1
    if _component_count(nbr, full, 0) >= 2:
        return Toughness.zero()
    best: Fraction | None = None
    for removed in range(1, full + 1):
        omega = _component_count(nbr, full, removed)
        if omega >= 2:
            ratio = Fraction(removed.bit_count(), omega)
            if best is None or ratio < best:
                best = ratio
    assert best is not None
    return Toughness.finite(best)


def is_t_tough(g: Graph, t: Fraction | int) -> tuple[bool, WitnessSet | None]:
    """Does every cutset S satisfy t * c(S) <= |S|?

    Complete graphs are t-tough for every t; disconnected graphs for none
    (witnessed by the empty set).  On a negative answer the returned witness
    maximizes c(S) * t - |S|, ties broken by smallest size then
    lexicographically least vertex tuple.
    """
    t = Fraction(t)
    if t <= 0:
        raise ValueError("t must be positive")
    n = g.n
    if g.is_complete():
        return True, None
    nbr = g._nbr
    full = (1 << n) - 1
    omega0 = _component_count(nbr, full, 0)
    if omega0 >= 2:
        return False, WitnessSet(frozenset(), 0, omega0, Fraction(0))
    p, q = t.numerator, t.denominator
    best_score = 0  # p*omega - q*size, positive = violation
    best: WitnessSet | None = None
    for size in range(1, n - 1):
        for combo in combinations(range(n), size):
            removed = 0
            for v in combo:
                removed |= 1 << v
            omega = _component_count(nbr, full, removed)
            if omega < 2:
                continue
            score = p * omega - q * size
            if score > best_score:
                best_score = score
                best = WitnessSet(
                    frozenset(combo), size, omega, Fraction(size, omega)
                )
    return (best is None), best


def clawfree_toughness(g: Graph, validate: bool = False) -> Toughness:
    """Toughness via the connectivity identity for claw-free graphs.

    For a connected noncomplete claw-free graph the toughness equals half
    the vertex connectivity.  The caller certifies claw-freeness;
    validate=True checks it and raises on a claw.
    """
    if validate:
        from .recognition import is_claw_free

        cert = is_claw_free(g)
        if not cert.verdict:
            raise ValueError(f"graph contains a claw: {cert.witness}")
    if g.is_complete():
        return Toughness.infinite()
    if not g.is_connected():
        return Toughness.zero()
    kappa = vertex_connectivity(g).value
    return Toughness.finite(Fraction(kappa, 2))


def validate_tough_set(
    g: Graph, s: WitnessSet | Iterable[int], t: Fraction | int
) -> tuple[bool, list[str]]:
    """Check the structure of a tough set of a claw-free graph.

    For a minimizing cutset of a connected noncomplete claw-free graph with
    toughness t, every cut vertex must see exactly two of the remaining
    components, and every component must see exactly 2t cut vertices (2t is
    an integer or t = 1/2, where "exactly one" applies).  Returns the
    verdict plus diagnostics for every failed condition.
    """
    t = Fraction(t)
    if t <= 0:
        raise ValueError("t must be positive")
    if isinstance(s, WitnessSet):
        vs = s.vertices
    else:
        vs = frozenset(s)
    full = (1 << g.n) - 1
    removed = set_to_mask(vs)
    comp_masks = _component_masks(g._nbr, full, removed)
    if len(comp_masks) < 2:
        raise ValueError(f"{sorted(vs)} is not a cutset")
    problems: list[str] = []
    ratio = Fraction(len(vs), len(comp_masks))
    if ratio != t:
        problems.append(f"|S|/components = {ratio}, not the stated toughness {t}")
    two_t = 2 * t
    if two_t.denominator != 1:
        problems.append(f"2t = {two_t} is not an integer")
        return False, problems
    for v in sorted(vs):
        touched = sum(1 for m in comp_masks if g._nbr[v] & m)
        if touched != 2:
            problems.append(f"vertex {v} has neighbors in {touched} components, not 2")
    for m in comp_masks:
        nbrs = set()
        for v in _mask_to_tuple(m):
            nbrs.update(_mask_to_tuple(g._nbr[v] & removed))
        if len(nbrs) != two_t:
            comp = sorted(_mask_to_tuple(m))
            problems.append(
                f"component {comp} has {len(nbrs)} neighbors in S, not {two_t}"
            )
    return not problems, problems
