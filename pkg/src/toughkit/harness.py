"""Sweep graph corpora and check the structural facts about minimally tough
graphs, emitting deterministic machine-readable reports.

A source is either an enumeration of all small connected graphs or a
stream of graph6 lines.  Every graph is classified once (exact toughness,
minimal toughness, class memberships) and each requested suite evaluates
its predicate against the classification with exact arithmetic.  Reports
are byte-stable: records are sorted canonically and elapsed time is kept
out of the payload.

Suites (all checked with exact rational arithmetic):

* ``T4``   no minimally t-tough chordal graph has 1/2 < t <= 1
* ``T7``   minimally t-tough chordal, t <= 1/2: simplicial vertices have degree 1
* ``T8``   no minimally t-tough split graph has t > 1/2
* ``T11``  minimally tough split graphs match the star/double-star/triangle shapes
* ``T12``  connected noncomplete claw-free: twice the toughness equals connectivity
* ``T16``  minimally 1-tough claw-free graphs are exactly the cycles >= 4
* ``T17``  minimally 1/2-tough claw-free graphs match the triangle-from-tree family
* ``C18``  2K2-free: no cutset leaves two components of size >= 2
* ``L19``  minimally tough 2K2-free: witnesses exist inside edge neighborhoods
* ``L14``  minimally 1/2-tough claw-free: witnesses of size <= 1
* ``C1``   minimally tough: every edge has a validating deletion witness
* ``T20``  2K2-free: split expansion preserves the toughness of g - e
* ``KRIESELL`` report-only: minimally t-tough graphs have min degree ceil(2t)
* ``DEG1`` minimally 1/2-tough claw-free graphs have a vertex of degree 1
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, NamedTuple

from .enumeration import enumerate_connected_graphs
from .families import (
    recognize_clawfree_half,
    recognize_split_min_tough,
    split_expand,
)
from .graph6 import Graph6Error, encode_graph6, parse_graph6
from .graphs import Graph, _component_masks, bridges, simplicial_vertices, vertex_connectivity
from .mintough import (
    _tau_drops,
    clawfree_half_witness,
    edge_deletion_witness,
    twok2_neighborhood_witness,
)
from .recognition import (
    _chordal_verdict,
    _clawfree_verdict,
    _split_verdict,
    _twok2_verdict,
    is_split,
)
from .toughness import Toughness, toughness

HALF = Fraction(1, 2)
ONE = Fraction(1)


# -- sources -------------------------------------------------------------------


class EnumerationSource:
    """All connected graphs with n in the given range.

    mode="auto" enumerates labeled graphs for n <= 6 and one representative
    per isomorphism class for larger n; "labeled"/"dedup" force one mode.
    Both modes must produce identical suite verdicts.
    """

    def __init__(self, ns: Iterable[int], mode: str = "auto"):
        self.ns = sorted(set(ns))
        if mode not in ("auto", "labeled", "dedup"):
            raise ValueError(f"unknown enumeration mode {mode!r}")
        self.mode = mode

    @property
    def description(self) -> str:
        lo, hi = self.ns[0], self.ns[-1]
        span = f"n={lo}..{hi}" if lo != hi else f"n={lo}"
        return f"enumeration {span} mode={self.mode}"

    def __iter__(self) -> Iterator[tuple[Graph | None, str | None]]:
        for n in self.ns:
            dedup = n > 6 if self.mode == "auto" else self.mode == "dedup"
            for g in enumerate_connected_graphs(n, dedup=dedup):
                yield g, None


class Graph6Source:
    """A stream of graph6 lines; malformed lines are reported, not fatal."""

    def __init__(self, lines: Iterable[str], description: str = "graph6 stream"):
        self.lines = lines
        self.description = description

    def __iter__(self) -> Iterator[tuple[Graph | None, str | None]]:
        for i, line in enumerate(self.lines, start=1):
            if not line.strip():
                continue
            try:
                yield parse_graph6(line), None
            except Graph6Error as exc:
                yield None, f"line {i}: {exc}"


# -- per-graph classification -----------------------------------------------------


class _Record(NamedTuple):
    g: Graph
    connected: bool
    tau: Toughness
    t: Fraction | None  # minimal toughness value, None if not minimally tough
    chordal: bool
    split: bool
    clawfree: bool
    twok2: bool

    @property
    def g6(self) -> str:
        return encode_graph6(self.g)


def classify(g: Graph) -> _Record:
    """One-pass classification shared by every suite."""
    connected = g.is_connected()
    tau, _ = toughness(g)
    t: Fraction | None = None
    if tau.is_finite:
        tv = tau.value
        bridge_set = bridges(g)
        if all(_tau_drops(g, u, v, tv, bridge_set) for u, v in g.edges()):
            t = tv
    return _Record(
        g,
        connected,
        tau,
        t,
        _chordal_verdict(g),
        _split_verdict(g),
        _clawfree_verdict(g),
        _twok2_verdict(g),
    )


# -- report --------------------------------------------------------------------


@dataclass
class VerificationReport:
    suite: str
    source: str
    scanned: int = 0
    malformed: list[str] = field(default_factory=list)
    instances: list[tuple[str, str]] = field(default_factory=list)
    violations: list[tuple[str, str]] = field(default_factory=list)
    elapsed: float = 0.0
    report_only: bool = False

    @property
    def verdict(self) -> str:
        if self.report_only:
            return "report-only"
        return "pass" if not self.violations else "fail"

    def to_text(self) -> str:
        """Stable line-delimited rendering; elapsed time is deliberately
        excluded so identical runs are byte-identical."""
        lines = [f"suite {self.suite}", f"source {self.source}"]
        lines += [f"malformed {m}" for m in self.malformed]
        lines += [f"instance {g6} {d}".rstrip() for g6, d in self.instances]
        lines += [f"violation {g6} {d}".rstrip() for g6, d in self.violations]
        lines += [
            f"scanned {self.scanned}",
            f"malformed-lines {len(self.malformed)}",
            f"instances {len(self.instances)}",
            f"violations {len(self.violations)}",
            f"verdict {self.verdict}",
        ]
        return "\n".join(lines) + "\n"


def _sort_records(rows: list[tuple[str, str]]) -> list[tuple[str, str]]:
    return sorted(set(rows), key=lambda r: (len(r[0]), r))


# -- suite predicates ------------------------------------------------------------
# Each returns (instances, violations) as lists of detail strings.


def _suite_t4(rec: _Record) -> tuple[list[str], list[str]]:
    if rec.chordal and rec.t is not None and HALF < rec.t <= ONE:
        return [f"t={rec.t}"], [f"t={rec.t} minimally-tough-chordal-in-(1/2,1]"]
    return [], []


def _suite_t7(rec: _Record) -> tuple[list[str], list[str]]:
    if not (rec.chordal and rec.t is not None and rec.t <= HALF):
        return [], []
    bad = [v for v in simplicial_vertices(rec.g) if rec.g.degree(v) != 1]
    if bad:
        return [f"t={rec.t}"], [
            f"t={rec.t} simplicial={v} degree={rec.g.degree(v)}" for v in sorted(bad)
        ]
    return [f"t={rec.t}"], []


def _suite_t8(rec: _Record) -> tuple[list[str], list[str]]:
    if rec.split and rec.t is not None and rec.t > HALF:
        return [f"t={rec.t}"], [f"t={rec.t} minimally-tough-split-above-1/2"]
    return [], []


def _suite_t11(rec: _Record) -> tuple[list[str], list[str]]:
    if not rec.split:
        return [], []
    recognized = recognize_split_min_tough(rec.g)
    if recognized == rec.t:
        return ([f"t={rec.t}"], []) if rec.t is not None else ([], [])
    return [], [f"minimal={_frac(rec.t)} recognized={_frac(recognized)}"]


def _suite_t12(rec: _Record) -> tuple[list[str], list[str]]:
    if not (rec.clawfree and rec.connected and not rec.g.is_complete()):
        return [], []
    kappa = vertex_connectivity(rec.g).value
    if 2 * rec.tau.value != kappa:
        return [], [f"tau={rec.tau} kappa={kappa}"]
    return [], []


def _is_long_cycle(g: Graph) -> bool:
    return g.n >= 4 and g.is_connected() and all(g.degree(v) == 2 for v in range(g.n))


def _suite_t16(rec: _Record) -> tuple[list[str], list[str]]:
    if not (rec.clawfree and rec.connected):
        return [], []
    minimal_one = rec.t == ONE
    cycle = _is_long_cycle(rec.g)
    if minimal_one != cycle:
        return [], [f"minimal-1-tough={minimal_one} cycle>=4={cycle}"]
    return ([f"t=1"], []) if minimal_one else ([], [])


def _suite_t17(rec: _Record) -> tuple[list[str], list[str]]:
    if not (rec.clawfree and rec.connected):
        return [], []
    minimal_half = rec.t == HALF
    accepted, _ = recognize_clawfree_half(rec.g)
    if minimal_half != accepted:
        return [], [f"minimal-1/2-tough={minimal_half} recognized={accepted}"]
    return ([f"t=1/2"], []) if minimal_half else ([], [])


def _suite_c18(rec: _Record) -> tuple[list[str], list[str]]:
    if not rec.twok2:
        return [], []
    g = rec.g
    full = (1 << g.n) - 1
    violations = []
    for removed in range(1, full):
        comps = _component_masks(g._nbr, full, removed)
        if len(comps) < 2:
            continue
        big = sum(1 for m in comps if m.bit_count() >= 2)
        if big > 1:
            cut = [v for v in range(g.n) if removed >> v & 1]
            violations.append(f"cutset={_setstr(cut)} big-components={big}")
    return [], violations


def _suite_l19(rec: _Record) -> tuple[list[str], list[str]]:
    if not (rec.twok2 and rec.t is not None):
        return [], []
    g = rec.g
    bridge_set = bridges(g)
    violations = []
    for e in g.edges():
        if e in bridge_set:
            continue
        try:
            w = twok2_neighborhood_witness(g, rec.t, e)
        except RuntimeError as exc:
            violations.append(f"edge={e[0]}-{e[1]} {exc}")
            continue
        if not w.holds(g, rec.t):
            violations.append(f"edge={e[0]}-{e[1]} witness-invalid")
    return [f"t={rec.t}"], violations


def _suite_l14(rec: _Record) -> tuple[list[str], list[str]]:
    if not (rec.clawfree and rec.t == HALF):
        return [], []
    g = rec.g
    violations = []
    for e in g.edges():
        try:
            w = clawfree_half_witness(g, e)
        except RuntimeError as exc:
            violations.append(f"edge={e[0]}-{e[1]} {exc}")
            continue
        if len(w.vertices) > 1 or not w.holds(g, HALF):
            violations.append(f"edge={e[0]}-{e[1]} size={len(w.vertices)}")
    return [f"t=1/2"], violations


def _suite_c1(rec: _Record) -> tuple[list[str], list[str]]:
    if rec.t is None:
        return [], []
    g = rec.g
    violations = []
    for e in g.edges():
        try:
            w = edge_deletion_witness(g, rec.t, e)
        except RuntimeError as exc:
            violations.append(f"edge={e[0]}-{e[1]} {exc}")
            continue
        if not w.holds(g, rec.t):
            violations.append(f"edge={e[0]}-{e[1]} witness-invalid")
    return [f"t={rec.t}"], violations


def _suite_t20(rec: _Record) -> tuple[list[str], list[str]]:
    if not (rec.twok2 and rec.connected):
        return [], []
    g = rec.g
    bridge_set = bridges(g)
    violations = []
    for e in g.edges():
        if e in bridge_set:
            continue
        expanded = split_expand(g, e)
        tau_minus = toughness(g.delete_edge(*e))[0]
        tau_exp = toughness(expanded)[0]
        if tau_exp != tau_minus:
            violations.append(
                f"edge={e[0]}-{e[1]} tau-expanded={tau_exp} tau-deleted={tau_minus}"
            )
        if not is_split(expanded).verdict:
            violations.append(f"edge={e[0]}-{e[1]} expansion-not-split")
    return [], violations


def _suite_kriesell(rec: _Record) -> tuple[list[str], list[str]]:
    if rec.t is None:
        return [], []
    need = math.ceil(2 * rec.t)
    mindeg = rec.g.min_degree()
    detail = f"t={rec.t} mindeg={mindeg} ceil2t={need}"
    if mindeg != need:
        return [detail], [detail + " counterexample"]
    return [detail], []


def _suite_deg1(rec: _Record) -> tuple[list[str], list[str]]:
    if not (rec.clawfree and rec.t == HALF):
        return [], []
    mindeg = rec.g.min_degree()
    if mindeg != 1:
        return [], [f"mindeg={mindeg}"]
    return [f"mindeg=1"], []


SUITES: dict[str, Callable[[_Record], tuple[list[str], list[str]]]] = {
    "T4": _suite_t4,
    "T7": _suite_t7,
    "T8": _suite_t8,
    "T11": _suite_t11,
    "T12": _suite_t12,
    "T16": _suite_t16,
    "T17": _suite_t17,
    "C18": _suite_c18,
    "L19": _suite_l19,
    "L14": _suite_l14,
    "C1": _suite_c1,
    "T20": _suite_t20,
    "KRIESELL": _suite_kriesell,
    "DEG1": _suite_deg1,
}

REPORT_ONLY_SUITES = frozenset({"KRIESELL"})


def _frac(x: Fraction | None) -> str:
    return "none" if x is None else str(x)


def _setstr(vs: Iterable[int]) -> str:
    return "{" + ",".join(str(v) for v in sorted(vs)) + "}"


# -- runners -------------------------------------------------------------------


def run_suites(
    suite_ids: Iterable[str],
    source: EnumerationSource | Graph6Source,
) -> list[VerificationReport]:
    """Classify the source once and evaluate every requested suite on it."""
    ids = list(suite_ids)
    for sid in ids:
        if sid not in SUITES:
            raise ValueError(f"unknown suite {sid!r}")
    reports = {
        sid: VerificationReport(
            sid, source.description, report_only=sid in REPORT_ONLY_SUITES
        )
        for sid in ids
    }
    start = time.monotonic()
    scanned = 0
    for g, err in source:
        if g is None:
            for rep in reports.values():
                rep.malformed.append(err or "malformed line")
            continue
        scanned += 1
        rec = classify(g)
        g6 = None
        for sid in ids:
            inst, viol = SUITES[sid](rec)
            if inst or viol:
                if g6 is None:
                    g6 = rec.g6
                rep = reports[sid]
                rep.instances += [(g6, d) for d in inst]
                rep.violations += [(g6, d) for d in viol]
    elapsed = time.monotonic() - start
    out = []
    for sid in ids:
        rep = reports[sid]
        rep.scanned = scanned
        rep.instances = _sort_records(rep.instances)
        rep.violations = _sort_records(rep.violations)
        rep.elapsed = elapsed
        out.append(rep)
    return out


def run_suite(
    suite: str, source: EnumerationSource | Graph6Source
) -> VerificationReport:
    """Run one suite over a source."""
    return run_suites([suite], source)[0]


class ScanRow(NamedTuple):
    g6: str
    t: Fraction
    classes: tuple[str, ...]
    min_degree: int
    ceil_2t: int

    def to_line(self) -> str:
        cls = ",".join(self.classes) if self.classes else "-"
        return (
            f"{self.g6} t={self.t} classes={cls} "
            f"mindeg={self.min_degree} ceil2t={self.ceil_2t}"
        )


def scan_minimally_tough(
    source: EnumerationSource | Graph6Source,
) -> tuple[list[ScanRow], list[str]]:
    """Every minimally tough graph in the source, with class flags and the
    min-degree comparison.  Returns (rows, malformed line reports)."""
    rows = []
    malformed = []
    for g, err in source:
        if g is None:
            malformed.append(err or "malformed line")
            continue
        rec = classify(g)
        if rec.t is None:
            continue
        classes = []
        if rec.chordal:
            classes.append("chordal")
        if rec.split:
            classes.append("split")
        if rec.clawfree:
            classes.append("claw-free")
        if rec.twok2:
            classes.append("2k2-free")
        rows.append(
            ScanRow(
                rec.g6,
                rec.t,
                tuple(classes),
                rec.g.min_degree(),
                math.ceil(2 * rec.t),
            )
        )
    rows.sort(key=lambda r: (len(r.g6), r.g6))
    return rows, malformed
