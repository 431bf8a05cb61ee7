"""Suites that machine-check the main inequalities over graph streams.

Every suite consumes per-graph profiles (invariants plus criticality
verdicts at value 3), applies its hypothesis filter, and records one entry
per examined graph.  Violations are data rather than exceptions: a failing
proved statement means an implementation bug somewhere, and the offending
graph ships in the report as a graph6 string.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Union

from .criticality import (
    _components_avoiding,
    is_k_gt_edge_critical,
    is_maximal_k_gc_vertex_critical,
)
from .generators import are_isomorphic, cycle, gen_g1, is_in_class_g1
from .graph import Graph, is_connected, to_graph6
from .hamiltonicity import MAX_DP_VERTICES, is_hamiltonian_connected
from .invariants import (
    InvariantRecord,
    clique_number,
    compute_invariants,
    independence_number,
    is_clique,
    minimum_cut_sets,
)

MAX_CUT_ENUM_VERTICES = 16


@dataclass(frozen=True)
class GraphProfile:
    """One graph with everything the suites ask about, computed once."""

    graph: Graph
    graph6: str
    record: InvariantRecord
    edge_critical: bool
    vertex_critical: bool
    maximal: bool
    gt_edge_critical: bool


def profile_graph(g: Graph) -> GraphProfile:
    record = compute_invariants(g)
    if is_connected(g):
        _, crit = is_maximal_k_gc_vertex_critical(g, 3)
        gt_critical = g.n >= 2 and is_k_gt_edge_critical(g, 3)
        edge_ok = bool(crit.edge_critical)
        vertex_ok = bool(crit.vertex_critical)
    else:
        edge_ok = vertex_ok = gt_critical = False
    return GraphProfile(
        graph=g,
        graph6=to_graph6(g),
        record=record,
        edge_critical=edge_ok,
        vertex_critical=vertex_ok,
        maximal=edge_ok and vertex_ok,
        gt_edge_critical=gt_critical,
    )


def worker_count() -> int:
    """Worker count for stream processing; CDCRIT_THREADS overrides."""
    env = os.environ.get("CDCRIT_THREADS")
    if env is not None:
        count = int(env)
        if count < 1:
            raise ValueError("CDCRIT_THREADS must be a positive integer")
        return count
    return os.cpu_count() or 1


StreamItem = Union[Graph, GraphProfile]


def profile_stream(stream: Iterable[StreamItem], workers: int | None = None) -> list[GraphProfile]:
    """Profile every stream member, fanning out across processes if asked."""
    items = list(stream)
    raw = [(i, item) for i, item in enumerate(items) if isinstance(item, Graph)]
    profiles: list[GraphProfile | None] = [
        item if isinstance(item, GraphProfile) else None for item in items
    ]
    if raw:
        workers = worker_count() if workers is None else workers
        graphs = [item for _, item in raw]
        if workers > 1 and len(raw) > 8:
            chunk = max(1, len(raw) // (workers * 4))
            with ProcessPoolExecutor(max_workers=workers) as pool:
                computed = list(pool.map(profile_graph, graphs, chunksize=chunk))
        else:
            computed = [profile_graph(g) for g in graphs]
        for (i, _), prof in zip(raw, computed):
            profiles[i] = prof
    return [p for p in profiles if p is not None]


# ----------------------------------------------------------------------------
# Reports
# ----------------------------------------------------------------------------


@dataclass
class TheoremReport:
    """Outcome of one suite over one stream.

    ``violations`` empty means the statement held on every examined graph.
    ``entries`` holds one record per examined graph (ok True/False, or None
    when a capacity cap forced a skip), sorted by graph6 so the report is
    byte-identical however the stream was scheduled.
    """

    theorem_id: str
    graphs_checked: int = 0
    violations: list[tuple[str, str]] = field(default_factory=list)
    equality_cases: list[tuple[str, str]] = field(default_factory=list)
    entries: list[dict] = field(default_factory=list)

    def record(self, graph6: str, ok: bool | None, detail: str | None = None) -> None:
        self.entries.append({"graph6": graph6, "ok": ok, "detail": detail})
        if ok is not None:
            self.graphs_checked += 1
        if ok is False:
            self.violations.append((graph6, detail or "violated"))

    def record_equality(self, graph6: str, verdict: str) -> None:
        self.equality_cases.append((graph6, verdict))

    def finalize(self) -> "TheoremReport":
        self.entries.sort(key=lambda e: (e["graph6"], e["detail"] or ""))
        self.violations.sort()
        self.equality_cases.sort()
        return self

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary_dict(self) -> dict:
        return {
            "suite": self.theorem_id,
            "summary": True,
            "graphs_checked": self.graphs_checked,
            "violations": len(self.violations),
            "equality_cases": len(self.equality_cases),
            "passed": self.passed,
        }

    def to_json_dicts(self) -> list[dict]:
        lines = [dict(entry, suite=self.theorem_id) for entry in self.entries]
        lines.append(self.summary_dict())
        return lines


# ----------------------------------------------------------------------------
# The individual suites
# ----------------------------------------------------------------------------


def _floor_ceil_bound(n: int) -> int:
    return ((n - 1) // 2) * (n // 2)


def _check_g1_membership(p: GraphProfile, report: TheoremReport, context: str) -> bool:
    member, l = is_in_class_g1(p.graph)
    verdict = f"in matched-family(l={l})" if member else "NOT in matched family"
    report.record_equality(p.graph6, f"{context}: {verdict}")
    return member


def _suite_t33(profiles: list[GraphProfile], report: TheoremReport) -> None:
    for p in profiles:
        if not p.maximal:
            continue
        r = p.record
        ok = r.alpha <= r.delta
        report.record(p.graph6, ok, None if ok else f"alpha {r.alpha} > delta {r.delta}")


def _suite_t35(profiles: list[GraphProfile], report: TheoremReport) -> None:
    for p in profiles:
        if not p.maximal:
            continue
        r = p.record
        total = r.alpha + r.omega
        if total > r.n - 1:
            report.record(p.graph6, False, f"alpha+omega {total} > n-1 {r.n - 1}")
            continue
        if total == r.n - 1:
            member = _check_g1_membership(p, report, "alpha+omega=n-1")
            report.record(
                p.graph6, member, None if member else "equality case outside the family"
            )
        else:
            report.record(p.graph6, True)
    # The construction side: every matched-family graph must attain equality.
    for l in range(2, 7):
        g = gen_g1(l)
        g6 = to_graph6(g)
        alpha, _ = independence_number(g)
        omega, _ = clique_number(g)
        member, found_l = is_in_class_g1(g)
        ok = alpha + omega == g.n - 1 and member and found_l == l
        report.record(
            g6,
            ok,
            None if ok else f"construction l={l}: alpha={alpha} omega={omega} member={member}",
        )
        report.record_equality(g6, f"construction l={l}: equality attained={ok}")


def _suite_c36(profiles: list[GraphProfile], report: TheoremReport) -> None:
    for p in profiles:
        if not p.maximal:
            continue
        r = p.record
        bound = _floor_ceil_bound(r.n)
        product = r.alpha * r.omega
        if product > bound:
            report.record(p.graph6, False, f"alpha*omega {product} > bound {bound}")
            continue
        if r.n % 2 == 1 and product == ((r.n - 1) // 2) ** 2:
            member = _check_g1_membership(p, report, "alpha*omega at square bound")
            report.record(
                p.graph6, member, None if member else "equality case outside the family"
            )
        else:
            report.record(p.graph6, True)


def _suite_c37(profiles: list[GraphProfile], report: TheoremReport) -> None:
    five_cycle = cycle(5)
    for p in profiles:
        if not p.maximal:
            continue
        r = p.record
        if r.omega > r.n - 3:
            report.record(p.graph6, False, f"omega {r.omega} > n-3 {r.n - 3}")
            continue
        if r.omega == r.n - 3:
            is_c5 = r.n == 5 and are_isomorphic(p.graph, five_cycle)
            report.record_equality(
                p.graph6, f"omega=n-3: {'is' if is_c5 else 'is NOT'} the 5-cycle"
            )
            report.record(p.graph6, is_c5, None if is_c5 else "equality case is not the 5-cycle")
        else:
            report.record(p.graph6, True)


def _suite_t41(profiles: list[GraphProfile], report: TheoremReport) -> None:
    for p in profiles:
        if not p.maximal:
            continue
        r = p.record
        ok = r.alpha <= r.kappa
        report.record(p.graph6, ok, None if ok else f"alpha {r.alpha} > kappa {r.kappa}")


def _suite_t47(profiles: list[GraphProfile], report: TheoremReport) -> None:
    for p in profiles:
        if not p.maximal or p.record.alpha != p.record.kappa:
            continue
        if p.graph.n > MAX_CUT_ENUM_VERTICES:
            report.record(p.graph6, None, "skipped: beyond cut-set enumeration capacity")
            continue
        bad = None
        for cut in minimum_cut_sets(p.graph):
            mask = 0
            for v in cut:
                mask |= 1 << v
            if not any(len(c) == 1 for c in _components_avoiding(p.graph, mask)):
                bad = cut
                break
        ok = bad is None
        report.record(
            p.graph6, ok, None if ok else f"cut {sorted(bad)} leaves no singleton component"
        )


def _suite_c48(profiles: list[GraphProfile], report: TheoremReport) -> None:
    for p in profiles:
        if not p.maximal or p.record.alpha != p.record.kappa:
            continue
        r = p.record
        ok = r.kappa == r.delta
        report.record(p.graph6, ok, None if ok else f"kappa {r.kappa} != delta {r.delta}")


def _suite_c410(profiles: list[GraphProfile], report: TheoremReport) -> None:
    for p in profiles:
        if not p.maximal or not p.record.kappa < p.record.delta:
            continue
        if p.graph.n > MAX_DP_VERTICES:
            report.record(p.graph6, None, "skipped: beyond Hamiltonian search capacity")
            continue
        ok, pair = is_hamiltonian_connected(p.graph)
        report.record(
            p.graph6, ok, None if ok else f"no spanning path between pair {pair}"
        )


def _suite_obs213(profiles: list[GraphProfile], report: TheoremReport) -> None:
    for p in profiles:
        if not p.maximal:
            continue
        r = p.record
        if not (r.kappa <= 3 or r.n <= 8):
            continue
        bound = _floor_ceil_bound(r.n)
        problems = []
        if r.alpha > r.delta:
            problems.append(f"alpha {r.alpha} > delta {r.delta}")
        if r.alpha + r.omega > r.n - 1:
            problems.append(f"alpha+omega {r.alpha + r.omega} > n-1 {r.n - 1}")
        if r.alpha * r.omega > bound:
            problems.append(f"alpha*omega {r.alpha * r.omega} > bound {bound}")
        if not problems and (
            r.alpha + r.omega == r.n - 1 or r.alpha * r.omega == bound
        ):
            if not _check_g1_membership(p, report, "at an equality bound"):
                problems.append("equality case outside the family")
        report.record(p.graph6, not problems, "; ".join(problems) or None)


def _suite_eqv_gt(profiles: list[GraphProfile], report: TheoremReport) -> None:
    for p in profiles:
        if not is_connected(p.graph):
            continue
        ok = p.edge_critical == p.gt_edge_critical
        report.record(
            p.graph6,
            ok,
            None
            if ok
            else f"edge-critical {p.edge_critical} but total-domination "
            f"edge-critical {p.gt_edge_critical}",
        )


def _suite_t24(profiles: list[GraphProfile], report: TheoremReport) -> None:
    for p in profiles:
        if not p.gt_edge_critical:
            continue
        r = p.record
        ok = r.alpha <= r.delta + 2
        report.record(p.graph6, ok, None if ok else f"alpha {r.alpha} > delta+2 {r.delta + 2}")


def _suite_l25(profiles: list[GraphProfile], report: TheoremReport) -> None:
    for p in profiles:
        r = p.record
        if not (p.edge_critical and r.delta >= 2 and r.alpha == r.delta + 2):
            continue
        g = p.graph
        low = [v for v in range(g.n) if g.degree(v) == r.delta]
        problems = []
        if len(low) != 1:
            problems.append(f"{len(low)} vertices of minimum degree, expected 1")
        for x in low:
            if not is_clique(g, g.closed_neighbors(x)):
                problems.append(f"closed neighborhood of {x} is not a clique")
        report.record(p.graph6, not problems, "; ".join(problems) or None)


_SUITES = {
    "T3.3": _suite_t33,
    "T3.5": _suite_t35,
    "C3.6": _suite_c36,
    "C3.7": _suite_c37,
    "T4.1": _suite_t41,
    "T4.7": _suite_t47,
    "C4.8": _suite_c48,
    "C4.10": _suite_c410,
    "OBS2.13": _suite_obs213,
    "EQV-GT": _suite_eqv_gt,
    "T2.4": _suite_t24,
    "L2.5": _suite_l25,
}

THEOREM_IDS = tuple(_SUITES)


def check_theorem(
    stream: Iterable[StreamItem], theorem_id: str, workers: int | None = None
) -> TheoremReport:
    """Run one suite over the stream and report violations as data."""
    if theorem_id not in _SUITES:
        raise ValueError(f"unknown suite {theorem_id!r}; choose from {THEOREM_IDS}")
    profiles = profile_stream(stream, workers=workers)
    report = TheoremReport(theorem_id=theorem_id)
    _SUITES[theorem_id](profiles, report)
    return report.finalize()


def find_critical(stream: Iterable[StreamItem], k: int) -> list[Graph]:
    """Stream members that are both edge- and vertex-critical at k."""
    found = []
    for item in stream:
        if isinstance(item, GraphProfile):
            if k == 3:
                if item.maximal:
                    found.append(item.graph)
                continue
            item = item.graph
        if not is_connected(item) or item.n == 0:
            continue
        ok, _ = is_maximal_k_gc_vertex_critical(item, k)
        if ok:
            found.append(item)
    return sorted(found, key=to_graph6)


def explore_conjecture(stream: Iterable[StreamItem], workers: int | None = None) -> TheoremReport:
    """Check that critical graphs with alpha = kappa = delta admit spanning
    paths between all vertex pairs (the 5-cycle being the lone exception).

    Any inconsistency here is an open research finding, not a test failure;
    callers must treat violations as reportable data.
    """
    profiles = profile_stream(stream, workers=workers)
    report = TheoremReport(theorem_id="CONJ")
    five_cycle = cycle(5)
    for p in profiles:
        r = p.record
        if not (p.maximal and r.alpha == r.kappa == r.delta):
            continue
        if r.n == 5 and are_isomorphic(p.graph, five_cycle):
            report.record(p.graph6, True, "the 5-cycle branch")
            continue
        if p.graph.n > MAX_DP_VERTICES:
            report.record(p.graph6, None, "skipped: beyond Hamiltonian search capacity")
            continue
        ok, pair = is_hamiltonian_connected(p.graph)
        report.record(
            p.graph6,
            ok,
            "spanning paths between all pairs" if ok else f"finding: no spanning path for {pair}",
        )
    return report.finalize()
