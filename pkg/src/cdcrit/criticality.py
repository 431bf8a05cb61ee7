"""Criticality predicates and verifiers for the structural lemmas.

The predicates decide whether adding any missing edge (edge-critical) or
deleting any vertex (vertex-critical) strictly lowers the connected
domination number below a target k.  The verifiers re-check, exhaustively
over every optimum witness set, the structural facts that hold for such
graphs at k = 3; they return structured reports so that any violation ships
with the offending graph and witness sets attached.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .domination import all_gamma_c_sets, dominates, gamma_c, gamma_t
from .graph import (
    Graph,
    add_edge,
    delete_vertex,
    is_connected,
    iter_bits,
    non_edges,
    to_graph6,
)
from .invariants import is_independent_set, minimum_cut_sets, vertex_connectivity


@dataclass
class CriticalityReport:
    """Verdicts plus the optimum witness sets backing them.

    ``duv_witnesses`` maps each missing edge to every minimum connected
    dominating set of the graph with that edge added; ``dv_witnesses`` maps
    each vertex to the optimum sets of the graph with that vertex removed
    (relabeled back to the original graph).  Witnesses are only recorded
    while the criticality condition holds, so each has size below k.
    """

    k: int
    edge_critical: bool | None = None
    vertex_critical: bool | None = None
    maximal: bool | None = None
    duv_witnesses: dict[tuple[int, int], list[frozenset[int]]] = field(default_factory=dict)
    dv_witnesses: dict[int, list[frozenset[int]]] = field(default_factory=dict)
    failure_reason: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "edge_critical": self.edge_critical,
            "vertex_critical": self.vertex_critical,
            "maximal": self.maximal,
            "duv_witnesses": {
                f"{u},{v}": [sorted(s) for s in sets]
                for (u, v), sets in sorted(self.duv_witnesses.items())
            },
            "dv_witnesses": {
                str(v): [sorted(s) for s in sets]
                for v, sets in sorted(self.dv_witnesses.items())
            },
            "failure_reason": self.failure_reason,
        }


def _require_connected(g: Graph) -> None:
    if not is_connected(g) or g.n == 0:
        raise ValueError("criticality predicates need a connected graph")


def _unshift(s: frozenset[int], v: int) -> frozenset[int]:
    """Relabel a vertex set of g - v back into g's numbering."""
    return frozenset(w if w < v else w + 1 for w in s)


def _components_avoiding(g: Graph, removed_mask: int) -> list[frozenset[int]]:
    """Connected components of g minus the masked vertices."""
    remaining = g.vertex_mask & ~removed_mask
    comps = []
    while remaining:
        seed = remaining & -remaining
        seen = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= g.adj[v]
            frontier = grow & remaining & ~seen
            seen |= frontier
        comps.append(frozenset(iter_bits(seen)))
        remaining &= ~seen
    return comps


def is_k_gc_edge_critical(g: Graph, k: int) -> tuple[bool, CriticalityReport]:
    """Whether gamma_c(g) = k and every added edge drops it below k.

    Complete graphs have no missing edge and are vacuously edge-critical
    exactly when their connected domination number is k.
    """
    _require_connected(g)
    report = CriticalityReport(k=k)
    base = gamma_c(g).value
    if base != k:
        report.edge_critical = False
        report.failure_reason = f"connected domination number is {base}, not {k}"
        return False, report
    for u, v in non_edges(g):
        augmented = add_edge(g, u, v)
        sets = all_gamma_c_sets(augmented)
        if len(sets[0]) >= k:
            report.edge_critical = False
            report.failure_reason = (
                f"adding edge {u}-{v} leaves the value at {len(sets[0])}"
            )
            return False, report
        report.duv_witnesses[(u, v)] = sets
    report.edge_critical = True
    return True, report


def is_k_gc_vertex_critical(g: Graph, k: int) -> tuple[bool, CriticalityReport]:
    """Whether g is 2-connected with gamma_c(g) = k and every single-vertex
    deletion drops the value below k."""
    _require_connected(g)
    report = CriticalityReport(k=k)
    kappa, _ = vertex_connectivity(g)
    if kappa < 2:
        report.vertex_critical = False
        report.failure_reason = "graph is not 2-connected"
        return False, report
    base = gamma_c(g).value
    if base != k:
        report.vertex_critical = False
        report.failure_reason = f"connected domination number is {base}, not {k}"
        return False, report
    for v in range(g.n):
        reduced = delete_vertex(g, v)
        # 2-connectedness keeps every single-vertex deletion connected.
        assert is_connected(reduced)
        sets = all_gamma_c_sets(reduced)
        if len(sets[0]) >= k:
            report.vertex_critical = False
            report.failure_reason = (
                f"deleting vertex {v} leaves the value at {len(sets[0])}"
            )
            return False, report
        report.dv_witnesses[v] = [_unshift(s, v) for s in sets]
    report.vertex_critical = True
    return True, report


def is_maximal_k_gc_vertex_critical(g: Graph, k: int) -> tuple[bool, CriticalityReport]:
    """Conjunction of the edge and vertex criticality predicates."""
    edge_ok, edge_report = is_k_gc_edge_critical(g, k)
    vert_ok, vert_report = is_k_gc_vertex_critical(g, k)
    report = CriticalityReport(
        k=k,
        edge_critical=edge_ok,
        vertex_critical=vert_ok,
        maximal=edge_ok and vert_ok,
        duv_witnesses=edge_report.duv_witnesses,
        dv_witnesses=vert_report.dv_witnesses,
        failure_reason=edge_report.failure_reason or vert_report.failure_reason,
    )
    return report.maximal, report


def is_k_gt_edge_critical(g: Graph, k: int) -> bool:
    """Whether gamma_t(g) = k and every added edge drops it below k."""
    _require_connected(g)
    if any(row == 0 for row in g.adj):
        raise ValueError("total domination needs a graph without isolated vertices")
    if gamma_t(g).value != k:
        return False
    return all(gamma_t(add_edge(g, u, v)).value < k for u, v in non_edges(g))


# ----------------------------------------------------------------------------
# Lemma verifiers.  Violations are data: each report carries the graph6
# string of the graph plus human-readable detail for every failed item.
# ----------------------------------------------------------------------------


@dataclass
class LemmaReport:
    lemma: str
    graph6: str
    items_checked: int = 0
    violations: list[str] = field(default_factory=list)
    witness: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "graph6": self.graph6,
            "items_checked": self.items_checked,
            "violations": list(self.violations),
            "passed": self.passed,
            "witness": self.witness,
        }


def verify_duv_lemma(g: Graph) -> LemmaReport:
    """Check the shape of every optimum set after each single edge addition.

    For each missing edge uv, every minimum connected dominating set D of
    g + uv must have two vertices, meet {u, v}, and whenever it contains one
    endpoint only, avoid the other endpoint's original neighborhood.
    """
    ok, _ = is_k_gc_edge_critical(g, 3)
    if not ok:
        raise ValueError("graph is not edge-critical at value 3")
    report = LemmaReport(lemma="duv-structure", graph6=to_graph6(g))
    for u, v in non_edges(g):
        for d in all_gamma_c_sets(add_edge(g, u, v)):
            report.items_checked += 1
            label = f"non-edge {u}-{v}, set {sorted(d)}"
            if len(d) != 2:
                report.violations.append(f"{label}: size {len(d)} != 2")
            if not d & {u, v}:
                report.violations.append(f"{label}: misses both endpoints")
            for a, b in ((u, v), (v, u)):
                if a in d and b not in d and d & g.neighbors(b):
                    report.violations.append(
                        f"{label}: meets the original neighborhood of {b}"
                    )
    return report


def verify_dv_lemma(g: Graph) -> LemmaReport:
    """Check the shape of every optimum set after each vertex deletion.

    Every minimum connected dominating set of g - v must have two vertices
    and avoid the closed neighborhood of v; no vertex's closed (or open)
    neighborhood may sit inside another's closed neighborhood; and no two
    vertices may be forced to the identical single optimum set.
    """
    ok, _ = is_k_gc_vertex_critical(g, 3)
    if not ok:
        raise ValueError("graph is not vertex-critical at value 3")
    report = LemmaReport(lemma="dv-structure", graph6=to_graph6(g))
    families: dict[int, list[frozenset[int]]] = {}
    for v in range(g.n):
        sets = [_unshift(s, v) for s in all_gamma_c_sets(delete_vertex(g, v))]
        families[v] = sets
        closed_v = g.closed_neighbors(v)
        for d in sets:
            report.items_checked += 1
            label = f"vertex {v}, set {sorted(d)}"
            if len(d) != 2:
                report.violations.append(f"{label}: size {len(d)} != 2")
            if d & closed_v:
                report.violations.append(f"{label}: meets the closed neighborhood")
    for v in range(g.n):
        for u in range(g.n):
            if u == v:
                continue
            report.items_checked += 1
            if g.closed_neighbors(v) <= g.closed_neighbors(u):
                report.violations.append(
                    f"closed neighborhood of {v} inside closed neighborhood of {u}"
                )
            if g.neighbors(v) <= g.closed_neighbors(u):
                report.violations.append(
                    f"open neighborhood of {v} inside closed neighborhood of {u}"
                )
    for v in range(g.n):
        for u in range(v + 1, g.n):
            report.items_checked += 1
            if len(families[v]) == 1 and families[v] == families[u]:
                report.violations.append(
                    f"vertices {v} and {u} are forced to the same single optimum set"
                )
    report.witness["families"] = {
        str(v): [sorted(s) for s in sets] for v, sets in families.items()
    }
    return report


def verify_ordering_lemma(g: Graph, independent: frozenset[int] | set[int]) -> LemmaReport:
    """Search for the ordering/path witness over an independent set.

    Finds an ordering x_1..x_p of the given independent set and a path
    y_1..y_{p-1} outside it such that each pair {x_i, y_i} is a connected
    dominating set once x_{i+1} is removed.  Failure to find one would be a
    counterexample and is reported as a violation.
    """
    ok, _ = is_k_gc_edge_critical(g, 3)
    if not ok:
        raise ValueError("graph is not edge-critical at value 3")
    iset = frozenset(independent)
    p = len(iset)
    if p < 3:
        raise ValueError("ordering witness needs an independent set of size >= 3")
    if not is_independent_set(g, iset):
        raise ValueError("given vertex set is not independent")

    i_mask = 0
    for v in iset:
        i_mask |= 1 << v
    outside = [v for v in range(g.n) if not i_mask >> v & 1]
    full = g.vertex_mask
    closed = [g.adj[v] | 1 << v for v in range(g.n)]

    def pair_covers(x: int, y: int, removed: int) -> bool:
        # {x, y} must be adjacent and dominate everything except ``removed``.
        if not g.adj[x] >> y & 1:
            return False
        keep = full & ~(1 << removed)
        return (closed[x] | closed[y]) & keep == keep

    def extend(xs: list[int], ys: list[int]) -> tuple[list[int], list[int]] | None:
        if len(xs) == p:
            return xs, ys
        for nxt in sorted(iset - set(xs)):
            for y in outside:
                if y in ys:
                    continue
                if ys and not g.adj[ys[-1]] >> y & 1:
                    continue
                if pair_covers(xs[-1], y, nxt):
                    found = extend(xs + [nxt], ys + [y])
                    if found:
                        return found
        return None

    report = LemmaReport(lemma="independent-set-ordering", graph6=to_graph6(g))
    report.items_checked = 1
    for first in sorted(iset):
        result = extend([first], [])
        if result:
            xs, ys = result
            report.witness["ordering"] = xs
            report.witness["path"] = ys
            return report
    report.violations.append(
        f"no ordering/path witness exists for independent set {sorted(iset)}"
    )
    return report


def verify_cutset_lemmas(g: Graph) -> LemmaReport:
    """Check the minimum-cut-set facts on a maximal critical graph.

    For each minimum cut set S with components T_1..T_m: every qualifying
    vertex v (m >= 3, or v in S, or v in a non-singleton component) has all
    of its post-deletion optimum sets meeting S and does not dominate S;
    and every qualifying non-adjacent component pair a, b that fails to
    dominate g has all optimum sets of g + ab using exactly one endpoint
    and exactly one cut vertex.
    """
    ok, _ = is_maximal_k_gc_vertex_critical(g, 3)
    if not ok:
        raise ValueError("graph is not maximal vertex-critical at value 3")
    report = LemmaReport(lemma="cut-set-structure", graph6=to_graph6(g))
    for cut in minimum_cut_sets(g):
        cut_mask = 0
        for v in cut:
            cut_mask |= 1 << v
        comps = _components_avoiding(g, cut_mask)
        m = len(comps)

        for v in range(g.n):
            in_big_comp = any(v in c and len(c) > 1 for c in comps)
            if not (m >= 3 or v in cut or in_big_comp):
                continue
            label = f"cut {sorted(cut)}, vertex {v}"
            report.items_checked += 1
            if dominates(g, {v}, cut):
                report.violations.append(f"{label}: dominates the cut set")
            for d in all_gamma_c_sets(delete_vertex(g, v)):
                if not _unshift(d, v) & cut:
                    report.violations.append(
                        f"{label}: optimum set {sorted(_unshift(d, v))} avoids the cut"
                    )

        for i in range(m):
            for j in range(i, m):
                qualifies = m >= 3 or (len(comps[i]) > 1 and len(comps[j]) > 1)
                if not qualifies:
                    continue
                for a in sorted(comps[i]):
                    for b in sorted(comps[j]):
                        if i == j and a >= b:
                            continue
                        if g.has_edge(a, b):
                            continue
                        if dominates(g, {a, b}, range(g.n)):
                            continue
                        label = f"cut {sorted(cut)}, pair {a}-{b}"
                        report.items_checked += 1
                        for d in all_gamma_c_sets(add_edge(g, a, b)):
                            if len(d & {a, b}) != 1:
                                report.violations.append(
                                    f"{label}: set {sorted(d)} uses both or no endpoints"
                                )
                            if len(d & cut) != 1:
                                report.violations.append(
                                    f"{label}: set {sorted(d)} meets the cut "
                                    f"{len(d & cut)} times"
                                )
    return report
