"""Exact independence number, clique number, and vertex connectivity.

The clique solver is a greedy-coloring-bounded branch and bound over bitsets;
connectivity follows Menger via unit-capacity max flow on the vertex-split
digraph.  All witnesses are tie-broken to the lexicographically smallest
optimal set so outputs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import CapacityError
from .graph import Graph, complement, is_connected, iter_bits, min_degree

# Above this many candidate subsets the cut witness falls back to the
# (deterministic) flow-derived cut instead of a lexicographic scan.
_CUT_SCAN_LIMIT = 2_000_000


def is_independent_set(g: Graph, s: frozenset[int] | set[int]) -> bool:
    """Literal pairwise check that no two members of ``s`` are adjacent."""
    members = list(s)
    for v in members:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for n={g.n}")
    return all(not g.adj[u] >> v & 1 for u, v in combinations(members, 2))


def is_clique(g: Graph, s: frozenset[int] | set[int]) -> bool:
    """Literal pairwise check that all members of ``s`` are adjacent."""
    members = list(s)
    for v in members:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for n={g.n}")
    return all(bool(g.adj[u] >> v & 1) for u, v in combinations(members, 2))


# ----------------------------------------------------------------------------
# Maximum clique by branch and bound with a greedy-coloring upper bound.
# ----------------------------------------------------------------------------


def _color_order(adj: tuple[int, ...], cand: int) -> list[tuple[int, int]]:
    """Greedy-color ``cand``; returns (vertex, color) with colors ascending."""
    order = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            order.append((v, color))
            rest ^= low
            avail = (avail ^ low) & ~adj[v]
    return order


def _expand(adj: tuple[int, ...], cand: int, size: int, best: int, stop_at: int) -> int:
    """Tomita-style expansion; returns the best clique size found.

    Search halts early once ``stop_at`` is reached (pass n+1 to disable).
    """
    order = _color_order(adj, cand)
    for v, color in reversed(order):
        if size + color <= best:
            return best
        bit = 1 << v
        sub = cand & adj[v]
        if sub:
            best = _expand(adj, sub, size + 1, best, stop_at)
        elif size + 1 > best:
            best = size + 1
        if best >= stop_at:
            return best
        cand ^= bit
    return best


def _max_clique_size(adj: tuple[int, ...], cand: int, stop_at: int) -> int:
    if not cand:
        return 0
    return _expand(adj, cand, 0, 0, stop_at)


def _has_clique(adj: tuple[int, ...], cand: int, k: int) -> bool:
    if k <= 0:
        return True
    if cand.bit_count() < k:
        return False
    return _max_clique_size(adj, cand, stop_at=k) >= k


def _lex_smallest_clique(adj: tuple[int, ...], n: int, size: int) -> int:
    """Bitmask of the lexicographically smallest clique of ``size`` vertices."""
    chosen = 0
    need = size
    cand = (1 << n) - 1
    v = 0
    while need and v < n:
        bit = 1 << v
        if cand & bit:
            sub = cand & adj[v] & ~((bit << 1) - 1)
            if _has_clique(adj, sub, need - 1):
                chosen |= bit
                need -= 1
                cand = sub
            else:
                cand ^= bit
        v += 1
    assert need == 0, "witness reconstruction failed"
    return chosen


def clique_number(g: Graph) -> tuple[int, frozenset[int]]:
    """Size of a maximum clique together with the smallest such witness."""
    if g.n == 0:
        return 0, frozenset()
    size = _max_clique_size(g.adj, g.vertex_mask, stop_at=g.n + 1)
    witness = frozenset(iter_bits(_lex_smallest_clique(g.adj, g.n, size)))
    return size, witness


def independence_number(g: Graph) -> tuple[int, frozenset[int]]:
    """Maximum independent set size, solved as a clique in the complement."""
    return clique_number(complement(g))


# ----------------------------------------------------------------------------
# Vertex connectivity (Menger / max flow on the vertex-split digraph).
# ----------------------------------------------------------------------------


def _is_complete(g: Graph) -> bool:
    full = g.vertex_mask
    return all(row == full & ~(1 << v) for v, row in enumerate(g.adj))


def _local_connectivity(g: Graph, s: int, t: int) -> tuple[int, frozenset[int]]:
    """Max internally-disjoint s-t paths plus one minimum separating set.

    Requires s and t non-adjacent.  Node 2v is "v in", 2v+1 is "v out";
    the unit arc 2v -> 2v+1 models removing vertex v.
    """
    n = g.n
    inf = n * n + 1
    cap: dict[tuple[int, int], int] = {}
    for v in range(n):
        cap[(2 * v, 2 * v + 1)] = 1
        for u in iter_bits(g.adj[v]):
            cap[(2 * v + 1, 2 * u)] = inf
    out: dict[int, list[int]] = {node: [] for node in range(2 * n)}
    for a, b in cap:
        out[a].append(b)
        out[b].append(a)  # residual direction

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: source}
        queue = [source]
        while queue and sink not in parent:
            node = queue.pop(0)
            for nxt in out[node]:
                if nxt in parent:
                    continue
                if cap.get((node, nxt), 0) > 0:
                    parent[nxt] = node
                    queue.append(nxt)
        if sink not in parent:
            break
        node = sink
        while node != source:
            prev = parent[node]
            cap[(prev, node)] = cap.get((prev, node), 0) - 1
            cap[(node, prev)] = cap.get((node, prev), 0) + 1
            node = prev
        flow += 1

    # Split arcs crossing the final residual source side form a minimum cut.
    reach = {source}
    queue = [source]
    while queue:
        node = queue.pop(0)
        for nxt in out[node]:
            if nxt not in reach and cap.get((node, nxt), 0) > 0:
                reach.add(nxt)
                queue.append(nxt)
    cut = frozenset(
        v for v in range(n) if 2 * v in reach and 2 * v + 1 not in reach
    )
    return flow, cut


def _disconnects(g: Graph, removed: int) -> bool:
    remaining = g.vertex_mask & ~removed
    if remaining == 0:
        return False
    seen = remaining & -remaining
    frontier = seen
    while frontier:
        grow = 0
        for v in iter_bits(frontier):
            grow |= g.adj[v]
        frontier = grow & remaining & ~seen
        seen |= frontier
    return seen != remaining


def vertex_connectivity(g: Graph) -> tuple[int, frozenset[int] | None]:
    """Connectivity and a minimum separating set (None for complete graphs).

    Complete graphs use the convention kappa(K_n) = n - 1; a disconnected
    graph has connectivity 0 with the empty set as witness.
    """
    if g.n == 0:
        raise ValueError("connectivity is undefined for the empty graph")
    if _is_complete(g):
        return g.n - 1, None
    if not is_connected(g):
        return 0, frozenset()

    best = g.n - 1
    best_cut: frozenset[int] = frozenset(range(g.n))
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.adj[u] >> v & 1:
                continue
            flow, cut = _local_connectivity(g, u, v)
            if flow < best:
                best, best_cut = flow, cut

    if comb(g.n, best) <= _CUT_SCAN_LIMIT:
        for combo in combinations(range(g.n), best):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if _disconnects(g, mask):
                return best, frozenset(combo)
    return best, best_cut


def minimum_cut_sets(g: Graph) -> list[frozenset[int]]:
    """All minimum vertex cut sets, in lexicographic order."""
    if not is_connected(g):
        raise ValueError("graph must be connected")
    if _is_complete(g):
        raise ValueError("complete graphs have no cut set")
    if g.n > 16:
        raise CapacityError("cut-set enumeration is limited to 16 vertices")
    k, _ = vertex_connectivity(g)
    cuts = []
    for combo in combinations(range(g.n), k):
        mask = 0
        for v in combo:
            mask |= 1 << v
        if _disconnects(g, mask):
            cuts.append(frozenset(combo))
    return cuts


# ----------------------------------------------------------------------------
# Invariant record
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class InvariantRecord:
    """The basic numeric profile of one graph; None marks undefined values."""

    n: int
    delta: int
    alpha: int
    omega: int
    kappa: int
    gamma_c: int | None
    gamma_t: int | None

    def __post_init__(self) -> None:
        if self.n >= 2 and self.kappa > self.delta:
            raise ValueError("connectivity cannot exceed minimum degree")
        if self.gamma_c is not None and not 1 <= self.gamma_c <= self.n:
            raise ValueError("connected domination number out of range")

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "delta": self.delta,
            "alpha": self.alpha,
            "omega": self.omega,
            "kappa": self.kappa,
            "gamma_c": self.gamma_c,
            "gamma_t": self.gamma_t,
        }


def compute_invariants(g: Graph) -> InvariantRecord:
    """Compute the full record; witnesses are re-validated before returning."""
    from .domination import gamma_c, gamma_t  # local import avoids a cycle

    if g.n == 0:
        raise ValueError("invariant record requires at least one vertex")
    alpha, alpha_witness = independence_number(g)
    omega, omega_witness = clique_number(g)
    if not is_independent_set(g, alpha_witness) or len(alpha_witness) != alpha:
        raise AssertionError("independence witness failed validation")
    if not is_clique(g, omega_witness) or len(omega_witness) != omega:
        raise AssertionError("clique witness failed validation")
    kappa, _ = vertex_connectivity(g)
    return InvariantRecord(
        n=g.n,
        delta=min_degree(g),
        alpha=alpha,
        omega=omega,
        kappa=kappa,
        gamma_c=gamma_c(g).value,
        gamma_t=gamma_t(g).value,
    )
