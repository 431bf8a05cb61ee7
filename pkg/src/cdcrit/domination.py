"""Domination predicates and exact minimum solvers.

Both solvers run iterative deepening on the set size; candidate subsets are
discarded as soon as their neighborhood union cannot cover the graph.  The
workload is dominated by values <= 3, where this shallow exact search is
fastest, but the search is complete for any value.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, is_connected, iter_bits


@dataclass(frozen=True)
class DominationResult:
    """Solver outcome; ``value`` is None when no such set exists at all."""

    value: int | None
    witness: frozenset[int] | None = None
    all_optima: tuple[frozenset[int], ...] | None = None


def _mask_of(g: Graph, s: Iterable[int]) -> int:
    mask = 0
    for v in s:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return mask


def _induced_connected(adj: tuple[int, ...], mask: int) -> bool:
    if mask == 0:
        return False
    seen = mask & -mask
    frontier = seen
    while frontier:
        grow = 0
        for v in iter_bits(frontier):
            grow |= adj[v]
        frontier = grow & mask & ~seen
        seen |= frontier
    return seen == mask


def dominates(g: Graph, d: Iterable[int], x: Iterable[int]) -> bool:
    """True when every vertex of ``x`` is in ``d`` or adjacent to it."""
    d_mask = _mask_of(g, d)
    x_mask = _mask_of(g, x)
    cover = d_mask
    for v in iter_bits(d_mask):
        cover |= g.adj[v]
    return x_mask & ~cover == 0


def is_connected_dominating(g: Graph, d: Iterable[int]) -> bool:
    """True when ``d`` dominates all of g and induces a connected subgraph."""
    d_mask = _mask_of(g, d)
    if g.n == 0:
        return True
    if d_mask == 0:
        return False
    cover = d_mask
    for v in iter_bits(d_mask):
        cover |= g.adj[v]
    return cover == g.vertex_mask and _induced_connected(g.adj, d_mask)


def _search_minimum(
    g: Graph,
    closed: bool,
    connected_required: bool,
    collect_all: bool,
    fixed_size: int | None = None,
) -> tuple[int | None, list[int]]:
    """Smallest k admitting a qualifying set, with witnesses as bitmasks.

    ``closed`` selects closed neighborhoods (domination) versus open ones
    (total domination).  With ``collect_all`` every optimal set is returned,
    otherwise only the lexicographically first.
    """
    n = g.n
    full = g.vertex_mask
    reach = [g.adj[v] | (1 << v if closed else 0) for v in range(n)]
    sizes = range(1, n + 1) if fixed_size is None else (fixed_size,)
    for k in sizes:
        found: list[int] = []
        for combo in combinations(range(n), k):
            cover = 0
            mask = 0
            for v in combo:
                cover |= reach[v]
                mask |= 1 << v
            if cover != full:
                continue
            if connected_required and not _induced_connected(g.adj, mask):
                continue
            if not collect_all:
                return k, [mask]
            found.append(mask)
        if found:
            return k, found
    return None, []


def gamma_c(g: Graph) -> DominationResult:
    """Minimum connected dominating set; undefined for disconnected graphs."""
    if g.n == 0 or not is_connected(g):
        return DominationResult(None)
    value, masks = _search_minimum(g, closed=True, connected_required=True, collect_all=False)
    return DominationResult(value, frozenset(iter_bits(masks[0])))


def gamma_t(g: Graph) -> DominationResult:
    """Minimum total dominating set; undefined with isolated vertices."""
    if g.n == 0 or any(row == 0 for row in g.adj):
        return DominationResult(None)
    value, masks = _search_minimum(g, closed=False, connected_required=False, collect_all=False)
    return DominationResult(value, frozenset(iter_bits(masks[0])))


def all_gamma_c_sets(g: Graph) -> list[frozenset[int]]:
    """Every minimum connected dominating set, in lexicographic order."""
    if g.n == 0 or not is_connected(g):
        raise ValueError("graph must be connected and non-empty")
    value, masks = _search_minimum(g, closed=True, connected_required=True, collect_all=True)
    assert value is not None
    return [frozenset(iter_bits(m)) for m in masks]
