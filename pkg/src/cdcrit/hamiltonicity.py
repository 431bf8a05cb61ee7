"""Exact Hamiltonian-path decisions via bitmask dynamic programming.

State = (visited subset, current endpoint), stored per subset as an endpoint
bitmask.  Capped at 24 vertices; beyond that the state table no longer fits
a desk machine.
"""

from __future__ import annotations

from .errors import CapacityError
from .graph import Graph

MAX_DP_VERTICES = 24


def _check_dp_size(g: Graph) -> None:
    if g.n > MAX_DP_VERTICES:
        raise CapacityError(
            f"Hamiltonian search is limited to {MAX_DP_VERTICES} vertices, got {g.n}"
        )
    if g.n < 2:
        raise ValueError("Hamiltonian path queries need at least two vertices")


def _reachable_states(g: Graph, start: int, banned: int = 0) -> dict[int, int]:
    """Map visited-subset -> endpoint bitmask for paths from ``start``.

    Vertices in ``banned`` are never entered; only reachable states are
    materialized, which keeps sparse instances cheap.
    """
    adj = g.adj
    allowed = g.vertex_mask & ~banned
    states = {1 << start: 1 << start}
    frontier = [1 << start]
    while frontier:
        grow = []
        for mask in frontier:
            ends = states[mask]
            while ends:
                low = ends & -ends
                ends ^= low
                targets = adj[low.bit_length() - 1] & allowed & ~mask
                while targets:
                    t = targets & -targets
                    targets ^= t
                    nxt = mask | t
                    prev = states.get(nxt, 0)
                    if not prev:
                        grow.append(nxt)
                    states[nxt] = prev | t
        frontier = grow
    return states


def hamiltonian_path_between(g: Graph, u: int, v: int) -> list[int] | None:
    """A spanning u-v path as a vertex list, or None when none exists."""
    _check_dp_size(g)
    if u == v:
        raise ValueError("endpoints must be distinct")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise IndexError(f"vertex out of range for n={g.n}")

    # Keep v out of the walk until the last step: a spanning u-v path visits
    # v exactly once, at the end.
    states = _reachable_states(g, u, banned=1 << v)
    goal = g.vertex_mask & ~(1 << v)
    ends = states.get(goal, 0) & g.adj[v]
    if not ends:
        return None

    # Walk the table backwards, preferring the smallest endpoint at each step.
    path = [v]
    mask = goal
    end_bit = ends & -ends
    while mask:
        e = end_bit.bit_length() - 1
        path.append(e)
        mask ^= end_bit
        if not mask:
            break
        candidates = states[mask] & g.adj[e]
        end_bit = candidates & -candidates
    path.reverse()
    assert path[0] == u and len(path) == g.n
    return path


def is_path_witness(g: Graph, path: list[int]) -> bool:
    """Literal check: visits every vertex once, consecutive pairs adjacent."""
    if sorted(path) != list(range(g.n)):
        return False
    return all(g.adj[a] >> b & 1 for a, b in zip(path, path[1:]))


def is_hamiltonian_connected(g: Graph) -> tuple[bool, tuple[int, int] | None]:
    """Whether every vertex pair is joined by a spanning path.

    One subset table per source vertex answers all targets at once.  Returns
    the first failing pair (lexicographically) when the answer is False.
    """
    _check_dp_size(g)
    full = g.vertex_mask
    for u in range(g.n - 1):
        states = _reachable_states(g, u)
        ends = states.get(full, 0)
        wanted = full & ~((1 << (u + 1)) - 1)
        missing = wanted & ~ends
        if missing:
            return False, (u, (missing & -missing).bit_length() - 1)
    return True, None
