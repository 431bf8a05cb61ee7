"""Constructors for the extremal graph families and standard small graphs.

Each family generator fixes a documented vertex-block layout so that the
graph6 output of a given parameter set never changes between runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import CapacityError
from .graph import MAX_VERTICES, Graph

# ----------------------------------------------------------------------------
# Standard graphs
# ----------------------------------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph.from_edges(n, combinations(range(n), 2))


# ----------------------------------------------------------------------------
# Family one: an apex vertex over an independent set, matched against a clique.
# Layout: vertex 0 = apex v, vertices 1..l = independent z_1..z_l,
# vertices l+1..2l = clique q_1..q_l; z_i misses exactly q_i.
# ----------------------------------------------------------------------------


def gen_g1(l: int) -> Graph:
    if l < 2:
        raise ValueError("family-one parameter must be at least 2")
    n = 2 * l + 1
    if n > MAX_VERTICES:
        raise CapacityError(f"family-one graph would have {n} > {MAX_VERTICES} vertices")
    edges = [(0, i) for i in range(1, l + 1)]
    edges += [(i, l + j) for i in range(1, l + 1) for j in range(1, l + 1) if i != j]
    edges += [(l + i, l + j) for i in range(1, l + 1) for j in range(i + 1, l + 1)]
    return Graph.from_edges(n, edges)


def is_in_class_g1(g: Graph) -> tuple[bool, int | None]:
    """Structural membership test for family one; returns (verdict, l).

    Looks for an apex vertex v of degree l with N(v) independent, the rest an
    l-clique avoiding v, and the missing N(v)-clique pairs forming a perfect
    matching.  Equivalent to isomorphism with ``gen_g1(l)``.
    """
    n = g.n
    if n < 5 or n % 2 == 0:
        return False, None
    l = (n - 1) // 2
    full = g.vertex_mask
    for v in range(n):
        z_mask = g.adj[v]
        if z_mask.bit_count() != l:
            continue
        q_mask = full & ~(z_mask | 1 << v)
        # v must see nothing of the clique side.
        if g.adj[v] & q_mask:
            continue
        zs = [z for z in range(n) if z_mask >> z & 1]
        qs = [q for q in range(n) if q_mask >> q & 1]
        if any(g.adj[a] & z_mask for a in zs):
            continue
        if any(g.adj[q] & q_mask != q_mask & ~(1 << q) for q in qs):
            continue
        misses = [q_mask & ~g.adj[z] for z in zs]
        if any(m.bit_count() != 1 for m in misses):
            continue
        covered = 0
        for m in misses:
            covered |= m
        if covered == q_mask:
            return True, l
    return False, None


# ----------------------------------------------------------------------------
# Family two: layered edge-critical graphs attaining alpha + omega = n.
# Layout: vertex 0 = z, vertices 1..alpha = x_1..x_alpha, then the W_0,
# W_1, ..., W_{alpha-1} blocks in order.
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class G2Params:
    """Parameters of family two: alpha and the block sizes |W_0|..|W_{alpha-1}|."""

    alpha: int
    w_sizes: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "w_sizes", tuple(self.w_sizes))
        if self.alpha < 3:
            raise ValueError("family-two alpha must be at least 3")
        if len(self.w_sizes) != self.alpha:
            raise ValueError(f"expected {self.alpha} block sizes, got {len(self.w_sizes)}")
        if self.w_sizes[0] < 0:
            raise ValueError("block W_0 cannot have negative size")
        if any(w < 1 for w in self.w_sizes[1:]):
            raise ValueError("blocks W_1.. must be non-empty")

    @property
    def n(self) -> int:
        return 1 + self.alpha + sum(self.w_sizes)


def gen_g2(params: G2Params) -> Graph:
    n = params.n
    if n > MAX_VERTICES:
        raise CapacityError(f"family-two graph would have {n} > {MAX_VERTICES} vertices")
    alpha = params.alpha
    xs = list(range(1, alpha + 1))
    blocks: list[list[int]] = []
    at = alpha + 1
    for size in params.w_sizes:
        blocks.append(list(range(at, at + size)))
        at += size
    w_all = [w for block in blocks for w in block]

    edges = [(0, blocks[0][k]) for k in range(len(blocks[0]))]
    edges += [(0, x) for x in xs[:-1]]
    edges += [(xs[0], w) for w in w_all]
    for i in range(2, alpha + 1):
        for j in range(1, alpha):
            if j == i - 1:
                continue
            edges += [(xs[i - 1], w) for w in blocks[j]]
    edges += list(combinations(w_all, 2))
    return Graph.from_edges(n, edges)


# ----------------------------------------------------------------------------
# Family three: four blocks R, T, W, Z of size s on 4s vertices, regular of
# degree 3s - 2, separating independence number from connectivity.
# Layout: R = 0..s-1, T = s..2s-1, W = 2s..3s-1, Z = 3s..4s-1.
# ----------------------------------------------------------------------------


def gen_g3(s: int) -> Graph:
    if s < 3:
        raise ValueError("family-three parameter must be at least 3")
    n = 4 * s
    if n > MAX_VERTICES:
        raise CapacityError(f"family-three graph would have {n} > {MAX_VERTICES} vertices")
    r = list(range(s))
    t = list(range(s, 2 * s))
    w = list(range(2 * s, 3 * s))
    z = list(range(3 * s, 4 * s))
    edges = []
    for i in range(s):
        edges += [(r[i], t[j]) for j in range(s) if j != i]
        edges += [(r[i], w[j]) for j in range(s)]
        edges += [(t[i], w[j]) for j in range(s) if j != i]
        edges += [(t[i], z[j]) for j in range(s)]
        edges += [(w[i], z[j]) for j in range(s) if j != i]
    edges += list(combinations(r, 2))
    edges += list(combinations(z, 2))
    return Graph.from_edges(n, edges)


# ----------------------------------------------------------------------------
# The double-cover construction: any seed graph h yields a critical graph on
# 2m+3 vertices.  Layout: 0 = hub x; 1..m = the copies u_i of h's vertices;
# m+1 = the extra vertex y; m+2..2m+1 = the complement copies v_i; 2m+2 = b.
# ----------------------------------------------------------------------------


def gen_lemma_c1(h: Graph) -> Graph:
    m = h.n
    if m < 1:
        raise ValueError("seed graph needs at least one vertex")
    n = 2 * m + 3
    if n > MAX_VERTICES:
        raise CapacityError(f"construction would have {n} > {MAX_VERTICES} vertices")
    y = m + 1
    b = 2 * m + 2
    u = [i + 1 for i in range(m)]
    v = [m + 2 + i for i in range(m)]

    edges = [(0, i) for i in range(1, m + 2)]  # hub joined to h-side plus y
    edges += [(u[a], u[c]) for a, c in h.edges()]
    # Complement side: v_a v_c present exactly when u_a u_c is absent, and b
    # sees every v_i (y is isolated on the h side).
    edges += [
        (v[a], v[c]) for a in range(m) for c in range(a + 1, m) if not h.has_edge(a, c)
    ]
    edges += [(v[a], b) for a in range(m)]
    # Full bipartite bridge minus the u_i v_i matching and minus y-b.
    edges += [(u[a], v[c]) for a in range(m) for c in range(m) if a != c]
    edges += [(u[a], b) for a in range(m)]
    edges += [(y, v[a]) for a in range(m)]
    return Graph.from_edges(n, edges)


# ----------------------------------------------------------------------------
# Isomorphism by neighborhood-degree refinement plus backtracking.
# ----------------------------------------------------------------------------

MAX_ISO_VERTICES = 12


def _refine_colors(g: Graph) -> list[int]:
    """Iterated (color, sorted neighbor colors) refinement from degrees."""
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in range(g.n) if g.adj[v] >> u & 1)))
            for v in range(g.n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        new_colors = [palette[sig] for sig in signatures]
        if new_colors == colors:
            return colors
        colors = new_colors


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test for graphs with at most 12 vertices."""
    if g.n > MAX_ISO_VERTICES or h.n > MAX_ISO_VERTICES:
        raise CapacityError(f"isomorphism search is limited to {MAX_ISO_VERTICES} vertices")
    if g.n != h.n:
        return False
    if g.edge_count() != h.edge_count():
        return False
    g_colors = _refine_colors(g)
    h_colors = _refine_colors(h)
    if sorted(g_colors) != sorted(h_colors):
        return False

    n = g.n
    # Map the most constrained (rarest-color) vertices first.
    order = sorted(range(n), key=lambda v: (g_colors.count(g_colors[v]), g_colors[v], v))
    mapping = [-1] * n
    used = [False] * n

    def assign(idx: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        for w in range(n):
            if used[w] or h_colors[w] != g_colors[v]:
                continue
            ok = True
            for prev in order[:idx]:
                if (g.adj[v] >> prev & 1) != (h.adj[w] >> mapping[prev] & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if assign(idx + 1):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    return assign(0)
