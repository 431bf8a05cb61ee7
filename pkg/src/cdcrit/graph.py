"""Immutable simple graphs on up to 64 vertices, stored as per-vertex bitsets.

Vertices are always labelled 0..n-1.  Every "mutating" operation returns a
fresh value, so graphs can be shared freely across threads and reused by the
thousands of add-edge / delete-vertex probes the criticality predicates make.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import CapacityError, Graph6ParseError

MAX_VERTICES = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph; ``adj[v]`` is the open neighborhood bitset.

    Instances are value objects: equality and hashing follow (n, adj), and
    the constructor rejects loops, asymmetric rows, and out-of-range bits.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]) -> None:
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        if n > MAX_VERTICES:
            raise CapacityError(f"at most {MAX_VERTICES} vertices supported, got {n}")
        rows = tuple(adj)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"adjacency row {v} has bits outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(rows):
            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = rows

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise IndexError(f"vertex out of range for n={self.n}")
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> frozenset[int]:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")
        return frozenset(iter_bits(self.adj[v]))

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.adj[v] | 1 << v))

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def empty_graph(n: int) -> Graph:
    """Graph with ``n`` isolated vertices."""
    return Graph(n, [0] * n)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Return ``g`` with edge uv added (idempotent when already present)."""
    if u == v:
        raise ValueError(f"cannot add loop at vertex {u}")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise IndexError(f"edge ({u}, {v}) out of range for n={g.n}")
    if g.adj[u] >> v & 1:
        return g
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, rows)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Return ``g - v``; vertices above ``v`` shift down by one."""
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    low = (1 << v) - 1
    rows = []
    for u in range(g.n):
        if u == v:
            continue
        row = g.adj[u]
        rows.append((row & low) | (row >> (v + 1)) << v)
    return Graph(g.n - 1, rows)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, [full & ~(row | 1 << v) for v, row in enumerate(g.adj)])


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between the sides."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise CapacityError(f"join would have {n} > {MAX_VERTICES} vertices")
    h_block = ((1 << h.n) - 1) << g.n
    g_block = (1 << g.n) - 1
    rows = [row | h_block for row in g.adj]
    rows += [(row << g.n) | g_block for row in h.adj]
    return Graph(n, rows)


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by ``s``, relabeled in increasing order of old index."""
    vs = sorted(set(s))
    if vs and not (0 <= vs[0] and vs[-1] < g.n):
        raise IndexError(f"vertex set not within 0..{g.n - 1}")
    rows = [0] * len(vs)
    for i, u in enumerate(vs):
        for j in range(i + 1, len(vs)):
            if g.adj[u] >> vs[j] & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(len(vs), rows)


def is_connected(g: Graph) -> bool:
    """True when ``g`` is connected; the empty graph counts as connected."""
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        grow = 0
        for v in iter_bits(frontier):
            grow |= g.adj[v]
        frontier = grow & ~seen
        seen |= frontier
    return seen == g.vertex_mask


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest member."""
    remaining = g.vertex_mask
    comps = []
    while remaining:
        start = remaining & -remaining
        seen = start
        frontier = start
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= g.adj[v]
            frontier = grow & remaining & ~seen
            seen |= frontier
        comps.append(frozenset(iter_bits(seen)))
        remaining &= ~seen
    return comps


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("minimum degree is undefined for the empty graph")
    return min(row.bit_count() for row in g.adj)


def non_edges(g: Graph) -> list[tuple[int, int]]:
    """All unordered non-adjacent distinct pairs, in lexicographic order."""
    return [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.adj[u] >> v & 1
    ]


# ----------------------------------------------------------------------------
# graph6 interchange format (printable ASCII 63..126, no header).
# Upper-triangle adjacency bits in column-major order x(0,1), x(0,2), x(1,2),
# x(0,3), ... packed big-endian into 6-bit groups, each group offset by 63.
# ----------------------------------------------------------------------------


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    # 63 <= n <= 258047 uses '~' plus 18 bits in three 6-bit groups.
    return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    out = [_encode_size(g.n)]
    group = 0
    width = 0
    for col in range(1, g.n):
        for row in range(col):
            group = group << 1 | (g.adj[row] >> col & 1)
            width += 1
            if width == 6:
                out.append(chr(group + 63))
                group = 0
                width = 0
    if width:
        out.append(chr((group << (6 - width)) + 63))
    return "".join(out)


def from_graph6(data: str | bytes) -> Graph:
    """Decode one graph6 value; rejects stray bytes and nonzero padding."""
    if isinstance(data, bytes):
        try:
            text = data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6ParseError("non-ASCII byte", exc.start) from None
    else:
        text = data
    text = text.rstrip("\r\n")
    if not text:
        raise Graph6ParseError("empty input", 0)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"byte {ord(ch)} outside graph6 range", i)

    if text[0] != "~":
        n = ord(text[0]) - 63
        body_at = 1
    else:
        if len(text) >= 2 and text[1] == "~":
            # 8-byte size prefix encodes n >= 258048, far past our capacity.
            if len(text) < 8:
                raise Graph6ParseError("truncated size field", len(text))
            raise CapacityError(f"graph6 size field exceeds {MAX_VERTICES} vertices")
        if len(text) < 4:
            raise Graph6ParseError("truncated size field", len(text))
        n = 0
        for ch in text[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body_at = 4
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 value has {n} > {MAX_VERTICES} vertices")

    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(text) - body_at < nchars:
        raise Graph6ParseError("truncated adjacency data", len(text))
    if len(text) - body_at > nchars:
        raise Graph6ParseError("trailing data after graph", body_at + nchars)

    rows = [0] * n
    bit_at = 0
    for k in range(nchars):
        group = ord(text[body_at + k]) - 63
        for b in range(5, -1, -1):
            bit = group >> b & 1
            if bit_at >= nbits:
                if bit:
                    raise Graph6ParseError("nonzero padding bits", body_at + k)
                continue
            if bit:
                col = _column_of(bit_at)
                row = bit_at - col * (col - 1) // 2
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            bit_at += 1
    return Graph(n, rows)


def _column_of(bit_index: int) -> int:
    # Column c owns bits [c(c-1)/2, c(c+1)/2); solve by integer sqrt.
    c = int(((8 * bit_index + 1) ** 0.5 - 1) / 2) + 1
    while c * (c - 1) // 2 > bit_index:
        c -= 1
    while (c + 1) * c // 2 <= bit_index:
        c += 1
    return c
