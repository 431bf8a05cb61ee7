"""Exhaustive small-graph enumeration, one representative per class.

Graphs on n vertices are grown from the classes on n-1 vertices by attaching
a new vertex with every possible neighborhood; candidates are deduplicated
against a store keyed by cheap isomorphism invariants (edge count, degree
sequence, refined color histogram) with an exact isomorphism test inside
each bucket.  Internal enumeration stops at 7 vertices; larger inputs are
expected to arrive as graph6 lines from external tools.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import CapacityError, Graph6ParseError
from .generators import _refine_colors, are_isomorphic
from .graph import Graph, from_graph6, is_connected

MAX_ENUM_VERTICES = 7

_classes_cache: dict[int, list[Graph]] = {}


def _store_key(g: Graph) -> tuple:
    colors = _refine_colors(g)
    histogram = tuple(sorted((c, colors.count(c)) for c in set(colors)))
    return (
        g.edge_count(),
        tuple(sorted(g.degree(v) for v in range(g.n))),
        histogram,
    )


def _augment(previous: list[Graph], n: int) -> list[Graph]:
    store: dict[tuple, list[Graph]] = {}
    out: list[Graph] = []
    for base in previous:
        for nbr_mask in range(1 << (n - 1)):
            rows = list(base.adj) + [nbr_mask]
            for v in range(n - 1):
                if nbr_mask >> v & 1:
                    rows[v] |= 1 << (n - 1)
            candidate = Graph(n, rows)
            bucket = store.setdefault(_store_key(candidate), [])
            if any(are_isomorphic(candidate, seen) for seen in bucket):
                continue
            bucket.append(candidate)
            out.append(candidate)
    return out


def _classes(n: int) -> list[Graph]:
    if n not in _classes_cache:
        if n == 1:
            _classes_cache[1] = [Graph(1, [0])]
        else:
            _classes_cache[n] = _augment(_classes(n - 1), n)
    return _classes_cache[n]


def enumerate_graphs(n: int) -> list[Graph]:
    """All graphs on n vertices up to isomorphism (1 <= n <= 7)."""
    if n < 1:
        raise ValueError("enumeration needs at least one vertex")
    if n > MAX_ENUM_VERTICES:
        raise CapacityError(
            f"internal enumeration stops at {MAX_ENUM_VERTICES} vertices; "
            "feed larger graphs in as graph6 lines"
        )
    return list(_classes(n))


def enumerate_connected(n: int) -> list[Graph]:
    """All connected graphs on n vertices up to isomorphism (1 <= n <= 7)."""
    return [g for g in enumerate_graphs(n) if is_connected(g)]


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode a stream of graph6 lines, skipping blanks and comments."""
    for lineno, line in enumerate(lines, 1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        if text.startswith(">>graph6<<"):
            text = text[len(">>graph6<<"):]
        try:
            yield from_graph6(text)
        except Graph6ParseError as exc:
            raise Graph6ParseError(f"line {lineno}: {exc}", exc.offset) from None
