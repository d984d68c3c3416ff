"""Simple undirected graphs on bitset adjacency rows, graph6 serialization,
and girth computation.

Rows are Python ints used as bitsets, so the same representation covers both
the small oracle graphs (n <= 16) and larger witness graphs.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator

from .errors import DomainError


class Graph:
    """Loop-free undirected graph; adjacency as one int bitmask per vertex."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: list[int] | None = None):
        if n < 0:
            raise DomainError(f"vertex count must be >= 0, got {n}")
        self.n = n
        if rows is None:
            self.rows = [0] * n
        else:
            if len(rows) != n:
                raise DomainError(f"expected {n} adjacency rows, got {len(rows)}")
            self.rows = list(rows)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        g = cls(n)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << v) for v in range(n)])

    def copy(self) -> "Graph":
        return Graph(self.n, self.rows)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise DomainError(f"vertex {v} out of range [0, {self.n})")

    def add_edge(self, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise DomainError(f"self-loop at vertex {u} rejected")
        self.rows[u] |= 1 << v
        self.rows[v] |= 1 << u

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.rows[v].bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            r = self.rows[u] >> (u + 1) << (u + 1)
            while r:
                b = r & -r
                yield (u, b.bit_length() - 1)
                r ^= b

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, [(full ^ (1 << v) ^ self.rows[v]) & full for v in range(self.n)])

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        mask = 0
        count = 0
        for v in vertices:
            self._check_vertex(v)
            count += (self.rows[v] & mask).bit_count()
            mask |= 1 << v
        return count

    def key(self) -> tuple[int, tuple[int, ...]]:
        return (self.n, tuple(self.rows))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.key() == other.key()

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.edge_count()})"


def to_graph6(g: Graph) -> str:
    """Header-less graph6 string; bit-exact for 0 <= n <= 62."""
    n = g.n
    if n > 62:
        raise DomainError(f"graph6 support here covers n <= 62, got n={n}")
    bits = []
    for j in range(1, n):
        row = g.rows[j]
        for i in range(j):
            bits.append(row >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        word = 0
        for b in bits[k : k + 6]:
            word = word << 1 | b
        chars.append(chr(word + 63))
    return "".join(chars)


def from_graph6(text: str) -> Graph:
    """Decode a header-less graph6 string with n <= 62."""
    s = text.strip()
    if not s:
        raise DomainError("empty graph6 string")
    n = ord(s[0]) - 63
    if not 0 <= n <= 62:
        raise DomainError(f"unsupported graph6 order byte {s[0]!r} (n <= 62 only)")
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise DomainError(f"graph6 body length {len(body)}, expected {need} for n={n}")
    bits = []
    for ch in body:
        word = ord(ch) - 63
        if not 0 <= word < 64:
            raise DomainError(f"invalid graph6 byte {ch!r}")
        bits.extend(word >> k & 1 for k in range(5, -1, -1))
    g = Graph(n)
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                g.add_edge(i, j)
            idx += 1
    if any(bits[idx:]):
        raise DomainError("nonzero padding bits in graph6 string")
    return g


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or math.inf for forests.

    BFS from every vertex; a non-tree edge (u, w) seen from root r closes a
    cycle of length dist[u] + dist[w] + 1, and the minimum over all roots and
    non-tree edges is the girth.
    """
    n = g.n
    rows = g.rows
    best: int | float = math.inf
    for src in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[src] = 0
        frontier = [src]
        depth = 0
        while frontier:
            if 2 * depth + 1 >= best:
                break  # any cycle detected from here on is no shorter
            nxt = []
            for u in frontier:
                r = rows[u]
                pu = parent[u]
                du = dist[u]
                while r:
                    b = r & -r
                    w = b.bit_length() - 1
                    r ^= b
                    if dist[w] < 0:
                        dist[w] = du + 1
                        parent[w] = u
                        nxt.append(w)
                    elif w != pu:
                        c = du + dist[w] + 1
                        if c < best:
                            best = c
            frontier = nxt
            depth += 1
    return best
