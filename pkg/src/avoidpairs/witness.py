"""Witness graphs: a clique joined with a girth-bounded part, their structural
verification, and the exhaustive arrowing check that validates certificates at
small scale.

A verified witness with girth bound above m, whose pair (or complement pair,
for complemented witnesses) is clique-plus-forest impossible, shows the graph
does not arrow the pair without enumerating subsets: every induced subgraph on
at most m vertices of a clique-plus-high-girth graph is a clique plus forest.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .criterion import CliqueForestCert, Impossible, PairMF, clique_forest_realizable
from .errors import DomainError, GuardError
from .exactarith import binom2, isqrt
from .graphs import Graph, girth
from .oracle import _has_induced_size

DEFAULT_SUBSET_GUARD = 10**8


@dataclass(frozen=True)
class WitnessGraph:
    """A graph plus its structural certificate.

    If complemented is set, the clique/girth structure lives in the complement
    of `graph`, and certificates about `graph` go through the complement pair.
    """

    graph: Graph
    clique_vertices: frozenset[int]
    girth_part: frozenset[int]
    girth_bound: int
    complemented: bool

    def structure_graph(self) -> Graph:
        return self.graph.complement() if self.complemented else self.graph


@dataclass(frozen=True)
class Infeasible:
    """Greedy insertion ran out of candidate edges; diagnostic counts."""

    n: int
    e: int
    p: int
    k: int
    placed: int
    missing: int
    reason: str


@dataclass(frozen=True)
class WitnessVerdict:
    passed: bool
    failures: tuple[str, ...]
    realizability: CliqueForestCert | None


def _clique_size_for(e: int) -> int:
    # unique k with binom2(k) <= e <= binom2(k+1) - 1; e = 0 keeps the clique empty
    if e == 0:
        return 0
    return (1 + isqrt(8 * e + 1)) // 2


def _dist_at_least(g: Graph, src: int, dst: int, limit: int) -> bool:
    """True iff the graph distance from src to dst is >= limit (BFS, depth-capped)."""
    if src == dst:
        return limit <= 0
    seen = 1 << src
    frontier = [src]
    for depth in range(1, limit):
        nxt = []
        for u in frontier:
            r = g.rows[u] & ~seen
            if r >> dst & 1:
                return False  # dist == depth < limit
            seen |= r
            while r:
                b = r & -r
                nxt.append(b.bit_length() - 1)
                r ^= b
        if not nxt:
            return True
        frontier = nxt
    return True


def build_witness(n: int, e: int, p: int) -> WitnessGraph | Infeasible:
    """Place a clique K_k with binom2(k) <= e < binom2(k+1), then insert the
    remaining edges into the other n - k vertices greedily in lexicographic
    order, accepting an edge only when its endpoints are at distance >= p
    (so every new cycle has length > p).  Returns an Infeasible diagnostic
    when the candidates run out rather than ever degrading the girth."""
    if not 0 <= e <= binom2(n):
        raise DomainError(f"edge count must satisfy 0 <= e <= {binom2(n)}, got {e}")
    if p < 3:
        raise DomainError(f"girth bound must be >= 3, got {p}")
    k = _clique_size_for(e)
    g = Graph(n)
    for u in range(k):
        for v in range(u + 1, k):
            g.add_edge(u, v)
    extra = e - binom2(k)
    placed = 0
    for u in range(k, n):
        if placed == extra:
            break
        for v in range(u + 1, n):
            if placed == extra:
                break
            if _dist_at_least(g, u, v, p):
                g.add_edge(u, v)
                placed += 1
    if placed < extra:
        return Infeasible(
            n=n, e=e, p=p, k=k, placed=placed, missing=extra - placed,
            reason=f"greedy insertion placed {placed} of {extra} extra edges on "
                   f"{n - k} vertices without closing a cycle of length <= {p}",
        )
    return WitnessGraph(
        graph=g,
        clique_vertices=frozenset(range(k)),
        girth_part=frozenset(range(k, n)),
        girth_bound=p,
        complemented=False,
    )


def build_witness_or_complement(n: int, e: int, p: int) -> WitnessGraph | Infeasible:
    """Build directly for e below half the total edge count, otherwise build
    the complement's structure and mark the witness complemented."""
    total = binom2(n)
    if not 0 <= e <= total:
        raise DomainError(f"edge count must satisfy 0 <= e <= {total}, got {e}")
    if 2 * e <= total + 1:  # e <= ceil(total / 2)
        return build_witness(n, e, p)
    built = build_witness(n, total - e, p)
    if isinstance(built, Infeasible):
        return built
    return WitnessGraph(
        graph=built.graph.complement(),
        clique_vertices=built.clique_vertices,
        girth_part=built.girth_part,
        girth_bound=p,
        complemented=True,
    )


def verify_witness(w: WitnessGraph, pair: PairMF) -> WitnessVerdict:
    """PASS iff the structure is intact and the relevant pair orientation is
    clique-plus-forest impossible.

    Structural checks (on the complement when flagged): the two parts
    partition the vertex set, the clique part induces a complete graph,
    no edges cross between parts, and the girth part has girth above both
    the declared bound and pair.m.  The realizability check targets the
    pair itself for direct witnesses and the complement pair otherwise.
    A PASS certifies that w.graph does not arrow the pair."""
    failures: list[str] = []
    s = w.structure_graph()
    n = s.n
    clique = w.clique_vertices
    rest = w.girth_part
    if clique & rest or clique | rest != frozenset(range(n)):
        failures.append("partition")
    clique_mask = sum(1 << v for v in clique)
    rest_mask = sum(1 << v for v in rest)
    if any((s.rows[v] & clique_mask).bit_count() != len(clique) - 1 for v in clique):
        failures.append("clique-complete")
    if any(s.rows[v] & rest_mask for v in clique):
        failures.append("cross-edges")
    part_order = sorted(rest)
    index = {v: i for i, v in enumerate(part_order)}
    part = Graph(len(part_order))
    for v in part_order:
        r = s.rows[v] & rest_mask
        while r:
            b = r & -r
            u = b.bit_length() - 1
            r ^= b
            if u > v:
                part.add_edge(index[v], index[u])
    if not girth(part) > max(w.girth_bound, pair.m):
        failures.append("girth")
    target = pair.complement() if w.complemented else pair
    cert = clique_forest_realizable(target)
    if not isinstance(cert, Impossible):
        failures.append("realizable")
    return WitnessVerdict(passed=not failures, failures=tuple(failures), realizability=cert)


def exhaustive_arrow_check(
    g: Graph, pair: PairMF, subset_guard: int = DEFAULT_SUBSET_GUARD
) -> bool:
    """True iff some pair.m-subset of g induces exactly pair.f edges, by full
    subset enumeration; refuses when comb(n, m) exceeds the guard."""
    if pair.m > g.n:
        return False
    work = math.comb(g.n, pair.m)
    if work > subset_guard:
        raise GuardError(
            f"subset enumeration guard: C({g.n}, {pair.m}) = {work:.4g} > {subset_guard:g}"
        )
    return _has_induced_size(g.rows, g.n, pair.m, pair.f)
