"""Brute-force ground truth at small scale: isomorphism-free enumeration of
graphs, induced-subgraph arrowing decisions, full S_n reports, and an explicit
clique-plus-forest realization oracle independent of the floor criterion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .canon import canonical_rows, tri_encoding
from .criterion import PairMF
from .errors import DomainError, GuardError
from .exactarith import binom2
from .graphs import Graph, girth, to_graph6
from .parallel import run_chunked

FULL_CACHE_MAX = 8       # levels held fully in memory, reused across queries
DEFAULT_QUERY_GUARD = 10  # single (n, e) enumeration
DEFAULT_SWEEP_GUARD = 9   # full S_n sweeps
DEFAULT_SUBSET_GUARD = 10**8
ORACLE_MAX_M = 12


def class_count_estimate(n: int) -> int:
    """Rough isomorphism-class count, 2^binom2(n) / n!."""
    return max(1, (1 << binom2(n)) // math.factorial(n))


def _extend(parent: tuple[int, ...], mask: int) -> tuple[int, ...]:
    k = len(parent)
    return tuple(parent[i] | ((mask >> i & 1) << k) for i in range(k)) + (mask,)


@lru_cache(maxsize=None)
def _all_classes(n: int) -> tuple[tuple[int, ...], ...]:
    """Every isomorphism class on n vertices, as canonical rows sorted by the
    upper-triangle encoding (graph6 order).

    Built by vertex augmentation: each (n)-class arises from some (n-1)-class
    by attaching one vertex, so extending every parent with every neighbor
    mask and deduplicating by canonical form is complete.
    """
    if n < 1:
        raise DomainError(f"enumeration needs n >= 1, got {n}")
    if n == 1:
        return ((0,),)
    out = set()
    k = n - 1
    for parent in _all_classes(k):
        for mask in range(1 << k):
            out.add(canonical_rows(_extend(parent, mask), n))
    return tuple(sorted(out, key=lambda rs: tri_encoding(rs, n)))


@lru_cache(maxsize=None)
def _classes_by_edges(n: int) -> dict[int, tuple[tuple[int, ...], ...]]:
    grouped: dict[int, list[tuple[int, ...]]] = {}
    for rows in _all_classes(n):
        e = sum(r.bit_count() for r in rows) // 2
        grouped.setdefault(e, []).append(rows)
    return {e: tuple(classes) for e, classes in grouped.items()}


def _classes_n_e_windowed(n: int, e: int) -> tuple[tuple[int, ...], ...]:
    """Augmentation pruned to the edge window reachable from (n, e); used for
    single queries above the full-cache level."""
    level: set[tuple[int, ...]] = {(0,)}
    total = binom2(n)
    for k in range(1, n):
        cap_after = total - binom2(k + 1)  # edges still addable beyond k+1 vertices
        nxt: set[tuple[int, ...]] = set()
        for parent in level:
            e_parent = sum(r.bit_count() for r in parent) // 2
            for mask in range(1 << k):
                e_child = e_parent + mask.bit_count()
                if e_child > e or e_child + cap_after < e:
                    continue
                nxt.add(canonical_rows(_extend(parent, mask), k + 1))
        level = nxt
    keep = [rows for rows in level if sum(r.bit_count() for r in rows) // 2 == e]
    return tuple(sorted(keep, key=lambda rs: tri_encoding(rs, n)))


def enumerate_graphs(n: int, e: int, query_guard: int = DEFAULT_QUERY_GUARD) -> Iterator[Graph]:
    """Yield one representative per isomorphism class with n vertices, e edges,
    in canonical (graph6) order."""
    if n < 1:
        raise DomainError(f"enumeration needs n >= 1, got {n}")
    if not 0 <= e <= binom2(n):
        raise DomainError(f"edge count must satisfy 0 <= e <= {binom2(n)}, got {e}")
    if n > query_guard:
        raise GuardError(
            f"enumeration guard: n={n} exceeds {query_guard} "
            f"(roughly {class_count_estimate(n):.3g} classes)"
        )
    if n <= FULL_CACHE_MAX:
        classes = _classes_by_edges(n).get(e, ())
    else:
        classes = _classes_n_e_windowed(n, e)
    for rows in classes:
        yield Graph(n, list(rows))


def class_counts(n: int) -> dict[int, int]:
    """Isomorphism-class counts on n vertices keyed by edge count."""
    if n > FULL_CACHE_MAX:
        raise GuardError(f"full class counts cached only up to n={FULL_CACHE_MAX}")
    return {e: len(cls) for e, cls in sorted(_classes_by_edges(n).items())}


def labeled_class_counts(n: int) -> dict[int, int]:
    """Independent recount: enumerate all labeled graphs on n vertices and
    deduplicate by canonical form.  Exponential; guarded to n <= 6."""
    if n > 6:
        raise GuardError(f"labeled recount is 2^binom2(n) work; n <= 6 only, got {n}")
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    seen: dict[int, set[tuple[int, ...]]] = {}
    for word in range(1 << len(pairs)):
        rows = [0] * n
        for idx, (i, j) in enumerate(pairs):
            if word >> idx & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        e = sum(r.bit_count() for r in rows) // 2
        seen.setdefault(e, set()).add(canonical_rows(tuple(rows), n))
    return {e: len(forms) for e, forms in sorted(seen.items())}


# ---------------------------------------------------------------------------
# Arrowing


def _has_induced_size(rows: list[int] | tuple[int, ...], n: int, m: int, f: int) -> bool:
    """True iff some m-subset induces exactly f edges.

    Depth-first subset search with monotone pruning: the induced count never
    decreases as vertices are added, and with r picks left and j made it can
    grow by at most r*j + r*(r-1)/2.
    """

    def rec(start: int, mask: int, j: int, count: int) -> bool:
        if j == m:
            return count == f
        r = m - j
        if count > f or count + r * j + r * (r - 1) // 2 < f:
            return False
        for v in range(start, n - r + 1):
            if rec(v + 1, mask | (1 << v), j + 1, count + (rows[v] & mask).bit_count()):
                return True
        return False

    return rec(0, 0, 0, 0)


def induced_size_set(g: Graph, m: int) -> frozenset[int]:
    """All induced edge counts over m-subsets of g."""
    if not 0 < m <= g.n:
        raise DomainError(f"need 1 <= m <= {g.n}, got m={m}")
    rows = g.rows
    n = g.n
    sizes: set[int] = set()

    def rec(start: int, mask: int, j: int, count: int) -> None:
        if j == m:
            sizes.add(count)
            return
        for v in range(start, n - (m - j) + 1):
            rec(v + 1, mask | (1 << v), j + 1, count + (rows[v] & mask).bit_count())

    rec(0, 0, 0, 0)
    return frozenset(sizes)


def arrows(g: Graph, pair: PairMF) -> bool:
    """True iff g has an induced subgraph on pair.m vertices with pair.f edges."""
    if pair.m > g.n:
        raise DomainError(f"arrows needs pair.m <= n, got m={pair.m} > n={g.n}")
    return _has_induced_size(g.rows, g.n, pair.m, pair.f)


@dataclass(frozen=True)
class ArrowVerdict:
    n: int
    e: int
    pair: PairMF
    arrows: bool
    counterexample: Graph | None


def arrows_pair(
    n: int, e: int, pair: PairMF, query_guard: int = DEFAULT_QUERY_GUARD
) -> ArrowVerdict:
    """Does every graph with n vertices and e edges arrow the pair?

    Classes are scanned in canonical order, so a returned counterexample is
    the lexicographically least canonical form among the failures.
    """
    if pair.m > n:
        raise DomainError(f"pair order {pair.m} exceeds n={n}")
    for g in enumerate_graphs(n, e, query_guard=query_guard):
        if not arrows(g, pair):
            return ArrowVerdict(n, e, pair, False, g)
    return ArrowVerdict(n, e, pair, True, None)


@dataclass(frozen=True)
class ArrowReport:
    """S_n for one pair: which e force the pair, one non-arrowing graph for the
    rest, and the fixed-n fraction |S| / (binom2(n)+1).

    The fraction is an observation at this n only; it is not the limiting
    density, whose bias at small n is unknown.
    """

    n: int
    pair: PairMF
    S: tuple[int, ...]
    counterexamples: dict[int, str]
    sigma_estimate: float


def compute_S_n(
    n: int,
    pair: PairMF,
    jobs: int = 1,
    sweep_guard: int = DEFAULT_SWEEP_GUARD,
) -> ArrowReport:
    """Full report over e in [0, binom2(n)]; e-ranges may be chunked across
    workers, merged in order."""
    if n > sweep_guard:
        raise GuardError(
            f"S_n sweep guard: n={n} exceeds {sweep_guard} "
            f"(roughly {class_count_estimate(n):.3g} classes)"
        )
    if pair.m > n:
        raise DomainError(f"pair order {pair.m} exceeds n={n}")
    _ = list(enumerate_graphs(n, 0))  # warm the shared class cache serially

    def chunk_fn(e_lo: int, e_hi: int) -> list[tuple[int, bool, str | None]]:
        out = []
        for e in range(e_lo, e_hi + 1):
            verdict = arrows_pair(n, e, pair, query_guard=max(n, DEFAULT_QUERY_GUARD))
            cex = to_graph6(verdict.counterexample) if verdict.counterexample else None
            out.append((e, verdict.arrows, cex))
        return out

    total = binom2(n)
    chunk = max(1, (total + 1 + max(jobs, 1) - 1) // max(jobs, 1))
    rows = run_chunked(chunk_fn, 0, total, jobs=jobs, chunk=chunk)
    S = tuple(e for e, ok, _ in rows if ok)
    counterexamples = {e: cex for e, ok, cex in rows if not ok and cex is not None}
    return ArrowReport(n, pair, S, counterexamples, len(S) / (total + 1))


# ---------------------------------------------------------------------------
# Explicit clique-plus-forest oracle (independent of the floor criterion)


def clique_forest_oracle(pair: PairMF, max_m: int = ORACLE_MAX_M) -> bool:
    """True iff some explicit clique-plus-forest graph realizes the pair.

    Enumerates every clique size x and builds an actual star forest with the
    remaining edge budget, verifying acyclicity and the total count on the
    constructed graph.  Deliberately shares no code with the floor bounds."""
    m, f = pair.m, pair.f
    if m > max_m:
        raise GuardError(
            f"explicit oracle is exponential-free but still guarded to m <= {max_m}; "
            f"got m={m} (use the criterion module beyond)"
        )
    for x in range(m + 1):
        clique_edges = binom2(x)
        if clique_edges > f:
            break
        rest = m - x
        extra = f - clique_edges
        if rest == 0:
            if extra == 0:
                return True
            continue
        if extra > rest - 1:
            continue
        g = Graph(m)
        for u in range(x):
            for v in range(u + 1, x):
                g.add_edge(u, v)
        for i in range(extra):
            g.add_edge(x, x + 1 + i)
        forest_part = Graph(rest, [r >> x for r in g.rows[x:]])
        if g.edge_count() == f and girth(forest_part) == math.inf:
            return True
        raise AssertionError(f"oracle construction failed for m={m}, f={f}, x={x}")
    return False
