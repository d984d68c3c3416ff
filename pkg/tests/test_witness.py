"""Witness construction, structural verification, and the exhaustive check."""

import math

import pytest

from avoidpairs.criterion import PairMF
from avoidpairs.errors import DomainError, GuardError
from avoidpairs.exactarith import binom2
from avoidpairs.graphs import Graph, girth
from avoidpairs.witness import (
    Infeasible,
    WitnessGraph,
    build_witness,
    build_witness_or_complement,
    exhaustive_arrow_check,
    verify_witness,
)


def test_clique_size_rule():
    w = build_witness(10, 3, 10)
    assert w.clique_vertices == frozenset({0, 1, 2})  # binom2(3) = 3 <= 3 <= binom2(4)-1
    assert w.graph.edge_count() == 3
    assert all(w.graph.degree(v) == 0 for v in w.girth_part)

    w = build_witness(10, 45, 5)
    assert len(w.clique_vertices) == 10 and not w.girth_part
    assert w.graph == Graph.complete(10)

    w = build_witness(8, 21, 8)
    assert len(w.clique_vertices) == 7
    assert w.girth_part == frozenset({7})

    w = build_witness(12, 0, 5)
    assert not w.clique_vertices and w.graph.edge_count() == 0


def test_build_validation():
    with pytest.raises(DomainError):
        build_witness(5, 11, 5)
    with pytest.raises(DomainError):
        build_witness(5, 3, 2)


def test_or_complement_rule():
    w = build_witness_or_complement(12, 60, 5)
    assert w.complemented and w.graph.edge_count() == 60
    s = w.structure_graph()
    assert s.edge_count() == 6

    w = build_witness_or_complement(12, 0, 5)
    assert not w.complemented and w.graph.edge_count() == 0

    w = build_witness_or_complement(12, 66, 5)
    assert w.complemented and w.graph == Graph.complete(12)


def test_honest_infeasibility():
    built = build_witness(10, 44, 5)
    assert isinstance(built, Infeasible)
    assert built.k == 9 and built.missing == 8
    # a pair at its own scale: every (5,5)-graph trivially arrows (5,5)
    assert isinstance(build_witness(5, 5, 5), Infeasible)


def test_builder_soundness_and_determinism():
    for n in range(3, 13):
        for e in range(binom2(n) + 1):
            w1 = build_witness_or_complement(n, e, n)
            w2 = build_witness_or_complement(n, e, n)
            if isinstance(w1, Infeasible):
                assert w1 == w2
                continue
            assert w1.graph == w2.graph
            assert w1.graph.edge_count() == e
            s = w1.structure_graph()
            clique = sorted(w1.clique_vertices)
            for i, u in enumerate(clique):
                for v in clique[i + 1 :]:
                    assert s.has_edge(u, v)
            for u in w1.clique_vertices:
                for v in w1.girth_part:
                    assert not s.has_edge(u, v)


def test_verify_witness_pass_and_failures():
    w = build_witness_or_complement(50, 30, 41)
    assert verify_witness(w, PairMF(40, 390)).passed

    bad_pair = verify_witness(w, PairMF(5, 4))
    assert not bad_pair.passed and bad_pair.failures == ("realizable",)

    # inject a cross edge: structural failure is named
    g = w.graph.copy()
    u = min(w.clique_vertices)
    v = min(x for x in w.girth_part if not g.has_edge(u, x))
    g.add_edge(u, v)
    tampered = WitnessGraph(g, w.clique_vertices, w.girth_part, w.girth_bound, w.complemented)
    verdict = verify_witness(tampered, PairMF(40, 390))
    assert not verdict.passed and "cross-edges" in verdict.failures

    # girth bound too low for the pair
    short = build_witness(30, 20, 5)
    assert isinstance(short, WitnessGraph)
    # (5,5) needs girth above 5; a p=5 witness with an actual short cycle would
    # fail, but the greedy builder only ever places forests, so girth is inf
    part = sorted(short.girth_part)
    sub = Graph(len(part))
    for i, u in enumerate(part):
        for j in range(i + 1, len(part)):
            if short.graph.has_edge(u, part[j]):
                sub.add_edge(i, j)
    assert girth(sub) == math.inf


def test_verify_witness_flags_broken_partition_and_clique():
    g = Graph.complete(6)
    w = WitnessGraph(g, frozenset({0, 1}), frozenset({3, 4, 5}), 6, False)
    verdict = verify_witness(w, PairMF(5, 5))
    assert "partition" in verdict.failures

    g2 = Graph.from_edges(4, [(0, 1), (2, 3)])
    w2 = WitnessGraph(g2, frozenset({0, 1, 2}), frozenset({3}), 6, False)
    verdict2 = verify_witness(w2, PairMF(5, 5))
    assert "clique-complete" in verdict2.failures


def test_complemented_witness_verifies_against_complement_pair():
    w = build_witness_or_complement(30, binom2(30) - 10, 31)
    assert w.complemented
    # the complement pair of (5,5) is itself, so the certificate still applies
    assert verify_witness(w, PairMF(5, 5)).passed


def test_exhaustive_arrow_check():
    assert exhaustive_arrow_check(Graph.complete(4), PairMF(3, 3))
    c5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert exhaustive_arrow_check(c5, PairMF(3, 1))
    assert not exhaustive_arrow_check(Graph(6), PairMF(3, 1))
    assert not exhaustive_arrow_check(Graph(3), PairMF(5, 2))  # m > n
    with pytest.raises(GuardError):
        exhaustive_arrow_check(Graph(64), PairMF(32, 100))


def test_certified_nonarrowing_matches_exhaustive_check():
    pair = PairMF(5, 5)  # impossible in both orientations
    for n, e in [(8, 10), (9, 14), (10, 6), (12, 40), (12, 26)]:
        w = build_witness_or_complement(n, e, max(6, pair.m + 1))
        if isinstance(w, Infeasible):
            continue
        verdict = verify_witness(w, pair)
        assert verdict.passed
        assert not exhaustive_arrow_check(w.graph, pair)
