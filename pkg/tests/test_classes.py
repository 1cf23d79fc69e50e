"""Kempe-class partitions, the breadth-first oracle, corpus verification."""

import random

import networkx as nx

from kempetools import (
    Coloring,
    bfs_path,
    complete_graph,
    enumerate_colorings,
    kempe_classes,
    replay,
    validate_sequence,
    verify_corpus,
)
from kempetools.classes import neighbor_moves

from conftest import to_networkx


def test_prism_two_classes(prism):
    report, classes = kempe_classes(prism, 3)
    assert report.colorings == 12
    assert report.classes == 2
    assert report.sizes == (6, 6)
    assert sorted(len(c) for c in classes) == [6, 6]
    # representatives are the least member of each class
    for rep, cls in zip(report.representatives, classes):
        assert rep == min(cls, key=lambda c: c.colors)


def test_k33_single_class(k33):
    report, _ = kempe_classes(k33, 3)
    assert report.colorings == 42
    assert report.classes == 1


def test_triangle_single_class():
    report, _ = kempe_classes(complete_graph(3), 3)
    assert (report.colorings, report.classes) == (6, 1)


def test_k4_empty():
    report, classes = kempe_classes(complete_graph(4), 3)
    assert report.colorings == 0
    assert report.classes == 0
    assert classes == []


def test_sizes_sum_to_total(prism, k33, two_diamond):
    for g in (prism, k33, two_diamond):
        report, _ = kempe_classes(g, 3)
        assert sum(report.sizes) == report.colorings


def _state_graph(g, k):
    colorings = enumerate_colorings(g, k)
    h = nx.Graph()
    h.add_nodes_from(c.colors for c in colorings)
    for c in colorings:
        for _, new in neighbor_moves(g, c.colors, k):
            if new != c.colors:
                h.add_edge(c.colors, new)
    return h


def test_partition_matches_networkx_components(prism, k33, two_diamond):
    for g in (prism, k33, two_diamond):
        report, classes = kempe_classes(g, 3)
        h = _state_graph(g, 3)
        comps = list(nx.connected_components(h))
        assert len(comps) == report.classes
        assert sorted(map(len, comps), reverse=True) == list(report.sizes)


def test_bfs_identity(prism):
    c = enumerate_colorings(prism, 3)[0]
    seq = bfs_path(prism, c, c)
    assert seq is not None and len(seq.moves) == 0


def test_bfs_cross_class_absent(prism):
    # top (1,2,3) with bottom derangement (2,3,1) vs bottom (3,1,2)
    a = Coloring(3, (1, 2, 3, 2, 3, 1))
    b = Coloring(3, (1, 2, 3, 3, 1, 2))
    assert bfs_path(prism, a, b) is None


def test_bfs_witnesses_validate_and_are_shortest(k33):
    rng = random.Random(9)
    cols = enumerate_colorings(k33, 3)
    h = _state_graph(k33, 3)
    for _ in range(20):
        a, b = rng.choice(cols), rng.choice(cols)
        seq = bfs_path(k33, a, b)
        assert seq is not None
        assert validate_sequence(k33, seq) is None
        assert replay(k33, seq) == b
        assert len(seq.moves) == nx.shortest_path_length(h, a.colors, b.colors)


def test_bfs_pairs_agree_with_partition(prism):
    _, classes = kempe_classes(prism, 3)
    index = {}
    for i, cls in enumerate(classes):
        for c in cls:
            index[c.colors] = i
    cols = enumerate_colorings(prism, 3)
    for a in cols:
        for b in cols:
            seq = bfs_path(prism, a, b)
            if index[a.colors] == index[b.colors]:
                assert seq is not None and replay(prism, seq) == b
            else:
                assert seq is None


def test_verify_corpus_n6(corpus6):
    rows, summary = verify_corpus(corpus6)
    assert summary == {"graphs": 2, "pass": 2, "fail": 0, "skip": 0}
    by_classes = sorted(r.classes for r in rows)
    assert by_classes == [1, 2]


def test_verify_corpus_k4():
    rows, summary = verify_corpus([complete_graph(4)])
    assert rows[0].verdict == "PASS"
    assert rows[0].colorings == 0


def test_verify_corpus_skips_non_cubic():
    rows, summary = verify_corpus([complete_graph(3)])
    assert rows[0].verdict == "SKIP"
    assert summary["skip"] == 1


def test_verify_empty_corpus():
    rows, summary = verify_corpus([])
    assert rows == [] and summary["graphs"] == 0
