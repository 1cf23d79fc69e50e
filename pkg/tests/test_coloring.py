"""Chains, changes, enumeration, matching, replay, canonicalisation."""

import itertools
import random

import pytest

from kempetools import (
    CeilingExceededError,
    Coloring,
    ImproperColoringError,
    InvalidMoveError,
    KempeMove,
    KempeSequence,
    canonical_class,
    colorings_match,
    complete_graph,
    cycle_graph,
    enumerate_colorings,
    kempe_chain,
    kempe_change,
    replay,
    reverse_sequence,
    validate_sequence,
)
from kempetools.classes import neighbor_moves
from kempetools.coloring import is_proper

from conftest import chromatic_polynomial


def triangle():
    return complete_graph(3)


def test_prism_chain_example(prism):
    c = Coloring(3, (1, 2, 3, 2, 3, 1))
    assert kempe_chain(prism, c, 0, 1, 2) == (0, 1, 3, 5)


def test_single_vertex_chain():
    # no neighbour of the anchor carries the other colour of the pair
    g = complete_graph(2)
    c = Coloring(3, (1, 2))
    assert kempe_chain(g, c, 0, 1, 3) == (0,)
    c3 = Coloring(3, (1, 2, 3))
    assert kempe_chain(triangle(), c3, 0, 1, 2) == (0, 1)


def test_chain_requires_anchor_in_pair(prism):
    c = Coloring(3, (1, 2, 3, 2, 3, 1))
    with pytest.raises(InvalidMoveError):
        kempe_chain(prism, c, 0, 2, 3)


def test_prism_change_example(prism):
    c = Coloring(3, (1, 2, 3, 2, 3, 1))
    new = kempe_change(prism, c, KempeMove(0, 1, 2))
    assert new.colors == (2, 1, 3, 1, 3, 2)
    assert is_proper(prism, new)


def test_change_is_involution(prism, k33):
    rng = random.Random(3)
    for g in (prism, k33):
        cols = enumerate_colorings(g, 3)
        for _ in range(25):
            c = rng.choice(cols)
            x = rng.randrange(g.n)
            a = c[x]
            b = rng.choice([col for col in (1, 2, 3) if col != a])
            m = KempeMove(x, a, b)
            assert kempe_change(g, kempe_change(g, c, m), m) == c


def test_single_vertex_recolour(prism):
    # vertex 4's neighbours are coloured {2, 2, 1}: colour 3 -> 2 frees...
    c = Coloring(3, (1, 2, 3, 2, 3, 1))
    # N(4) = {1, 3, 5} coloured 2, 2, 1; vertex 4 is a single-vertex
    # (3, x)-chain for any x missing around it: none here, so use k33-style
    g = complete_graph(2)
    c2 = Coloring(3, (1, 2))
    out = kempe_change(g, c2, KempeMove(0, 1, 3))
    assert out.colors == (3, 2)


def test_enumerate_counts(prism):
    assert enumerate_colorings(complete_graph(4), 3) == []
    assert len(enumerate_colorings(triangle(), 3)) == 6
    assert len(enumerate_colorings(prism, 3)) == 12
    assert len(enumerate_colorings(cycle_graph(4), 3)) == 18


def test_enumerate_matches_chromatic_polynomial(corpus6, corpus8):
    from kempetools import Graph

    rng = random.Random(8)
    graphs = list(corpus6) + list(corpus8)
    for _ in range(4):
        n = rng.randrange(2, 8)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.45]
        graphs.append(Graph(n, edges))
    for g in graphs:
        if g.n > 8:
            continue
        assert len(enumerate_colorings(g, 3)) == chromatic_polynomial(g, 3)


def test_enumerate_is_sorted_and_distinct(prism):
    cols = [c.colors for c in enumerate_colorings(prism, 3)]
    assert cols == sorted(cols)
    assert len(set(cols)) == len(cols)


def test_enumeration_ceiling():
    from kempetools import Graph

    with pytest.raises(CeilingExceededError):
        enumerate_colorings(Graph(10, ()), 3, ceiling=100)


def test_match_examples(prism):
    alpha = Coloring(3, (1, 2, 3, 2, 3, 1))
    beta = Coloring(3, (1, 3, 2, 3, 2, 1))
    x, y, w = colorings_match(prism, alpha, beta)
    assert alpha[x] == alpha[y] and beta[x] == beta[y]
    assert w in set(prism.adj[x]) & set(prism.adj[y])
    # the pair from the specification's walk-through is also a witness
    assert alpha[1] == alpha[3] and beta[1] == beta[3] and 0 in prism.adj[1]


def test_match_of_identical_colorings(prism):
    alpha = Coloring(3, (1, 2, 3, 2, 3, 1))
    assert colorings_match(prism, alpha, alpha) is not None


def test_triangle_never_matches():
    g = triangle()
    for a in enumerate_colorings(g, 3):
        for b in enumerate_colorings(g, 3):
            assert colorings_match(g, a, b) is None


def test_replay_and_validate(prism):
    c = Coloring(3, (1, 2, 3, 2, 3, 1))
    assert replay(prism, KempeSequence(c, ())) == c
    m = KempeMove(0, 1, 2)
    seq = KempeSequence(c, (m,))
    assert replay(prism, seq) == kempe_change(prism, c, m)
    assert validate_sequence(prism, seq) is None


def test_validate_reports_bad_move(prism):
    c = Coloring(3, (1, 2, 3, 2, 3, 1))
    seq = KempeSequence(c, (KempeMove(0, 2, 3),))  # anchor coloured 1
    v = validate_sequence(prism, seq)
    assert v is not None and v.index == 0


def test_validate_rejects_improper_start(prism):
    bad = Coloring(3, (1, 1, 3, 2, 3, 1))
    v = validate_sequence(prism, KempeSequence(bad, ()))
    assert v is not None and v.index == -1


def test_reverse_sequence(prism):
    rng = random.Random(4)
    cols = enumerate_colorings(prism, 3)
    c = rng.choice(cols)
    moves = []
    cur = c
    for _ in range(5):
        options = list(neighbor_moves(prism, cur.colors, 3))
        m, new = rng.choice(options)
        moves.append(m)
        cur = Coloring(3, new)
    seq = KempeSequence(c, tuple(moves))
    rev = reverse_sequence(prism, seq)
    assert rev.start == cur
    assert replay(prism, rev) == c


def test_canonical_class_examples(prism):
    assert canonical_class(Coloring(3, (2, 3, 1))).colors == (1, 2, 3)
    reps = {canonical_class(c).colors for c in enumerate_colorings(prism, 3)}
    assert len(reps) == 2
    least = Coloring(3, (1, 2, 3, 2, 3, 1))
    assert canonical_class(canonical_class(least)) == canonical_class(least)


def test_canonical_class_constant_on_orbits(prism):
    for c in enumerate_colorings(prism, 3):
        base = canonical_class(c)
        for perm in itertools.permutations((1, 2, 3)):
            relabeled = Coloring(3, tuple(perm[x - 1] for x in c.colors))
            assert canonical_class(relabeled) == base


def test_coloring_shape_checks(prism):
    with pytest.raises(ImproperColoringError):
        Coloring(3, (1, 2, 4))
    bad = Coloring(3, (1, 1, 1, 1, 1, 1))
    assert not is_proper(prism, bad)
