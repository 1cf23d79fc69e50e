"""Corpus generation: counts, non-isomorphism, canonical determinism."""

import itertools

import pytest

from kempetools import (
    complete_graph,
    encode_graph6,
    gen_cubic,
    is_connected,
    is_cubic,
    is_isomorphic,
    is_k4,
    is_prism,
)


def test_n4_is_k4():
    graphs = gen_cubic(4)
    assert len(graphs) == 1
    assert is_k4(graphs[0])


def test_n6_prism_and_k33(corpus6, k33):
    assert len(corpus6) == 2
    assert sum(1 for g in corpus6 if is_prism(g)) == 1
    assert sum(1 for g in corpus6 if is_isomorphic(g, k33)) == 1


def test_n8_count(corpus8):
    assert len(corpus8) == 5


def test_n10_count(corpus10):
    assert len(corpus10) == 19


def test_all_graphs_connected_cubic(corpus6, corpus8):
    for g in corpus6 + corpus8:
        assert is_cubic(g)
        assert is_connected(g)


def test_pairwise_non_isomorphic(corpus6, corpus8):
    for corpus in (corpus6, corpus8):
        for g, h in itertools.combinations(corpus, 2):
            assert not is_isomorphic(g, h)


def test_deterministic_and_sorted(corpus6):
    again = gen_cubic(6)
    assert [encode_graph6(g) for g in again] == [encode_graph6(g) for g in corpus6]
    words = [encode_graph6(g) for g in corpus6]
    assert words == sorted(words)


@pytest.mark.parametrize("bad", [3, 5, 2, 12, 0, -4])
def test_out_of_range_rejected(bad):
    with pytest.raises(ValueError):
        gen_cubic(bad)
