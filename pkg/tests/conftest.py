"""Shared fixtures: the fixed instance zoo and independent test oracles."""

from __future__ import annotations

import itertools
import random

import pytest

from kempetools import Graph, gen_cubic, triangular_prism


@pytest.fixture(scope="session")
def prism():
    return triangular_prism()


@pytest.fixture(scope="session")
def k33():
    return Graph(6, [(i, j) for i in (0, 1, 2) for j in (3, 4, 5)])


@pytest.fixture(scope="session")
def two_diamond():
    """Two diamonds (hubs 0,1 and 4,5; tips 2,3 and 6,7) joined tip-to-tip:
    cubic, 2-connected but not 3-connected."""
    return Graph(8, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3),
                     (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (2, 6), (3, 7)])


@pytest.fixture(scope="session")
def tri_k4():
    """Triangle replacement of K4 (n=12): 3-connected, cubic, claw-free,
    neither K4 nor the prism.  The smallest graph exercising the
    claw-free solver tier."""
    return Graph(12, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                      (6, 7), (7, 8), (6, 8), (9, 10), (10, 11), (9, 11),
                      (0, 3), (1, 6), (2, 9), (4, 7), (5, 10), (8, 11)])


@pytest.fixture(scope="session")
def corpus6():
    return gen_cubic(6)


@pytest.fixture(scope="session")
def corpus8():
    return gen_cubic(8)


@pytest.fixture(scope="session")
def corpus10():
    return gen_cubic(10)


# ---------------------------------------------------------------------------
# Independent oracles


def chromatic_polynomial(g: Graph, k: int) -> int:
    """Number of proper k-colourings by deletion-contraction."""

    def count(n, edges):
        if not edges:
            return k ** n
        (u, v), rest = edges[0], edges[1:]
        deleted = count(n, rest)
        merged = []
        for a, b in rest:
            a2 = u if a == v else a
            b2 = u if b == v else b
            a2 = a2 - 1 if a2 > v else a2
            b2 = b2 - 1 if b2 > v else b2
            if a2 != b2:
                merged.append((min(a2, b2), max(a2, b2)))
        contracted = count(n - 1, sorted(set(merged)))
        return deleted - contracted

    return count(g.n, list(g.edges))


def brute_force_separators(g: Graph, size: int):
    """All vertex subsets of the given size whose removal disconnects g."""
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    base = nx.number_connected_components(h)
    found = []
    for subset in itertools.combinations(range(g.n), size):
        if g.n - size == 0:
            continue
        sub = h.copy()
        sub.remove_nodes_from(subset)
        if sub.number_of_nodes() and nx.number_connected_components(sub) > base:
            found.append(subset)
    return found


def random_two_degenerate(rng: random.Random, n: int) -> Graph:
    """Connected graph built by attaching each vertex to at most two
    earlier ones; 2-degenerate by construction."""
    edges = set()
    for v in range(1, n):
        pool = list(range(v))
        for u in rng.sample(pool, min(len(pool), rng.choice((1, 1, 2, 2)))):
            edges.add((u, v))
    return Graph(n, edges)


def to_networkx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h
