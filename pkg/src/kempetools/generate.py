"""Isomorph-free generation of all connected cubic graphs on up to ten
vertices, by backtracking over back-neighbour sets with a canonical-
labeling filter at the leaves.

The canonical form of a graph is the labeling whose upper-triangle
adjacency bitstring (column-major, as in graph6) is greatest over all
vertex permutations.  The generator only emits canonically labeled
graphs, so each isomorphism class appears exactly once.  Two facts prune
the search: in the canonical labeling of a connected cubic graph, vertex
0's neighbours are exactly {1, 2, 3}, and every other vertex has a
neighbour with a smaller id.
"""

from __future__ import annotations

import itertools

from .graph import Graph, encode_graph6


def _is_canonical(g: Graph) -> bool:
    """Is the identity labeling the lex-greatest one?

    Searches for a relabeling with a strictly greater column bitstring;
    branches whose columns fall below the identity's are cut, branches
    that rise above it reject immediately.
    """
    n = g.n
    target_cols = []
    for j in range(n):
        col = 0
        for i in range(j):
            col = (col << 1) | (1 if g.has_edge(i, j) else 0)
        target_cols.append(col)

    def extend(prefix: list[int], used: int) -> bool:
        depth = len(prefix)
        if depth == n:
            return False
        tcol = target_cols[depth]
        ties = []
        for v in range(n):
            if used >> v & 1:
                continue
            col = 0
            for u in prefix:
                col = (col << 1) | (1 if g.has_edge(u, v) else 0)
            if col > tcol:
                return True
            if col == tcol:
                ties.append(v)
        for v in ties:
            prefix.append(v)
            if extend(prefix, used | (1 << v)):
                return True
            prefix.pop()
        return False

    return not extend([], 0)


def gen_cubic(n: int) -> list[Graph]:
    """All connected cubic graphs on n vertices, one per isomorphism
    class, in canonical labeling, sorted by graph6 encoding.

    n must be even with 4 <= n <= 10.
    """
    if n % 2 or not 4 <= n <= 10:
        raise ValueError("connected cubic generation needs even n with 4 <= n <= 10")
    out: list[Graph] = []
    # Vertex 0's neighbours are 1, 2, 3 in any canonical labeling.
    deg = [3, 1, 1, 1] + [0] * (n - 4)
    edges = [(0, 1), (0, 2), (0, 3)]

    def residual_ok(v: int) -> bool:
        # Degrees of 0..v can only grow through edges to the n-1-v later
        # vertices: one edge per later vertex each, three in total there.
        future = n - 1 - v
        need = 0
        for u in range(v + 1):
            r = 3 - deg[u]
            if r > future:
                return False
            need += r
        return need <= 3 * future

    def place(v: int) -> None:
        if v == n:
            if all(d == 3 for d in deg):
                g = Graph(n, edges)
                if _is_canonical(g):
                    out.append(g)
            return
        pool = [u for u in range(v) if deg[u] < 3]
        lo = 0 if deg[v] > 0 else 1  # every vertex needs an earlier neighbour
        hi = 3 - deg[v]
        for size in range(lo, hi + 1):
            for back in itertools.combinations(pool, size):
                for u in back:
                    deg[u] += 1
                deg[v] += size
                edges.extend((u, v) for u in back)
                if residual_ok(v):
                    place(v + 1)
                del edges[len(edges) - size:]
                for u in back:
                    deg[u] -= 1
                deg[v] -= size

    place(1)
    out.sort(key=encode_graph6)
    return out
