"""Exhaustive ground truth over the colouring state space: the partition
into Kempe classes, a breadth-first witness oracle, and the corpus-level
single-class verification campaign.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .coloring import (
    DEFAULT_CEILING,
    Coloring,
    KempeMove,
    KempeSequence,
    check_proper,
    enumerate_colorings,
    swap_chain,
)
from .errors import ImproperColoringError
from .graph import Graph, encode_graph6, is_connected, is_cubic, is_k4, is_prism


def neighbor_moves(g: Graph, cols: tuple[int, ...], k: int):
    """Every distinct Kempe change from `cols`, one move per chain.

    Yields (move, new_cols) with the move anchored at the least vertex of
    its chain, pairs ascending, chains by anchor ascending.  Chains whose
    exchange fixes the colouring (single-colour components) are included;
    callers that only care about distinct successors skip self-loops.
    """
    n = g.n
    for a, b in itertools.combinations(range(1, k + 1), 2):
        seen = [False] * n
        for x in range(n):
            if seen[x] or cols[x] not in (a, b):
                continue
            chain = [x]
            seen[x] = True
            stack = [x]
            while stack:
                u = stack.pop()
                for w in g.adj[u]:
                    if not seen[w] and cols[w] in (a, b):
                        seen[w] = True
                        chain.append(w)
                        stack.append(w)
            yield KempeMove(x, a, b), swap_chain(cols, chain, a, b)


@dataclass(frozen=True)
class ClassReport:
    """Summary of the Kempe-class partition of one graph's colourings."""

    graph_id: str
    k: int
    colorings: int
    classes: int
    sizes: tuple[int, ...]
    representatives: tuple[Coloring, ...]


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if rx > ry:
                rx, ry = ry, rx
            self.parent[ry] = rx


def kempe_classes(
    g: Graph,
    k: int,
    ceiling: int = DEFAULT_CEILING,
    graph_id: str | None = None,
) -> tuple[ClassReport, list[list[Coloring]]]:
    """Partition all proper k-colourings by connectivity under Kempe changes.

    Returns the report plus the partition itself; class representatives are
    the lexicographically least colouring of each class, and classes are
    ordered by their representative.
    """
    colorings = enumerate_colorings(g, k, ceiling)
    index = {c.colors: i for i, c in enumerate(colorings)}
    uf = _UnionFind(len(colorings))
    for i, c in enumerate(colorings):
        for _, new_cols in neighbor_moves(g, c.colors, k):
            j = index[new_cols]
            if j != i:
                uf.union(i, j)
    groups: dict[int, list[int]] = {}
    for i in range(len(colorings)):
        groups.setdefault(uf.find(i), []).append(i)
    classes = [
        [colorings[i] for i in members]
        for _, members in sorted(groups.items())
    ]
    report = ClassReport(
        graph_id=graph_id if graph_id is not None else encode_graph6(g),
        k=k,
        colorings=len(colorings),
        classes=len(classes),
        sizes=tuple(sorted((len(cl) for cl in classes), reverse=True)),
        representatives=tuple(cl[0] for cl in classes),
    )
    return report, classes


def bfs_path(
    g: Graph,
    alpha: Coloring,
    beta: Coloring,
    k: int | None = None,
    ceiling: int = DEFAULT_CEILING,
) -> KempeSequence | None:
    """Shortest Kempe-change witness from alpha to beta, or None if the two
    colourings lie in different classes."""
    if alpha.k != beta.k:
        raise ImproperColoringError("colourings must use the same palette")
    k = alpha.k if k is None else k
    check_proper(g, alpha, "alpha")
    check_proper(g, beta, "beta")
    if alpha.colors == beta.colors:
        return KempeSequence(alpha, ())
    start, goal = alpha.colors, beta.colors
    prev: dict[tuple[int, ...], tuple[tuple[int, ...], KempeMove] | None] = {start: None}
    queue = deque([start])
    while queue:
        cols = queue.popleft()
        for move, new_cols in neighbor_moves(g, cols, k):
            if new_cols in prev:
                continue
            if len(prev) > ceiling:
                raise MemoryError("state space exceeded the configured ceiling")
            prev[new_cols] = (cols, move)
            if new_cols == goal:
                moves = []
                cur = new_cols
                while prev[cur] is not None:
                    cur, mv = prev[cur]
                    moves.append(mv)
                moves.reverse()
                return KempeSequence(alpha, tuple(moves))
            queue.append(new_cols)
    return None


@dataclass(frozen=True)
class VerifyRow:
    """Per-graph verdict of the single-class verification campaign."""

    graph6: str
    n: int
    colorings: int
    classes: int
    sizes: tuple[int, ...]
    verdict: str
    note: str = ""


def expected_verdict(g: Graph, report: ClassReport) -> str:
    if is_k4(g):
        return "PASS" if report.colorings == 0 else "FAIL"
    if is_prism(g):
        return "PASS" if report.classes == 2 else "FAIL"
    return "PASS" if report.classes == 1 else "FAIL"


def verify_corpus(
    graphs,
    k: int = 3,
    ceiling: int = DEFAULT_CEILING,
) -> tuple[list[VerifyRow], dict[str, int]]:
    """Check the expected Kempe-class count for every cubic graph in the
    stream: K4 must have no colourings, the prism exactly two classes, and
    every other graph exactly one.  Non-cubic entries are reported and
    skipped.  Returns the per-graph rows and a totals summary."""
    rows: list[VerifyRow] = []
    for g in graphs:
        g6 = encode_graph6(g)
        if not is_cubic(g):
            rows.append(VerifyRow(g6, g.n, 0, 0, (), "SKIP", "not cubic"))
            continue
        if not is_connected(g):
            rows.append(VerifyRow(g6, g.n, 0, 0, (), "SKIP", "not connected"))
            continue
        report, _ = kempe_classes(g, k, ceiling, graph_id=g6)
        rows.append(
            VerifyRow(
                g6,
                g.n,
                report.colorings,
                report.classes,
                report.sizes,
                expected_verdict(g, report),
            )
        )
    summary = {
        "graphs": len(rows),
        "pass": sum(r.verdict == "PASS" for r in rows),
        "fail": sum(r.verdict == "FAIL" for r in rows),
        "skip": sum(r.verdict == "SKIP" for r in rows),
    }
    return rows, summary
