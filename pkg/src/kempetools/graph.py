"""Immutable simple undirected graphs with the structural predicates the
recolouring solver needs: separators, degeneracy orderings, fixed-motif
detection, vertex identification, and graph6 / edge-list ingestion.

Vertices are dense 0-based integers.  Adjacency is kept both as sorted
neighbour tuples and, for n <= 64, as per-vertex bitmasks so motif scans
and chain searches get O(1) adjacency tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import GraphFormatError

GRAPH6_HEADER = ">>graph6<<"


class Graph:
    """A simple undirected graph on vertices 0..n-1.  Treat as immutable."""

    __slots__ = ("n", "adj", "masks", "_edges", "_hash")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            norm.add((u, v) if u < v else (v, u))
        adj = [[] for _ in range(n)]
        for u, v in sorted(norm):
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        if n <= 64:
            masks = [0] * n
            for u, v in norm:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            self.masks = tuple(masks)
        else:
            self.masks = None
        self._edges = tuple(sorted(norm))
        self._hash = hash((n, self._edges))

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        if self.masks is not None:
            return bool(self.masks[u] >> v & 1)
        return v in self.adj[u]

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._edges == other._edges
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self._edges)})"


# ---------------------------------------------------------------------------
# Fixed small graphs


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def triangular_prism() -> Graph:
    """Two triangles 0-1-2 and 3-4-5 joined by the spokes i -- i+3."""
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                     (0, 3), (1, 4), (2, 5)])


def claw_graph() -> Graph:
    return Graph(4, [(0, 1), (0, 2), (0, 3)])


def diamond_graph() -> Graph:
    """K4 minus one edge; vertices 2,3 are the nonadjacent tips."""
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def house_graph() -> Graph:
    """A 4-cycle 1-3-4-2 with an apex 0 over the edge 1-2."""
    return Graph(5, [(0, 1), (0, 2), (1, 2), (1, 3), (3, 4), (4, 2)])


def net_graph() -> Graph:
    """Triangle 0-1-2 with pendants 3, 4, 5 on the respective corners."""
    return Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


# ---------------------------------------------------------------------------
# graph6 / edge-list formats


def _graph6_bits(data: str) -> list[int]:
    bits = []
    for ch in data:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise GraphFormatError(f"character {ch!r} outside graph6 range 63..126")
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    return bits


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 word (optional '>>graph6<<' header allowed)."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    if not s:
        raise GraphFormatError("empty graph6 word")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} outside graph6 range 63..126")
    if s[0] != "~":
        n = ord(s[0]) - 63
        body = s[1:]
    elif len(s) >= 2 and s[1] != "~":
        if len(s) < 4:
            raise GraphFormatError("truncated graph6 length prefix")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        if n < 63:
            raise GraphFormatError("non-canonical long-form length prefix")
        body = s[4:]
    else:
        raise GraphFormatError("unsupported graph6 length prefix (n too large)")
    npairs = n * (n - 1) // 2
    nchars = (npairs + 5) // 6
    if len(body) != nchars:
        raise GraphFormatError(
            f"graph6 body has {len(body)} characters, expected {nchars} for n={n}"
        )
    bits = _graph6_bits(body)
    if any(bits[npairs:]):
        raise GraphFormatError("nonzero padding bits in graph6 word")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def encode_graph6(g: Graph) -> str:
    """Encode in canonical graph6 (shortest length prefix, no header)."""
    n = g.n
    if n <= 62:
        prefix = chr(n + 63)
    elif n <= 258047:
        prefix = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        raise GraphFormatError("graphs with more than 258047 vertices unsupported")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = "".join(
        chr(sum(b << (5 - k) for k, b in enumerate(bits[i:i + 6])) + 63)
        for i in range(0, len(bits), 6)
    )
    return prefix + body


def parse_edgelist(text: str) -> Graph:
    """Parse the text format: first line 'n m', then m lines 'u v'."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GraphFormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError("edge-list header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphFormatError("edge-list header must be two integers") from exc
    if len(lines) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"bad edge line: {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"bad edge line: {ln!r}") from exc
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphFormatError(f"edge ({u}, {v}) invalid for n={n}")
        edges.append((u, v))
    if len({(min(e), max(e)) for e in edges}) != len(edges):
        raise GraphFormatError("duplicate edge in edge-list input")
    return Graph(n, edges)


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Elementary operations


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) already present")
    return Graph(g.n, list(g.edges) + [(u, v)])


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on `vertices`.

    Returns (subgraph, kept) where kept[i] is the original id of the
    subgraph's vertex i (kept is sorted ascending).
    """
    kept = tuple(sorted(set(vertices)))
    index = {v: i for i, v in enumerate(kept)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges
        if u in index and v in index
    ]
    return Graph(len(kept), edges), kept


def remove_vertex(g: Graph, v: int) -> tuple[Graph, tuple[int, ...]]:
    return induced_subgraph(g, (u for u in g.vertices if u != v))


def connected_components(g: Graph, without=()) -> list[tuple[int, ...]]:
    """Components as sorted vertex tuples, ordered by least vertex.

    `without` removes vertices (and incident edges) before the sweep.
    """
    banned = set(without)
    seen = set(banned)
    comps = []
    for start in g.vertices:
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_regular(g: Graph, k: int) -> bool:
    return all(len(a) == k for a in g.adj)


def is_cubic(g: Graph) -> bool:
    return is_regular(g, 3)


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All triangles (x, y, z) with x < y < z, in lexicographic order."""
    out = []
    for x, y in g.edges:
        for z in g.adj[x]:
            if z > y and g.has_edge(y, z):
                out.append((x, y, z))
    out.sort()
    return out


def identify_vertices(g: Graph, x: int, y: int) -> tuple[Graph, dict[int, int]]:
    """Merge two non-adjacent vertices into one adjacent to N(x) | N(y).

    The merged vertex takes x's slot; ids above y shift down by one.
    Returns the new graph and the old-id -> new-id map.
    """
    if x == y:
        raise ValueError("cannot identify a vertex with itself")
    if g.has_edge(x, y):
        raise ValueError(f"vertices {x} and {y} are adjacent")
    mapping = {}
    for v in g.vertices:
        if v == y:
            continue
        mapping[v] = v if v < y else v - 1
    mapping[y] = mapping[x]
    edges = set()
    for u, v in g.edges:
        mu, mv = mapping[u], mapping[v]
        if mu != mv:
            edges.add((min(mu, mv), max(mu, mv)))
    return Graph(g.n - 1, edges), mapping


# ---------------------------------------------------------------------------
# Separators


@dataclass(frozen=True)
class Separator:
    """A vertex cut with a witnessing split of the remainder.

    side_a and side_b are nonempty, disjoint, cover V minus the cut, and
    no edge joins them.
    """

    vertices: tuple[int, ...]
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]


def separators_of_size(g: Graph, size: int) -> list[tuple[int, ...]]:
    """All vertex subsets of the given size whose removal disconnects g.

    Assumes g connected; exhaustive, intended for size <= 2 on small graphs.
    """
    found = []
    for subset in itertools.combinations(range(g.n), size):
        if g.n - size < 2:
            break
        if len(connected_components(g, without=subset)) > 1:
            found.append(subset)
    return found


def _is_clique(g: Graph, vertices) -> bool:
    return all(g.has_edge(u, v) for u, v in itertools.combinations(vertices, 2))


def _split_sides(g: Graph, cut) -> tuple[tuple[int, ...], tuple[int, ...]]:
    comps = connected_components(g, without=cut)
    side_a = comps[0]
    side_b = tuple(sorted(v for comp in comps[1:] for v in comp))
    return side_a, side_b


def find_min_separator(g: Graph, max_size: int) -> Separator | None:
    """Minimum-cardinality separator of size <= max_size, or None.

    Among minimum separators a clique separator is preferred when one
    exists; ties break to the lexicographically least vertex set.
    """
    if not is_connected(g):
        raise ValueError("separator search requires a connected graph")
    for size in range(1, min(max_size, g.n - 2) + 1):
        candidates = separators_of_size(g, size)
        if not candidates:
            continue
        cliques = [s for s in candidates if _is_clique(g, s)]
        cut = min(cliques) if cliques else min(candidates)
        side_a, side_b = _split_sides(g, cut)
        return Separator(cut, side_a, side_b)
    return None


# ---------------------------------------------------------------------------
# Degeneracy


@dataclass(frozen=True)
class DegeneracyOrdering:
    """Peeling number d with a witnessing elimination order."""

    d: int
    order: tuple[int, ...]


def degeneracy(g: Graph) -> DegeneracyOrdering:
    """Repeatedly remove a minimum-degree vertex (least id on ties)."""
    alive = set(g.vertices)
    deg = {v: g.degree(v) for v in g.vertices}
    order = []
    d = 0
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        d = max(d, deg[v])
        order.append(v)
        alive.remove(v)
        for w in g.adj[v]:
            if w in alive:
                deg[w] -= 1
    return DegeneracyOrdering(d, tuple(order))


# ---------------------------------------------------------------------------
# Fixed-motif detection


@dataclass(frozen=True)
class ClawEmbedding:
    """An induced K_{1,3}: center adjacent to three pairwise nonadjacent leaves."""

    center: int
    leaves: tuple[int, int, int]


def find_claw(g: Graph) -> ClawEmbedding | None:
    """Lexicographically least induced claw by (center, leaves), or None."""
    for w in g.vertices:
        for s, u, v in itertools.combinations(g.adj[w], 3):
            if not (g.has_edge(s, u) or g.has_edge(s, v) or g.has_edge(u, v)):
                return ClawEmbedding(w, (s, u, v))
    return None


@dataclass(frozen=True)
class NetEmbedding:
    """An induced net: triangle t_vertices with pendant p_vertices attached
    index-wise (t_vertices[i] -- p_vertices[i])."""

    t_vertices: tuple[int, int, int]
    p_vertices: tuple[int, int, int]


def _net_ok(g: Graph, tri, pend) -> bool:
    if len(set(pend)) != 3 or set(pend) & set(tri):
        return False
    for i in range(3):
        for j in range(3):
            if i != j and g.has_edge(pend[i], tri[j]):
                return False
    return not (
        g.has_edge(pend[0], pend[1])
        or g.has_edge(pend[0], pend[2])
        or g.has_edge(pend[1], pend[2])
    )


def find_net(g: Graph) -> NetEmbedding | None:
    """First induced net found by scanning triangles lexicographically.

    Construction: take each triangle vertex's neighbours outside the
    triangle and verify the six vertices induce exactly a net.  None
    when no triangle admits the construction.
    """
    for tri in triangles(g):
        tri_set = set(tri)
        outs = [
            tuple(w for w in g.adj[t] if w not in tri_set)
            for t in tri
        ]
        for pend in itertools.product(*outs):
            if _net_ok(g, tri, pend):
                return NetEmbedding(tri, pend)
    return None


_MOTIF_TARGETS = {
    "diamond": diamond_graph(),
    "house": house_graph(),
}


def find_induced_motif(g: Graph, motif: str) -> tuple[int, ...] | None:
    """Least induced embedding of a fixed motif ('house' or 'diamond').

    Returns the image of the motif's vertices 0..k-1 in order, or None.
    """
    try:
        target = _MOTIF_TARGETS[motif]
    except KeyError:
        raise ValueError(f"unknown motif {motif!r}") from None
    size = target.n
    tdegs = sorted(target.degrees())
    for subset in itertools.combinations(range(g.n), size):
        sub, kept = induced_subgraph(g, subset)
        if len(sub.edges) != len(target.edges):
            continue
        if sorted(sub.degrees()) != tdegs:
            continue
        for perm in itertools.permutations(range(size)):
            if all(
                sub.has_edge(perm[a], perm[b]) == target.has_edge(a, b)
                for a, b in itertools.combinations(range(size), 2)
            ):
                return tuple(kept[perm[i]] for i in range(size))
    return None


# ---------------------------------------------------------------------------
# Isomorphism on small graphs


def _refine_signature(g: Graph) -> tuple:
    tri_count = [0] * g.n
    for x, y, z in triangles(g):
        tri_count[x] += 1
        tri_count[y] += 1
        tri_count[z] += 1
    dist_profiles = []
    for s in g.vertices:
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        profile = sorted(dist.values())
        dist_profiles.append((g.degree(s), tri_count[s], tuple(profile)))
    return (g.n, len(g.edges), tuple(sorted(dist_profiles)))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test by pruned permutation search (small graphs)."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    if _refine_signature(g) != _refine_signature(h):
        return False
    n = g.n
    order = sorted(g.vertices, key=lambda v: -g.degree(v))
    mapping = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        u = order[i]
        for cand in h.vertices:
            if used[cand] or h.degree(cand) != g.degree(u):
                continue
            ok = True
            for j in range(i):
                w = order[j]
                if g.has_edge(u, w) != h.has_edge(cand, mapping[w]):
                    ok = False
                    break
            if ok:
                mapping[u] = cand
                used[cand] = True
                if extend(i + 1):
                    return True
                used[cand] = False
                mapping[u] = -1
        return False

    return extend(0)


_PRISM = triangular_prism()


def is_k4(g: Graph) -> bool:
    return g.n == 4 and len(g.edges) == 6


def is_prism(g: Graph) -> bool:
    return g.n == 6 and is_cubic(g) and is_isomorphic(g, _PRISM)
