"""Constructive production of Kempe-change witnesses for 3-colourings of
cubic graphs, without global state-space search.

The solver dispatches on structure: graphs with a small separator go
through the separator machinery (tier L2 of the case labels), 3-connected
claw-free graphs through the net machinery (tier L3), and graphs with a
claw through the claw machinery (tier L4).  The building blocks below the
tiers are the peeling connector for degenerate graphs, the clique-glue,
sequence restriction, vertex-identification lifting, and the matching
connector.

Every produced sequence is certified by replay before it is returned.
Where a building block is a re-derivation rather than a verbatim
procedure (the glue, the peeling connector), its output is validated and
a breadth-first oracle fallback keeps the result sound; fallbacks are
recorded on the trace.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .classes import bfs_path
from .coloring import (
    DEFAULT_CEILING,
    Coloring,
    KempeMove,
    KempeSequence,
    canonical_class,
    chain_vertices,
    check_proper,
    colorings_match,
    replay,
    swap_chain,
)
from .errors import (
    ImproperColoringError,
    NotEquivalentError,
    RepartnerContractError,
    SolverInternalError,
)
from .graph import (
    Graph,
    add_edge,
    connected_components,
    degeneracy,
    find_claw,
    find_min_separator,
    find_net,
    identify_vertices,
    induced_subgraph,
    is_cubic,
    is_prism,
    remove_vertex,
    separators_of_size,
)

#: Every case label the solver may record on a trace.
CASE_LABELS = frozenset(
    [
        "dispatch.identical",
        "dispatch.component",
        "dispatch.prism",
        "dispatch.separator",
        "dispatch.clawfree",
        "dispatch.claw",
        "L2.clique",
        "L2.Claim2.prep",
        "L2.Claim2.flip",
        "L2.Claim1",
        "L3.Case1",
        "L3.Case1.swap",
        "L3.Case2.P12",
        "L3.Case2.P23",
        "L3.Case2.P13",
        "L3.Case2.double",
        "L3.reversed",
        "L4.match",
        "L4.recolour",
        "L4.F12",
        "L4.Case1",
        "L4.Case2.1",
        "L4.Case2.2",
        "L4.Case2.2.1",
        "L4.Case2.2.2",
        "L4.Case3",
        "L4.Case3.1",
        "L4.Case3.2.1",
        "L4.Case3.2.2",
        "L4.Case4",
        "L4.Case4.norm",
        "L4.Case4.1",
        "L4.Case4.2",
        "L4.wset.alpha",
        "L4.wset.beta",
        "L4.bridge",
        "M.degenerate",
        "M.identify",
    ]
)


@dataclass
class SolveTrace:
    """Audit record of the case machinery: labels entered, in order, plus
    free-form subproblem descriptors (separators, embeddings, fallbacks)."""

    cases: list[str] = field(default_factory=list)
    subproblems: list[dict] = field(default_factory=list)

    def enter(self, label: str) -> None:
        if label not in CASE_LABELS:
            raise SolverInternalError(f"undocumented case label {label!r}")
        self.cases.append(label)

    def note(self, **info) -> None:
        self.subproblems.append(info)


# ---------------------------------------------------------------------------
# Low-level helpers on raw colour tuples


def _emit(g, cols, moves, x, a, b):
    """Exchange the (a, b)-chain at x; record the move anchored at the
    chain's least vertex.  Returns the new colour tuple."""
    chain = chain_vertices(g, cols, x, a, b)
    moves.append(KempeMove(chain[0], a, b))
    return swap_chain(cols, chain, a, b)


def _recolour(g, cols, moves, x, to):
    """Single-vertex Kempe change; asserts the chain really is {x}."""
    chain = chain_vertices(g, cols, x, cols[x], to)
    if chain != (x,):
        raise SolverInternalError(
            f"recolouring vertex {x} is not a single-vertex chain: {chain}"
        )
    moves.append(KempeMove(x, min(cols[x], to), max(cols[x], to)))
    return swap_chain(cols, chain, cols[x], to)


def _chain_shape(g, chain):
    """(is_path, endpoints) of a chain's induced subgraph.  A single vertex
    counts as a path with itself as both endpoints."""
    cset = set(chain)
    degs = {x: sum(1 for y in g.adj[x] if y in cset) for x in chain}
    if len(chain) == 1:
        return True, list(chain)
    ends = sorted(x for x in chain if degs[x] == 1)
    is_path = all(d <= 2 for d in degs.values()) and len(ends) == 2
    return is_path, ends


def _closest_branch_vertex(g, chain, start):
    """The in-chain degree-3 vertex nearest to `start` (least id on ties),
    or None when the chain has maximum degree 2."""
    cset = set(chain)
    deg = {x: sum(1 for y in g.adj[x] if y in cset) for x in chain}
    seen = {start}
    layer = [start]
    while layer:
        hits = sorted(x for x in layer if deg[x] >= 3)
        if hits:
            return hits[0]
        nxt = []
        for x in sorted(layer):
            for y in g.adj[x]:
                if y in cset and y not in seen:
                    seen.add(y)
                    nxt.append(y)
        layer = nxt
    return None


def _path_order(g, chain, start):
    """Vertices of a path-shaped chain in order, starting from `start`."""
    cset = set(chain)
    order = [start]
    prev = None
    cur = start
    while True:
        nxt = [y for y in g.adj[cur] if y in cset and y != prev]
        if not nxt:
            return order
        if len(nxt) > 1:
            raise SolverInternalError("path walk hit a branch vertex")
        prev, cur = cur, nxt[0]
        order.append(cur)


def _restrict(cols, kept):
    return tuple(cols[v] for v in kept)


def _free_colour_outside(g, cols, v, k, banned):
    taken = {cols[w] for w in g.adj[v]}
    for z in range(1, k + 1):
        if z != cols[v] and z not in banned and z not in taken:
            return z
    return None


# ---------------------------------------------------------------------------
# Peeling connector for degenerate graphs


def _degenerate_moves(g, k, alpha, beta, pinned=frozenset()):
    """Moves from alpha to beta on a graph whose non-pinned vertices peel
    with degree <= k-1.  All exchanged chains avoid pinned vertices, which
    requires alpha and beta to agree there.

    Works by removing a minimum-degree vertex v, connecting the rest
    recursively, and lifting each move: if v sits in the lifted chain it
    is first parked on a free colour outside the move's pair, except when
    v is a leaf of the chain, in which case exchanging the joint chain
    restricts to exactly the intended move.
    """
    if alpha == beta:
        return []
    free = [u for u in range(g.n) if u not in pinned]
    if not free:
        raise SolverInternalError("pinned endpoints disagree")
    v = min(free, key=lambda u: (g.degree(u), u))
    if g.degree(v) > k - 1:
        raise ValueError(f"no eliminable vertex of degree <= {k - 1}")
    h, kept = remove_vertex(g, v)
    pos = {old: i for i, old in enumerate(kept)}
    sub_moves = _degenerate_moves(
        h,
        k,
        _restrict(alpha, kept),
        _restrict(beta, kept),
        frozenset(pos[p] for p in pinned),
    )
    moves: list[KempeMove] = []
    cols = alpha
    for m in sub_moves:
        anchor = kept[m.anchor]
        a, b = m.a, m.b
        if cols[v] in (a, b):
            chain = chain_vertices(g, cols, anchor, a, b)
            if v in chain:
                other = a if cols[v] == b else b
                if sum(1 for wv in g.adj[v] if cols[wv] == other) >= 2:
                    z = _free_colour_outside(g, cols, v, k, banned={a, b})
                    if z is None:
                        raise SolverInternalError("no parking colour for bridge vertex")
                    cols = _recolour(g, cols, moves, v, z)
                # else v is a leaf: the joint exchange is exact on g - v
        cols = _emit(g, cols, moves, anchor, a, b)
    if cols[v] != beta[v]:
        cols = _recolour(g, cols, moves, v, beta[v])
    if cols != beta:
        raise SolverInternalError("peeling connector missed its target")
    return moves


def _oracle_moves(g, k, alpha, beta, ceiling):
    seq = bfs_path(g, Coloring(k, alpha), Coloring(k, beta), ceiling=ceiling)
    if seq is None:
        raise NotEquivalentError("colourings are not Kempe equivalent")
    return list(seq.moves)


def _degenerate_moves_safe(g, k, alpha, beta, ceiling=DEFAULT_CEILING, trace=None):
    """Peeling connector with replay validation and an oracle fallback."""
    try:
        moves = _degenerate_moves(g, k, alpha, beta)
        return moves
    except (SolverInternalError, ValueError):
        if trace is not None:
            trace.note(op="degenerate_path", fallback="bfs")
        return _oracle_moves(g, k, alpha, beta, ceiling)


def degenerate_path(
    g: Graph,
    k: int,
    alpha: Coloring,
    beta: Coloring,
    ceiling: int = DEFAULT_CEILING,
) -> KempeSequence:
    """Witness between two k-colourings of a (k-1)-degenerate graph."""
    if degeneracy(g).d > k - 1:
        raise ValueError(f"graph is not {k - 1}-degenerate")
    check_proper(g, alpha, "alpha")
    check_proper(g, beta, "beta")
    moves = _degenerate_moves_safe(g, k, alpha.colors, beta.colors, ceiling)
    return KempeSequence(alpha, tuple(moves))


# ---------------------------------------------------------------------------
# Restriction of a sequence to a spanning subgraph


def restrict_sequence(g: Graph, g_super: Graph, seq: KempeSequence) -> KempeSequence:
    """Rewrite a witness on a supergraph (same vertices, extra edges) as a
    witness on g: each super-chain is a disjoint union of g-chains, and
    exchanging each of them reproduces the super-exchange exactly."""
    if g.n != g_super.n:
        raise ValueError("graphs must share the vertex set")
    if not set(g.edges) <= set(g_super.edges):
        raise ValueError("g must be a subgraph of g_super")
    check_proper(g_super, seq.start, "start colouring")
    moves: list[KempeMove] = []
    cols = seq.start.colors
    for m in seq.moves:
        super_chain = chain_vertices(g_super, cols, m.anchor, m.a, m.b)
        done: set[int] = set()
        for x in super_chain:
            if x in done:
                continue
            sub_chain = chain_vertices(g, cols, x, m.a, m.b)
            done.update(sub_chain)
            moves.append(KempeMove(sub_chain[0], m.a, m.b))
        cols = swap_chain(cols, super_chain, m.a, m.b)
    return KempeSequence(seq.start, tuple(moves))


# ---------------------------------------------------------------------------
# Clique glue


def _peelable_keeping(g, keep, k):
    """Can every vertex outside `keep` be removed, min-degree-first, with
    degree <= k-1 at removal time?"""
    alive = set(g.vertices)
    deg = {v: g.degree(v) for v in g.vertices}
    while len(alive) > len(keep):
        cands = [v for v in alive if v not in keep and deg[v] <= k - 1]
        if not cands:
            return False
        v = min(cands)
        alive.remove(v)
        for w in g.adj[v]:
            if w in alive:
                deg[w] -= 1
    return True


def _simulate_side(g, cols, moves, kept, sub_moves):
    """Replay side-local moves on the whole graph, exchanging the full
    chain at each mapped anchor."""
    for m in sub_moves:
        cols = _emit(g, cols, moves, kept[m.anchor], m.a, m.b)
    return cols


_GLUE_ROUNDS = 6


def glue_clique_paths(
    g: Graph,
    part1,
    part2,
    alpha: Coloring,
    beta: Coloring,
    side_solver=None,
    ceiling: int = DEFAULT_CEILING,
    trace: SolveTrace | None = None,
) -> KempeSequence:
    """Witness on g = g[part1] | g[part2] where the parts overlap in a
    clique, given that each part's colourings form a single Kempe class
    (side witnesses are produced by `side_solver`, by default the peeling
    connector).

    Exchanging the full chain at a side-local anchor restricts exactly to
    the side-local exchange because all cut vertices on one chain are
    mutually adjacent.  When the second side peels down to the cut, its
    moves can be kept away from the cut entirely and the glue is two
    phases; otherwise sides are fixed alternately, with a certified
    breadth-first fallback if that fails to settle.
    """
    k = alpha.k
    p1 = tuple(sorted(set(part1)))
    p2 = tuple(sorted(set(part2)))
    s_shared = tuple(sorted(set(p1) & set(p2)))
    if set(p1) | set(p2) != set(g.vertices):
        raise ValueError("parts must cover the vertex set")
    for u, v in itertools.combinations(s_shared, 2):
        if not g.has_edge(u, v):
            raise ValueError("the parts' intersection must induce a clique")
    s1set, s2set = set(p1) - set(s_shared), set(p2) - set(s_shared)
    for u, v in g.edges:
        if (u in s1set and v in s2set) or (u in s2set and v in s1set):
            raise ValueError("no edge may join the two parts outside the cut")
    check_proper(g, alpha, "alpha")
    check_proper(g, beta, "beta")
    if side_solver is None:
        def side_solver(sub, kk, a_cols, b_cols):
            return [
                KempeMove(m.anchor, m.a, m.b)
                for m in _degenerate_moves_safe(sub, kk, a_cols, b_cols, ceiling, trace)
            ]

    sub1, kept1 = induced_subgraph(g, p1)
    sub2, kept2 = induced_subgraph(g, p2)
    sides = {1: (sub1, kept1), 2: (sub2, kept2)}
    cut_in = {
        1: frozenset(i for i, v in enumerate(kept1) if v in s_shared),
        2: frozenset(i for i, v in enumerate(kept2) if v in s_shared),
    }

    moves: list[KempeMove] = []
    cols = alpha.colors

    def fix_side(which, current):
        sub, kept = sides[which]
        sub_moves = side_solver(sub, k, _restrict(current, kept), _restrict(beta.colors, kept))
        return _simulate_side(g, current, moves, kept, sub_moves)

    def fix_side_pinned(which, current):
        sub, kept = sides[which]
        sub_moves = _degenerate_moves(
            sub, k, _restrict(current, kept), _restrict(beta.colors, kept), cut_in[which]
        )
        return _simulate_side(g, current, moves, kept, sub_moves)

    pinnable = next(
        (which for which in (2, 1) if _peelable_keeping(sides[which][0], cut_in[which], k)),
        None,
    )
    try:
        if pinnable is not None:
            first = 1 if pinnable == 2 else 2
            cols = fix_side(first, cols)
            _, kept_f = sides[first]
            if _restrict(cols, kept_f) != _restrict(beta.colors, kept_f):
                raise SolverInternalError("side simulation was not exact")
            cols = fix_side_pinned(pinnable, cols)
            if trace is not None:
                trace.note(op="glue", strategy="pinned", pinned_side=pinnable)
        else:
            seen = {cols}
            for rnd in range(_GLUE_ROUNDS):
                if cols == beta.colors:
                    break
                cols = fix_side(1 + rnd % 2, cols)
                if cols in seen and cols != beta.colors:
                    raise SolverInternalError("glue alternation cycled")
                seen.add(cols)
            if trace is not None:
                trace.note(op="glue", strategy="alternate")
    except (SolverInternalError, ValueError, NotEquivalentError):
        if trace is not None:
            trace.note(op="glue", strategy="fallback")
        moves.extend(_oracle_moves(g, k, cols, beta.colors, ceiling))
        cols = beta.colors
    if cols != beta.colors:
        if trace is not None:
            trace.note(op="glue", strategy="fallback")
        moves.extend(_oracle_moves(g, k, cols, beta.colors, ceiling))
    return KempeSequence(alpha, tuple(moves))


# ---------------------------------------------------------------------------
# Lifting a witness through a vertex identification


def identify_lift(g: Graph, x: int, y: int, seq: KempeSequence) -> KempeSequence:
    """Replay a witness computed on the graph with x and y identified as a
    witness on g.  A chain through the merged vertex corresponds to the
    chains at x and at y, which may coincide (one move) or not (two)."""
    g2, mapping = identify_vertices(g, x, y)
    z = mapping[x]
    inverse = {new: old for old, new in mapping.items() if old != y}
    k = seq.start.k
    lifted = tuple(seq.start.colors[mapping[vv]] for vv in g.vertices)
    alpha = Coloring(k, lifted)
    check_proper(g, alpha, "lifted start colouring")
    cols_g = lifted
    cols_h = seq.start.colors
    moves: list[KempeMove] = []
    for m in seq.moves:
        chain_h = chain_vertices(g2, cols_h, m.anchor, m.a, m.b)
        if z not in chain_h:
            cols_g = _emit(g, cols_g, moves, inverse[m.anchor], m.a, m.b)
        else:
            chain_x = chain_vertices(g, cols_g, x, m.a, m.b)
            both = y in chain_x
            moves.append(KempeMove(chain_x[0], m.a, m.b))
            cols_g = swap_chain(cols_g, chain_x, m.a, m.b)
            if not both:
                cols_g = _emit(g, cols_g, moves, y, m.a, m.b)
        cols_h = swap_chain(cols_h, chain_h, m.a, m.b)
        if any(cols_g[old] != cols_h[mapping[old]] for old in g.vertices):
            raise SolverInternalError("identified-graph replay diverged")
    return KempeSequence(alpha, tuple(moves))


# ---------------------------------------------------------------------------
# Matching connector


def matching_path(
    g: Graph,
    alpha: Coloring,
    beta: Coloring,
    ceiling: int = DEFAULT_CEILING,
    trace: SolveTrace | None = None,
) -> KempeSequence:
    """Witness between two matching colourings of a graph of maximum
    degree k: either the graph peels directly, or the matched pair is
    identified, solved on the smaller graph, and lifted back."""
    k = alpha.k
    check_proper(g, alpha, "alpha")
    check_proper(g, beta, "beta")
    if alpha.colors == beta.colors:
        return KempeSequence(alpha, ())
    match = colorings_match(g, alpha, beta)
    if match is None:
        raise ValueError("colourings do not match")
    if degeneracy(g).d <= k - 1:
        if trace is not None:
            trace.enter("M.degenerate")
        moves = _degenerate_moves_safe(g, k, alpha.colors, beta.colors, ceiling, trace)
        return KempeSequence(alpha, tuple(moves))
    u, v, w = match
    if trace is not None:
        trace.enter("M.identify")
        trace.note(op="matching", pair=(u, v), common=w)
    g2, mapping = identify_vertices(g, u, v)
    if degeneracy(g2).d > k - 1:
        raise SolverInternalError("identified graph failed to peel")
    proj_a = [0] * g2.n
    proj_b = [0] * g2.n
    for old in g.vertices:
        proj_a[mapping[old]] = alpha.colors[old]
        proj_b[mapping[old]] = beta.colors[old]
    sub_moves = _degenerate_moves_safe(g2, k, tuple(proj_a), tuple(proj_b), ceiling, trace)
    inner = KempeSequence(Coloring(k, tuple(proj_a)), tuple(sub_moves))
    return identify_lift(g, u, v, inner)


# ---------------------------------------------------------------------------
# Tier L2: graphs with a separator of size at most 2


def _separator_asymmetric_split(g):
    """A minimum non-clique separator {x, y} with a side split such that x
    has exactly one neighbour in side A and y exactly one in side B.

    The exhaustive search over minimum separators, component groupings and
    cut orientations realizes the proof's re-selection argument; it always
    succeeds on a connected cubic graph whose minimum separators are all
    non-clique."""
    for cut in sorted(separators_of_size(g, 2)):
        comps = connected_components(g, without=cut)
        idx = range(len(comps))
        for r in range(1, len(comps)):
            for combo in itertools.combinations(idx, r):
                side_a = sorted(v for i in combo for v in comps[i])
                side_b = sorted(
                    v for i in idx if i not in combo for v in comps[i]
                )
                aset = set(side_a)
                for x, y in ((cut[0], cut[1]), (cut[1], cut[0])):
                    na_x = [w for w in g.adj[x] if w in aset]
                    nb_y = [w for w in g.adj[y] if w not in aset and w not in cut]
                    if len(na_x) == 1 and len(nb_y) == 1:
                        return x, y, tuple(side_a), tuple(side_b), na_x[0], nb_y[0]
    raise SolverInternalError("no asymmetric separator split found")


def _claim2_moves(g, cols, x, y, x1, y1, trace):
    """Make the cut vertices differ: at most one preparatory exchange away
    from x's side neighbour, then exchange the chain at x, which cannot
    reach y."""
    moves: list[KempeMove] = []
    if cols[x] != cols[y]:
        return moves, cols
    c1 = cols[x]
    c2 = cols[y1]
    c3 = ({1, 2, 3} - {c1, c2}).pop()
    if cols[x1] == c3:
        chain = chain_vertices(g, cols, x1, c2, c3)
        if x in chain or y in chain or y1 in chain:
            raise SolverInternalError("preparatory chain leaked onto the cut")
        if trace is not None:
            trace.enter("L2.Claim2.prep")
        moves.append(KempeMove(chain[0], min(c2, c3), max(c2, c3)))
        cols = swap_chain(cols, chain, c2, c3)
    if cols[x1] != c2:
        raise SolverInternalError("cut neighbour not normalised")
    chain = chain_vertices(g, cols, x, c1, c3)
    if y in chain:
        raise SolverInternalError("cut exchange reached the far cut vertex")
    if trace is not None:
        trace.enter("L2.Claim2.flip")
    moves.append(KempeMove(chain[0], min(c1, c3), max(c1, c3)))
    cols = swap_chain(cols, chain, c1, c3)
    return moves, cols


def separator_path(
    g: Graph,
    alpha: Coloring,
    beta: Coloring,
    ceiling: int = DEFAULT_CEILING,
    trace: SolveTrace | None = None,
) -> KempeSequence:
    """Witness for a connected cubic graph with a separator of size <= 2.

    A clique separator splits the graph into two 2-degenerate parts glued
    over the clique.  Otherwise the cut is a non-adjacent pair {x, y}:
    both endpoint colourings are first normalised to give x and y
    different colours, the graph plus the edge xy is solved by gluing its
    two 2-degenerate halves over the now-complete cut, and the witness is
    restricted back down to g.
    """
    trace = trace if trace is not None else SolveTrace()
    sep = find_min_separator(g, 2)
    if sep is None:
        raise ValueError("graph is 3-connected; separator machinery does not apply")
    clique = len(sep.vertices) == 1 or g.has_edge(*sep.vertices)
    if clique:
        trace.enter("L2.clique")
        trace.note(op="separator", cut=sep.vertices, clique=True)
        part1 = set(sep.side_a) | set(sep.vertices)
        part2 = set(sep.side_b) | set(sep.vertices)
        return glue_clique_paths(
            g, part1, part2, alpha, beta, ceiling=ceiling, trace=trace
        )
    x, y, side_a, side_b, x1, y1 = _separator_asymmetric_split(g)
    trace.note(op="separator", cut=(x, y), clique=False, sides=(len(side_a), len(side_b)))
    moves_a, cols_a = _claim2_moves(g, alpha.colors, x, y, x1, y1, trace)
    moves_b, cols_b = _claim2_moves(g, beta.colors, x, y, x1, y1, trace)
    ge = add_edge(g, x, y)
    trace.enter("L2.Claim1")
    part1 = set(side_a) | {x, y}
    part2 = set(side_b) | {x, y}
    glued = glue_clique_paths(
        ge,
        part1,
        part2,
        Coloring(3, cols_a),
        Coloring(3, cols_b),
        ceiling=ceiling,
        trace=trace,
    )
    restricted = restrict_sequence(g, ge, glued)
    moves = moves_a + list(restricted.moves) + [
        KempeMove(m.anchor, m.a, m.b) for m in reversed(moves_b)
    ]
    return KempeSequence(alpha, tuple(moves))


# ---------------------------------------------------------------------------
# Tier L3: 3-connected claw-free cubic graphs (net machinery)


def _net_alike_pairs(cols, p):
    return [
        (i, j)
        for i, j in ((0, 1), (0, 2), (1, 2))
        if cols[p[i]] == cols[p[j]]
    ]


def _net_case1(g, t, p, cols, beta, prefix, ceiling, trace):
    """Input colouring gives two pendant vertices one colour; hand off to
    the matching connector, after at most one two-vertex exchange."""
    pair = _net_alike_pairs(cols, p)[0]
    other = ({0, 1, 2} - set(pair)).pop()
    t = (t[pair[0]], t[pair[1]], t[other])
    p = (p[pair[0]], p[pair[1]], p[other])
    if cols[t[2]] != cols[p[0]]:
        raise SolverInternalError("triangle colour does not repeat the pendant pair")
    if cols[p[2]] == cols[t[1]]:
        t = (t[1], t[0], t[2])
        p = (p[1], p[0], p[2])
    if cols[p[2]] != cols[t[0]]:
        raise SolverInternalError("third pendant colour matches neither triangle vertex")
    trace.enter("L3.Case1")
    c2 = cols[t[0]]
    c3 = cols[t[1]]
    moves = list(prefix)
    if beta.colors[p[2]] == beta.colors[t[0]]:
        tail = matching_path(g, Coloring(3, cols), beta, ceiling, trace)
        return moves + list(tail.moves)
    if beta.colors[p[2]] != beta.colors[t[1]]:
        raise SolverInternalError("pendant colour missing from the triangle")
    chain = chain_vertices(g, cols, t[0], c2, c3)
    if set(chain) != {t[0], t[1]}:
        raise SolverInternalError("triangle exchange chain is not the expected pair")
    trace.enter("L3.Case1.swap")
    moves.append(KempeMove(chain[0], min(c2, c3), max(c2, c3)))
    cols = swap_chain(cols, chain, c2, c3)
    tail = matching_path(g, Coloring(3, cols), beta, ceiling, trace)
    return moves + list(tail.moves)


def _net_case2_reduce(g, t, p, cols, trace):
    """All pendant colours distinct: make two agree.  Either one of the
    three pendant-to-pendant chains misses its far pendant (one exchange),
    or the full two-exchange pattern applies."""
    for sigma in itertools.permutations(range(3)):
        if all(cols[p[sigma[i]]] == cols[t[sigma[(i + 1) % 3]]] for i in range(3)):
            t = tuple(t[sigma[i]] for i in range(3))
            p = tuple(p[sigma[i]] for i in range(3))
            break
    else:
        raise SolverInternalError("pendant colours are not a rotation of the triangle")
    x, y, z = t
    xp, yp, zp = p
    c1, c2, c3 = cols[x], cols[y], cols[z]
    moves: list[KempeMove] = []
    p12 = chain_vertices(g, cols, xp, c1, c2)
    if zp not in p12:
        trace.enter("L3.Case2.P12")
        moves.append(KempeMove(p12[0], min(c1, c2), max(c1, c2)))
        return moves, swap_chain(cols, p12, c1, c2)
    p23 = chain_vertices(g, cols, xp, c2, c3)
    if yp not in p23:
        trace.enter("L3.Case2.P23")
        moves.append(KempeMove(p23[0], min(c2, c3), max(c2, c3)))
        return moves, swap_chain(cols, p23, c2, c3)
    p13 = chain_vertices(g, cols, yp, c1, c3)
    if zp not in p13:
        trace.enter("L3.Case2.P13")
        moves.append(KempeMove(p13[0], min(c1, c3), max(c1, c3)))
        return moves, swap_chain(cols, p13, c1, c3)
    trace.enter("L3.Case2.double")
    is_path, ends = _chain_shape(g, p12)
    if not is_path or set(ends) != {y, zp}:
        raise SolverInternalError("pendant chain is not a path between y and z'")
    xp_in = [w for w in g.adj[xp] if w in set(p12)]
    if len(xp_in) != 2 or x not in xp_in:
        raise SolverInternalError("x' is not interior to the pendant chain")
    x2 = next(w for w in xp_in if w != x)
    moves.append(KempeMove(p12[0], min(c1, c2), max(c1, c2)))
    cols = swap_chain(cols, p12, c1, c2)
    q23 = chain_vertices(g, cols, yp, c2, c3)
    expected = (set(p23) | {x2}) - {xp, y, z}
    if set(q23) != expected:
        raise SolverInternalError("second exchange chain has unexpected vertices")
    moves.append(KempeMove(q23[0], min(c2, c3), max(c2, c3)))
    cols = swap_chain(cols, q23, c2, c3)
    if cols[yp] != cols[zp]:
        raise SolverInternalError("double exchange failed to equalise pendants")
    return moves, cols


def clawfree_path(
    g: Graph,
    alpha: Coloring,
    beta: Coloring,
    ceiling: int = DEFAULT_CEILING,
    trace: SolveTrace | None = None,
) -> KempeSequence:
    """Witness for a 3-connected claw-free cubic graph that is neither the
    complete graph on four vertices nor the prism, built around an induced
    net."""
    trace = trace if trace is not None else SolveTrace()
    check_proper(g, alpha, "alpha")
    check_proper(g, beta, "beta")
    net = find_net(g)
    if net is None:
        raise ValueError("no induced net: graph outside this tier's scope")
    t, p = net.t_vertices, net.p_vertices
    trace.note(op="net", t_vertices=t, p_vertices=p)
    if alpha.colors == beta.colors:
        return KempeSequence(alpha, ())
    if _net_alike_pairs(alpha.colors, p):
        moves = _net_case1(g, t, p, alpha.colors, beta, [], ceiling, trace)
        return KempeSequence(alpha, tuple(moves))
    if _net_alike_pairs(beta.colors, p):
        back = _net_case1(g, t, p, beta.colors, alpha, [], ceiling, trace)
        trace.enter("L3.reversed")
        return KempeSequence(alpha, tuple(reversed(back)))
    prefix, cols = _net_case2_reduce(g, t, p, alpha.colors, trace)
    moves = _net_case1(g, t, p, cols, beta, prefix, ceiling, trace)
    return KempeSequence(alpha, tuple(moves))


# ---------------------------------------------------------------------------
# Tier L4: 3-connected cubic graphs with a claw


class _Bridge(Exception):
    """Raised when the fixed-target subcase short-circuits the pair
    realignment: carries matched colourings reached from both sides."""

    def __init__(self, moves_c, cols_c, moves_t, cols_t):
        super().__init__("bridge")
        self.moves_c = moves_c
        self.cols_c = cols_c
        self.moves_t = moves_t
        self.cols_t = cols_t
        self.machine_side = "alpha"


def _match_tuples(g, cols_a, cols_b):
    return colorings_match(g, Coloring(3, cols_a), Coloring(3, cols_b))


def _claw_machine(g, center, u, v, s, cols, target, trace):
    """Drive one colouring, whose like pair among the claw leaves is
    {u, v}, to a colouring where s agrees with u or v, by the case split
    on the colour multiplicities around u, v and s.

    Returns (moves, cols).  The fixed-target subcase raises _Bridge with
    a matched pair of colourings instead (one reached from `cols`, one
    from `target`).
    """
    moves: list[KempeMove] = []
    seen: set[tuple[int, ...]] = set()
    while True:
        if cols[s] in (cols[u], cols[v]):
            return moves, cols
        if cols in seen:
            raise SolverInternalError("claw machinery revisited a colouring")
        seen.add(cols)
        if cols[u] != cols[v]:
            raise SolverInternalError("designated pair no longer coloured alike")
        c1, c2, c3 = cols[u], cols[s], cols[center]
        if len({c1, c2, c3}) != 3:
            raise SolverInternalError("claw centre colour clashes with the leaves")

        recoloured = False
        for tvert in (u, v, s):
            around = {cols[x] for x in g.adj[tvert]}
            if len(around) == 1:
                free = ({1, 2, 3} - {cols[tvert]} - around).pop()
                trace.enter("L4.recolour")
                cols = _recolour(g, cols, moves, tvert, free)
                recoloured = True
                break
        if recoloured:
            continue

        f12 = chain_vertices(g, cols, s, c1, c2)
        f12set = set(f12)
        if u not in f12set or v not in f12set:
            trace.enter("L4.F12")
            cols = _emit(g, cols, moves, s, c1, c2)
            continue

        uu, vv = u, v
        u1, u2 = (x for x in g.adj[uu] if x != center)
        v1, v2 = (x for x in g.adj[vv] if x != center)
        s1, s2 = (x for x in g.adj[s] if x != center)
        du = cols[u1] == cols[u2]
        dv = cols[v1] == cols[v2]
        ds = cols[s1] == cols[s2]

        if not du and not dv and not ds:
            trace.enter("L4.Case1")
            branch = _closest_branch_vertex(g, f12, uu)
            if branch is None:
                raise SolverInternalError("chain with three leaves has no branch vertex")
            cols = _recolour(g, cols, moves, branch, c3)
            f12b = chain_vertices(g, cols, s, c1, c2)
            if uu in f12b:
                raise SolverInternalError("branch recolouring failed to detach u")
            cols = _emit(g, cols, moves, s, c1, c2)
            continue

        if ds:
            if cols[s1] != c1:
                raise SolverInternalError("s should have been recolourable")
            if du or dv:
                trace.enter("L4.Case2.1")
                if not du:
                    uu, vv = vv, uu
                    u1, u2, v1, v2 = v1, v2, u1, u2
                if cols[u1] != c2:
                    raise SolverInternalError("doubled neighbours must share s's colour")
                f23 = chain_vertices(g, cols, s, c2, c3)
                if set(f23) != {s, center}:
                    raise SolverInternalError("two-vertex chain {s, w} expected")
                cols = _emit(g, cols, moves, s, c2, c3)
                cols = _recolour(g, cols, moves, uu, c3)
                continue
            # fixed-target subcase
            trace.enter("L4.Case2.2")
            if target is None:
                raise SolverInternalError("fixed-target subcase needs a target colouring")
            omega = target
            if cols[u1] != c2:
                u1, u2 = u2, u1
            if cols[v1] != c2:
                v1, v2 = v2, v1
            if omega[s1] == omega[s2]:
                raise _Bridge(moves, cols, [], omega)
            if omega[center] != omega[s1]:
                s1, s2 = s2, s1
            a_col = omega[center]
            if omega[s1] != a_col:
                raise SolverInternalError("target centre colour missing on s's neighbours")
            b_col = omega[s2]
            c_col = omega[s]
            if omega[uu] == omega[vv]:
                raise _Bridge(moves, cols, [], omega)
            if omega[uu] == c_col:
                uu, vv = vv, uu
                u1, u2, v1, v2 = v1, v2, u1, u2
            if omega[uu] != b_col or omega[vv] != c_col:
                raise SolverInternalError("target colours off the expected pattern")
            if omega[u2] == a_col or omega[v2] == a_col:
                raise _Bridge(moves, cols, [], omega)
            if omega[u2] != c_col or omega[v2] != b_col:
                raise SolverInternalError("outer target colours off the expected pattern")
            if omega[u1] == a_col or omega[v1] == a_col:
                trace.enter("L4.Case2.2.1")
                f23 = chain_vertices(g, cols, s, c2, c3)
                if set(f23) != {s, center}:
                    raise SolverInternalError("two-vertex chain {s, w} expected")
                cols = _emit(g, cols, moves, s, c2, c3)
                if _match_tuples(g, cols, omega) is None:
                    raise SolverInternalError("expected match with the target")
                raise _Bridge(moves, cols, [], omega)
            trace.enter("L4.Case2.2.2")
            if omega[u1] != c_col or omega[v1] != b_col:
                raise SolverInternalError("inner target colours off the expected pattern")
            t_chain = chain_vertices(g, omega, center, a_col, b_col)
            if set(t_chain) != {center, uu}:
                raise SolverInternalError("target-side chain is not {w, u}")
            t_moves = [KempeMove(t_chain[0], min(a_col, b_col), max(a_col, b_col))]
            omega2 = swap_chain(omega, t_chain, a_col, b_col)
            if _match_tuples(g, cols, omega2) is None:
                raise SolverInternalError("expected match after the target-side exchange")
            raise _Bridge(moves, cols, t_moves, omega2)

        if du != dv:
            trace.enter("L4.Case3")
            if dv:
                uu, vv = vv, uu
                u1, u2, v1, v2 = v1, v2, u1, u2
            if cols[u1] != c2:
                raise SolverInternalError("doubled neighbours must share s's colour")
            if cols[s1] != c1:
                s1, s2 = s2, s1
            if cols[v1] != c2:
                v1, v2 = v2, v1
            if cols[s1] != c1 or cols[s2] != c3 or cols[v1] != c2 or cols[v2] != c3:
                raise SolverInternalError("split-neighbour orientation failed")
            is_path, ends = _chain_shape(g, f12)
            if not is_path:
                trace.enter("L4.Case3.1")
                branch = _closest_branch_vertex(g, f12, s)
                cols = _recolour(g, cols, moves, branch, c3)
                f12b = chain_vertices(g, cols, s, c1, c2)
                if vv in f12b:
                    raise SolverInternalError("branch recolouring failed to detach v")
                cols = _emit(g, cols, moves, s, c1, c2)
                continue
            if set(ends) != {s, vv}:
                raise SolverInternalError("chain path must run from s to v")
            f13 = chain_vertices(g, cols, s2, c1, c3)
            f13_path, f13_ends = _chain_shape(g, f13)
            if f13_path and set(f13_ends) == {s1, s2}:
                trace.enter("L4.Case3.2.1")
                f13set = set(f13)
                if {uu, vv, s, center} & f13set:
                    raise SolverInternalError("side chain swallowed the claw")
                old_order = _path_order(g, f12, s)
                if old_order[1] != s1:
                    raise SolverInternalError("chain path must leave s through s1")
                tvert = old_order[2]
                cols = _emit(g, cols, moves, s2, c1, c3)
                fv = chain_vertices(g, cols, vv, c1, c2)
                if s not in fv:
                    cols = _emit(g, cols, moves, vv, c1, c2)
                    continue
                fv_path, fv_ends = _chain_shape(g, fv)
                if not fv_path:
                    branch = _closest_branch_vertex(g, fv, s)
                    cols = _recolour(g, cols, moves, branch, c3)
                    f12c = chain_vertices(g, cols, s, c1, c2)
                    if vv in f12c:
                        raise SolverInternalError("branch recolouring failed to detach v")
                    cols = _emit(g, cols, moves, s, c1, c2)
                    continue
                if not (set(f12) - {s1}) <= set(fv):
                    raise SolverInternalError(
                        "exchanged side chain clipped the s-to-v path"
                    )
                f23w = chain_vertices(g, cols, center, c2, c3)
                if set(f23w) != {center, s, s1, tvert}:
                    raise SolverInternalError("four-vertex chain {w, s, s1, t} expected")
                cols = _emit(g, cols, moves, center, c2, c3)
                if tvert not in (u1, u2):
                    cols = _recolour(g, cols, moves, uu, c3)
                continue
            trace.enter("L4.Case3.2.2")
            f13set = set(f13)
            if s1 not in f13set:
                cols = _emit(g, cols, moves, s2, c1, c3)
                if cols[uu] != cols[vv]:
                    raise SolverInternalError("u and v must flip together")
                continue
            s1_deg = sum(1 for w in g.adj[s1] if w in f13set)
            if s1_deg != 1:
                raise SolverInternalError("s1 must hang off the side chain")
            s2_deg = sum(1 for w in g.adj[s2] if w in f13set)
            if s2_deg == 2:
                f23s = chain_vertices(g, cols, s, c2, c3)
                if set(f23s) != {center, s, s2}:
                    raise SolverInternalError("three-vertex chain {w, s, s2} expected")
                cols = _emit(g, cols, moves, s, c2, c3)
                cols = _recolour(g, cols, moves, uu, c3)
                continue
            branch = _closest_branch_vertex(g, f13, s2)
            if branch is None:
                raise SolverInternalError("non-path side chain has no branch vertex")
            cols = _recolour(g, cols, moves, branch, c2)
            f13b = chain_vertices(g, cols, s2, c1, c3)
            if s1 in f13b:
                raise SolverInternalError("branch recolouring failed to detach s1")
            cols = _emit(g, cols, moves, s2, c1, c3)
            continue

        # du and dv, not ds
        trace.enter("L4.Case4")
        if cols[u1] != c2 or cols[v1] != c2:
            raise SolverInternalError("doubled neighbours must share s's colour")
        if cols[s1] != c1:
            s1, s2 = s2, s1
        if cols[s1] != c1 or cols[s2] != c3:
            raise SolverInternalError("split-neighbour orientation failed")
        f23 = chain_vertices(g, cols, s, c2, c3)
        is_path, _ = _chain_shape(g, f23)
        if not is_path:
            trace.enter("L4.Case4.norm")
            branch = _closest_branch_vertex(g, f23, s)
            cols = _recolour(g, cols, moves, branch, c1)
            continue
        s4 = sorted({u1, u2, v1, v2})
        cands = [
            m
            for m in s4
            if all(cols[x] == c3 for x in g.adj[m] if x not in (uu, vv))
        ]
        if cands:
            trace.enter("L4.Case4.1")
            f13w = chain_vertices(g, cols, center, c1, c3)
            if set(f13w) != {center, uu, vv}:
                raise SolverInternalError("three-vertex chain {w, u, v} expected")
            cols = _emit(g, cols, moves, center, c1, c3)
            m = cands[0]
            if any(cols[x] != c3 for x in g.adj[m]):
                raise SolverInternalError("pivot's neighbours must all share a colour")
            cols = _recolour(g, cols, moves, m, c1)
            continue
        trace.enter("L4.Case4.2")
        f23set = set(f23)
        for tv, p1, p2 in ((uu, u1, u2), (vv, v1, v2)):
            if p1 not in f23set and p2 not in f23set:
                break
        else:
            raise SolverInternalError("no neighbour pair clear of the s-chain")
        ch1 = chain_vertices(g, cols, p1, c2, c3)
        chains = [ch1]
        if p2 not in ch1:
            chains.append(chain_vertices(g, cols, p2, c2, c3))
        for ch in sorted(chains, key=lambda c: c[0]):
            if center in ch or s in ch:
                raise SolverInternalError("clearing exchange reached the claw")
            moves.append(KempeMove(ch[0], min(c2, c3), max(c2, c3)))
            cols = swap_chain(cols, ch, c2, c3)
        cols = _recolour(g, cols, moves, tv, c2)
        continue


def wset_reduce(g: Graph, wset, repartner, alpha: Coloring, beta: Coloring):
    """Produce a matching pair from two colourings via a repartner
    procedure over a 3-vertex set of which every colouring likes at least
    one pair.

    `repartner(coloring, pair)` must return (moves, coloring2) where the
    new colouring is reachable by the moves and colours alike a pair of
    the set different from `pair`.  Returns (moves_a, gamma_a, moves_b,
    gamma_b) with gamma_a and gamma_b matching.
    """
    ws = tuple(wset)
    if len(ws) != 3:
        raise ValueError("the realignment set must have exactly three vertices")

    def alike(c):
        return [
            (i, j)
            for i, j in ((0, 1), (0, 2), (1, 2))
            if c.colors[ws[i]] == c.colors[ws[j]]
        ]

    pa = alike(alpha)
    pb = alike(beta)
    if not pa or not pb:
        raise ValueError("every colouring must like some pair of the set")
    if set(pa) & set(pb):
        return [], alpha, [], beta
    pair_a, pair_b = pa[0], pb[0]
    shared = (set(pair_a) & set(pair_b)).pop()
    x = (set(pair_a) - {shared}).pop()
    z = (set(pair_b) - {shared}).pop()
    y = shared
    vx, vy, vz = ws[x], ws[y], ws[z]
    moves_a, alpha2 = repartner(alpha, pair_a)
    if alpha2.colors[vy] == alpha2.colors[vz]:
        return moves_a, alpha2, [], beta
    if alpha2.colors[vx] != alpha2.colors[vz]:
        raise RepartnerContractError(
            "repartnered colouring kept the original pair", coloring=alpha2
        )
    moves_b, beta2 = repartner(beta, pair_b)
    if beta2.colors[vx] == beta2.colors[vy]:
        return [], alpha, moves_b, beta2
    if beta2.colors[vx] == beta2.colors[vz]:
        return moves_a, alpha2, moves_b, beta2
    raise RepartnerContractError(
        "repartnered colouring kept the original pair", coloring=beta2
    )


def claw_path(
    g: Graph,
    alpha: Coloring,
    beta: Coloring,
    ceiling: int = DEFAULT_CEILING,
    trace: SolveTrace | None = None,
) -> KempeSequence:
    """Witness for a 3-connected cubic graph containing a claw: realign
    which pair of the claw's leaves is coloured alike until the two sides
    match, then connect with the matching machinery."""
    trace = trace if trace is not None else SolveTrace()
    check_proper(g, alpha, "alpha")
    check_proper(g, beta, "beta")
    claw = find_claw(g)
    if claw is None:
        raise ValueError("graph is claw-free; claw machinery does not apply")
    w = claw.center
    leaves = claw.leaves
    trace.note(op="claw", center=w, leaves=leaves)
    if alpha.colors == beta.colors:
        return KempeSequence(alpha, ())
    direct = colorings_match(g, alpha, beta)
    if direct is not None:
        trace.enter("L4.match")
        tail = matching_path(g, alpha, beta, ceiling, trace)
        return KempeSequence(alpha, tail.moves)

    def repartner(coloring, pair):
        uu, vv = leaves[pair[0]], leaves[pair[1]]
        ss = next(l for l in leaves if l not in (uu, vv))
        target = beta if coloring.colors == alpha.colors else alpha
        side = "alpha" if target is beta else "beta"
        trace.enter(f"L4.wset.{side}")
        try:
            moves, cols = _claw_machine(
                g, w, uu, vv, ss, coloring.colors, target.colors, trace
            )
        except _Bridge as bridge:
            bridge.machine_side = side
            raise
        return moves, Coloring(3, cols)

    try:
        moves_a, gamma_a, moves_b, gamma_b = wset_reduce(
            g, leaves, repartner, alpha, beta
        )
    except _Bridge as bridge:
        trace.enter("L4.bridge")
        # moves_c lead from the machine's input colouring to cols_c;
        # moves_t from the opposite side's original colouring to cols_t.
        if bridge.machine_side == "alpha":
            head, head_end = bridge.moves_c, bridge.cols_c
            tail, tail_end = bridge.moves_t, bridge.cols_t
        else:
            head, head_end = bridge.moves_t, bridge.cols_t
            tail, tail_end = bridge.moves_c, bridge.cols_c
        mid = matching_path(
            g, Coloring(3, head_end), Coloring(3, tail_end), ceiling, trace
        )
        moves = (
            list(head)
            + list(mid.moves)
            + [KempeMove(m.anchor, m.a, m.b) for m in reversed(tail)]
        )
        return KempeSequence(alpha, tuple(moves))

    mid = matching_path(g, gamma_a, gamma_b, ceiling, trace)
    moves = (
        list(moves_a)
        + list(mid.moves)
        + [KempeMove(m.anchor, m.a, m.b) for m in reversed(moves_b)]
    )
    return KempeSequence(alpha, tuple(moves))


# ---------------------------------------------------------------------------
# Top-level dispatch


def solve(
    g: Graph,
    alpha: Coloring,
    beta: Coloring,
    k: int = 3,
    ceiling: int = DEFAULT_CEILING,
) -> tuple[KempeSequence, SolveTrace]:
    """Certified witness that alpha and beta are Kempe equivalent on a
    cubic graph, or NotEquivalentError for a prism component whose
    endpoint colourings lie in different classes.

    Dispatch: prism components by exhaustive lookup; graphs with a
    separator of size at most 2 through the separator machinery; otherwise
    the claw-free or claw machinery by claw presence.  The returned
    sequence has been replayed and checked against beta.
    """
    if k != 3:
        raise ValueError("constructive solving is implemented for k = 3 only")
    if not is_cubic(g):
        raise ValueError("the solver requires a cubic graph")
    if alpha.k != 3 or beta.k != 3:
        raise ImproperColoringError("solver colourings must use three colours")
    check_proper(g, alpha, "alpha")
    check_proper(g, beta, "beta")
    trace = SolveTrace()
    if alpha.colors == beta.colors:
        trace.enter("dispatch.identical")
        return KempeSequence(alpha, ()), trace

    comps = connected_components(g)
    if len(comps) > 1:
        trace.enter("dispatch.component")
        moves: list[KempeMove] = []
        for comp in comps:
            sub, kept = induced_subgraph(g, comp)
            sub_alpha = Coloring(3, _restrict(alpha.colors, kept))
            sub_beta = Coloring(3, _restrict(beta.colors, kept))
            sub_seq, sub_trace = solve(sub, sub_alpha, sub_beta, k, ceiling)
            trace.cases.extend(sub_trace.cases)
            trace.note(op="component", vertices=comp, moves=len(sub_seq.moves))
            moves.extend(
                KempeMove(kept[m.anchor], m.a, m.b) for m in sub_seq.moves
            )
        seq = KempeSequence(alpha, tuple(moves))
    elif is_prism(g):
        trace.enter("dispatch.prism")
        seq = bfs_path(g, alpha, beta, ceiling=ceiling)
        if seq is None:
            raise NotEquivalentError(
                "the prism's colourings fall into two Kempe classes and "
                "these two lie in different ones",
                class_a=canonical_class(alpha),
                class_b=canonical_class(beta),
            )
    else:
        sep = find_min_separator(g, 2)
        if sep is not None:
            trace.enter("dispatch.separator")
            seq = separator_path(g, alpha, beta, ceiling, trace)
        elif find_claw(g) is None:
            trace.enter("dispatch.clawfree")
            seq = clawfree_path(g, alpha, beta, ceiling, trace)
        else:
            trace.enter("dispatch.claw")
            seq = claw_path(g, alpha, beta, ceiling, trace)

    end = replay(g, seq)
    if end.colors != beta.colors:
        raise SolverInternalError("witness does not reach the target colouring")
    return seq, trace
