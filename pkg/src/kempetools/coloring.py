"""Proper colourings, Kempe chains and changes, colouring enumeration,
the matching predicate, and replayable move sequences.

Colours are 1-based integers in {1..k}.  A move is identified by an
anchor vertex and an unordered colour pair; the chain it exchanges is
recomputed at replay time, which is what makes witness validation
meaningful.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import CeilingExceededError, ImproperColoringError, InvalidMoveError
from .graph import Graph

DEFAULT_CEILING = 2_000_000


@dataclass(frozen=True)
class Coloring:
    """A total assignment vertex -> colour in {1..k}."""

    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if any(not 1 <= c <= self.k for c in self.colors):
            raise ImproperColoringError(
                f"colours must lie in 1..{self.k}: {self.colors}"
            )

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)


@dataclass(frozen=True)
class KempeMove:
    """Exchange the chain with colours {a, b} containing `anchor`."""

    anchor: int
    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise InvalidMoveError("move colours must differ")
        if self.a > self.b:
            lo, hi = self.b, self.a
            object.__setattr__(self, "a", lo)
            object.__setattr__(self, "b", hi)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.a, self.b)


@dataclass(frozen=True)
class KempeSequence:
    """A replayable witness: a start colouring plus an ordered move list."""

    start: Coloring
    moves: tuple[KempeMove, ...] = ()

    def __len__(self) -> int:
        return len(self.moves)


def is_proper(g: Graph, coloring: Coloring) -> bool:
    if len(coloring.colors) != g.n:
        return False
    cols = coloring.colors
    return all(cols[u] != cols[v] for u, v in g.edges)


def check_proper(g: Graph, coloring: Coloring, what: str = "colouring") -> None:
    if len(coloring.colors) != g.n:
        raise ImproperColoringError(
            f"{what} has {len(coloring.colors)} entries for a {g.n}-vertex graph"
        )
    cols = coloring.colors
    for u, v in g.edges:
        if cols[u] == cols[v]:
            raise ImproperColoringError(
                f"{what} gives colour {cols[u]} to both endpoints of edge ({u}, {v})"
            )


# ---------------------------------------------------------------------------
# Chains and changes.  The tuple-level helpers are the hot path shared with
# the solver; the public functions wrap them with Coloring objects.


def chain_vertices(g: Graph, cols: tuple[int, ...], x: int, a: int, b: int) -> tuple[int, ...]:
    """Vertices of the (a, b)-chain containing x, sorted.  cols is raw."""
    if cols[x] not in (a, b):
        raise InvalidMoveError(
            f"vertex {x} has colour {cols[x]}, outside the pair ({a}, {b})"
        )
    seen = {x}
    stack = [x]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in seen and cols[w] in (a, b):
                seen.add(w)
                stack.append(w)
    return tuple(sorted(seen))


def swap_chain(cols: tuple[int, ...], chain, a: int, b: int) -> tuple[int, ...]:
    out = list(cols)
    for v in chain:
        out[v] = b if out[v] == a else a
    return tuple(out)


def kempe_chain(g: Graph, coloring: Coloring, x: int, a: int, b: int) -> tuple[int, ...]:
    """The maximal connected vertex set containing x within colours {a, b}."""
    return chain_vertices(g, coloring.colors, x, a, b)


def kempe_change(g: Graph, coloring: Coloring, move: KempeMove) -> Coloring:
    """Exchange colours a and b on the chain at the move's anchor."""
    chain = chain_vertices(g, coloring.colors, move.anchor, move.a, move.b)
    return Coloring(coloring.k, swap_chain(coloring.colors, chain, move.a, move.b))


# ---------------------------------------------------------------------------
# Enumeration


def enumerate_colorings(g: Graph, k: int, ceiling: int = DEFAULT_CEILING) -> list[Coloring]:
    """All proper k-colourings in lexicographic order, each exactly once.

    Raises CeilingExceededError when more than `ceiling` colourings exist.
    """
    out: list[Coloring] = []
    n = g.n
    assignment = [0] * n
    back = [tuple(w for w in g.adj[v] if w < v) for v in range(n)]

    def extend(v: int) -> None:
        if v == n:
            if len(out) >= ceiling:
                raise CeilingExceededError(
                    f"more than {ceiling} proper {k}-colourings"
                )
            out.append(Coloring(k, tuple(assignment)))
            return
        for c in range(1, k + 1):
            if all(assignment[w] != c for w in back[v]):
                assignment[v] = c
                extend(v + 1)
        assignment[v] = 0

    extend(0)
    return out


# ---------------------------------------------------------------------------
# Matching predicate


def colorings_match(g: Graph, alpha: Coloring, beta: Coloring):
    """Least triple (x, y, w): x, y share neighbour w and are coloured alike
    under both colourings.  None when no such pair exists."""
    if alpha.k != beta.k:
        raise ImproperColoringError("colourings must use the same palette")
    a, b = alpha.colors, beta.colors
    for x, y in itertools.combinations(range(g.n), 2):
        if a[x] == a[y] and b[x] == b[y]:
            common = set(g.adj[x]) & set(g.adj[y])
            if common:
                return (x, y, min(common))
    return None


# ---------------------------------------------------------------------------
# Replay and validation


def replay(g: Graph, seq: KempeSequence) -> Coloring:
    """Fold the moves over the start colouring; raises on any invalid move."""
    check_proper(g, seq.start, "start colouring")
    cols = seq.start.colors
    for i, m in enumerate(seq.moves):
        try:
            chain = chain_vertices(g, cols, m.anchor, m.a, m.b)
        except InvalidMoveError as exc:
            raise InvalidMoveError(f"move {i}: {exc}") from None
        cols = swap_chain(cols, chain, m.a, m.b)
    return Coloring(seq.start.k, cols)


@dataclass(frozen=True)
class SequenceViolation:
    index: int
    reason: str


def validate_sequence(g: Graph, seq: KempeSequence) -> SequenceViolation | None:
    """First violation in a sequence replay, or None when clean.

    Checks the start colouring, every move's applicability, and the
    properness of every intermediate colouring.
    """
    if not is_proper(g, seq.start):
        return SequenceViolation(-1, "start colouring is not proper")
    cols = seq.start.colors
    k = seq.start.k
    for i, m in enumerate(seq.moves):
        if not (1 <= m.a <= k and 1 <= m.b <= k):
            return SequenceViolation(i, f"colours ({m.a}, {m.b}) outside 1..{k}")
        if not 0 <= m.anchor < g.n:
            return SequenceViolation(i, f"anchor {m.anchor} out of range")
        if cols[m.anchor] not in (m.a, m.b):
            return SequenceViolation(
                i, f"anchor {m.anchor} coloured {cols[m.anchor]}, not in pair"
            )
        chain = chain_vertices(g, cols, m.anchor, m.a, m.b)
        cols = swap_chain(cols, chain, m.a, m.b)
        if not is_proper(g, Coloring(k, cols)):
            return SequenceViolation(i, "intermediate colouring not proper")
    return None


def reverse_sequence(g: Graph, seq: KempeSequence) -> KempeSequence:
    """The inverse witness: same moves in reverse order from the end
    colouring (chains are swap-invariant, so each move undoes itself)."""
    end = replay(g, seq)
    return KempeSequence(end, tuple(reversed(seq.moves)))


def chain_sizes_of_sequence(g: Graph, seq: KempeSequence) -> list[int]:
    """Size of the chain each move exchanges, in replay order."""
    sizes = []
    cols = seq.start.colors
    for m in seq.moves:
        chain = chain_vertices(g, cols, m.anchor, m.a, m.b)
        sizes.append(len(chain))
        cols = swap_chain(cols, chain, m.a, m.b)
    return sizes


# ---------------------------------------------------------------------------
# Colour-permutation quotient


def canonical_class(coloring: Coloring) -> Coloring:
    """Lexicographically least colouring among all k! colour relabelings."""
    best = None
    base = coloring.colors
    for perm in itertools.permutations(range(1, coloring.k + 1)):
        relabeled = tuple(perm[c - 1] for c in base)
        if best is None or relabeled < best:
            best = relabeled
    return Coloring(coloring.k, best if best is not None else ())
