"""Kempe-chain recolouring toolkit for small graphs.

Exhaustively computes Kempe equivalence classes of k-colourings, and
constructively produces certified Kempe-change witnesses between
3-colourings of cubic graphs.
"""

from .classes import ClassReport, VerifyRow, bfs_path, kempe_classes, verify_corpus
from .coloring import (
    Coloring,
    KempeMove,
    KempeSequence,
    canonical_class,
    colorings_match,
    enumerate_colorings,
    kempe_chain,
    kempe_change,
    replay,
    reverse_sequence,
    validate_sequence,
)
from .errors import (
    CeilingExceededError,
    GraphFormatError,
    ImproperColoringError,
    InvalidMoveError,
    KempetoolsError,
    NotEquivalentError,
    RepartnerContractError,
    SolverInternalError,
)
from .generate import gen_cubic
from .graph import (
    ClawEmbedding,
    DegeneracyOrdering,
    Graph,
    NetEmbedding,
    Separator,
    add_edge,
    complete_graph,
    connected_components,
    cycle_graph,
    degeneracy,
    encode_graph6,
    find_claw,
    find_induced_motif,
    find_min_separator,
    find_net,
    identify_vertices,
    induced_subgraph,
    is_connected,
    is_cubic,
    is_isomorphic,
    is_k4,
    is_prism,
    is_regular,
    parse_edgelist,
    parse_graph6,
    path_graph,
    remove_vertex,
    triangular_prism,
    triangles,
)
from .solver import (
    CASE_LABELS,
    SolveTrace,
    claw_path,
    clawfree_path,
    degenerate_path,
    glue_clique_paths,
    identify_lift,
    matching_path,
    restrict_sequence,
    separator_path,
    solve,
    wset_reduce,
)

__version__ = "0.1.0"
