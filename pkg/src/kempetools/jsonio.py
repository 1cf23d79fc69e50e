"""JSON encodings of colourings, move sequences, traces, and reports.

Colouring: {"k": int, "colors": [int; n]} with index = vertex id.
Sequence:  {"start": <colouring>, "moves": [{"anchor": int, "a": int, "b": int}]}.
Trace:     {"cases": [str], "moves": int, "subproblems": [...]}.
"""

from __future__ import annotations

from .classes import ClassReport, VerifyRow
from .coloring import Coloring, KempeMove, KempeSequence
from .errors import GraphFormatError
from .solver import SolveTrace


def coloring_to_obj(c: Coloring) -> dict:
    return {"k": c.k, "colors": list(c.colors)}


def coloring_from_obj(obj) -> Coloring:
    if not isinstance(obj, dict) or "k" not in obj or "colors" not in obj:
        raise GraphFormatError('colouring JSON must be {"k": int, "colors": [...]}')
    k, colors = obj["k"], obj["colors"]
    if not isinstance(k, int) or not isinstance(colors, list) or not all(
        isinstance(c, int) for c in colors
    ):
        raise GraphFormatError("colouring JSON fields have the wrong types")
    return Coloring(k, tuple(colors))


def sequence_to_obj(seq: KempeSequence) -> dict:
    return {
        "start": coloring_to_obj(seq.start),
        "moves": [{"anchor": m.anchor, "a": m.a, "b": m.b} for m in seq.moves],
    }


def sequence_from_obj(obj) -> KempeSequence:
    if not isinstance(obj, dict) or "start" not in obj or "moves" not in obj:
        raise GraphFormatError('sequence JSON must be {"start": ..., "moves": [...]}')
    start = coloring_from_obj(obj["start"])
    moves = []
    for i, m in enumerate(obj["moves"]):
        if not isinstance(m, dict) or not {"anchor", "a", "b"} <= set(m):
            raise GraphFormatError(f"move {i} must have anchor, a and b")
        moves.append(KempeMove(int(m["anchor"]), int(m["a"]), int(m["b"])))
    return KempeSequence(start, tuple(moves))


def trace_to_obj(trace: SolveTrace, moves: int) -> dict:
    return {
        "cases": list(trace.cases),
        "moves": moves,
        "subproblems": [dict(s) for s in trace.subproblems],
    }


def class_report_to_obj(report: ClassReport) -> dict:
    return {
        "graph6": report.graph_id,
        "k": report.k,
        "colorings": report.colorings,
        "classes": report.classes,
        "sizes": list(report.sizes),
        "representatives": [coloring_to_obj(c) for c in report.representatives],
    }


def verify_row_to_obj(row: VerifyRow) -> dict:
    obj = {
        "graph6": row.graph6,
        "n": row.n,
        "colorings": row.colorings,
        "classes": row.classes,
        "sizes": list(row.sizes),
        "verdict": row.verdict,
    }
    if row.note:
        obj["note"] = row.note
    return obj
