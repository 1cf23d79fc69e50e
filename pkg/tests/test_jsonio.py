"""JSON schema round-trips for colourings, sequences and reports."""

import json

import pytest

from kempetools import Coloring, GraphFormatError, KempeMove, KempeSequence
from kempetools.jsonio import (
    coloring_from_obj,
    coloring_to_obj,
    sequence_from_obj,
    sequence_to_obj,
)


def test_coloring_round_trip():
    c = Coloring(3, (1, 2, 3, 2, 3, 1))
    assert coloring_from_obj(json.loads(json.dumps(coloring_to_obj(c)))) == c


def test_sequence_round_trip():
    c = Coloring(3, (1, 2, 3))
    seq = KempeSequence(c, (KempeMove(0, 1, 2), KempeMove(2, 1, 3)))
    obj = json.loads(json.dumps(sequence_to_obj(seq)))
    assert sequence_from_obj(obj) == seq


def test_move_pair_normalised_on_load():
    obj = {
        "start": {"k": 3, "colors": [1, 2]},
        "moves": [{"anchor": 0, "a": 2, "b": 1}],
    }
    seq = sequence_from_obj(obj)
    assert (seq.moves[0].a, seq.moves[0].b) == (1, 2)


@pytest.mark.parametrize(
    "obj",
    [
        {"k": 3},
        {"colors": [1, 2]},
        {"k": "3", "colors": [1]},
        {"k": 3, "colors": [1, "2"]},
        [1, 2, 3],
    ],
)
def test_bad_coloring_objects(obj):
    with pytest.raises(GraphFormatError):
        coloring_from_obj(obj)


@pytest.mark.parametrize(
    "obj",
    [
        {"start": {"k": 3, "colors": [1]}},
        {"moves": []},
        {"start": {"k": 3, "colors": [1]}, "moves": [{"anchor": 0}]},
    ],
)
def test_bad_sequence_objects(obj):
    with pytest.raises(GraphFormatError):
        sequence_from_obj(obj)
