"""
Tests for the structure JSON documents.
"""

import json
import pytest

from src.core.errors import ParseError
from src.construct.pipeline import construct_5c
from src.structures.labeling import phi_inv
from src.structures.serialization import (
    dumps_structure,
    labeling_document,
    labeling_from_document,
    orientation_document,
    orientation_from_document,
    parse_structure,
    wood_document,
    wood_from_document,
)
from src.structures.wood import psi


def test_documents_reload(icosa11):
    o = construct_5c(icosa11)
    l = phi_inv(o)
    w = psi(o)

    doc = parse_structure(json.loads(dumps_structure(orientation_document(o))))
    assert doc.kind == "orientation"
    assert orientation_from_document(doc, o.completion) == o

    doc = parse_structure(json.loads(dumps_structure(labeling_document(l))))
    assert doc.kind == "labeling"
    assert labeling_from_document(doc, icosa11) == l

    doc = parse_structure(json.loads(dumps_structure(wood_document(w))))
    assert doc.kind == "wood"
    assert wood_from_document(doc, icosa11) == w


def test_wood_document_lists_every_inner_arc(w5):
    doc = wood_document(psi(construct_5c(w5)))
    assert len(doc.arcs) == 10
    colored = sorted((a.tail, a.head, a.color) for a in doc.arcs if a.color is not None)
    assert colored == [(5, i, i + 1) for i in range(5)]


def test_dumps_is_stable(w5):
    o = construct_5c(w5)
    assert dumps_structure(orientation_document(o)) == dumps_structure(orientation_document(construct_5c(w5)))


def test_parse_errors(w5):
    with pytest.raises(ParseError):
        parse_structure({"kind": "drawing"})
    with pytest.raises(ParseError):
        parse_structure({"kind": "wood", "arcs": [{"tail": 0, "head": 1, "color": 7}]})
    doc = parse_structure({"kind": "wood", "arcs": [{"tail": 0, "head": 2, "color": 1}]})
    with pytest.raises(ParseError):
        wood_from_document(doc, w5)
    doc = parse_structure({"kind": "labeling", "corners": [{"vertex": 0, "index": 9, "label": 1}]})
    with pytest.raises(ParseError):
        labeling_from_document(doc, w5)
