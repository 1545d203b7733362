"""Tests for input document parsing and the bundled examples."""

import json
from pathlib import Path

import numpy as np
import pytest
from numpy.testing import assert_allclose

from pickspace.core.errors import BoundaryPointError, DocumentParseError, InvalidInputError
from pickspace.core.parsers import JsonDocumentParser, infer_kind, read_document
from pickspace.data import example_path, list_examples, load_example
from pickspace.models.documents import (
    DocumentKind,
    GramPayload,
    PointsPayload,
    ToleranceOverrides,
)
from pickspace.models.models import Tolerances

POINTS_DOC = """{
  "kind": "points",
  "m": 2,
  "points": [[[0.1, 0.2], [0.0, 0.0]], [[0.0, 0.0], [0.3, -0.1]]],
  "tolerances": {"match_tol": 1e-6}
}"""


@pytest.fixture
def parser() -> JsonDocumentParser:
    """Create a JSON document parser."""
    return JsonDocumentParser()


def test_parse_points_document(parser: JsonDocumentParser, tol: Tolerances) -> None:
    """Test a points document with complex pairs and tolerance overrides."""
    document = parser.parse(POINTS_DOC, "points.json")
    assert document.kind is DocumentKind.POINTS
    assert document.source == "points.json"
    ps = document.point_set()
    assert_allclose(ps.coords, [[0.1 + 0.2j, 0], [0, 0.3 - 0.1j]])
    assert document.tolerances is not None
    merged = document.tolerances.apply(tol)
    assert merged.match_tol == 1e-6
    assert merged.psd_tol == tol.psd_tol


@pytest.mark.parametrize(
    ("data", "kind"),
    [
        ({"points": []}, DocumentKind.POINTS),
        ({"entries": []}, DocumentKind.GRAM),
        ({"zeros": []}, DocumentKind.BLASCHKE),
        ({"other": []}, None),
    ],
)
def test_infer_kind(data: dict[str, list[float]], kind: DocumentKind | None) -> None:
    """Test the kind inferred from the document keys."""
    assert infer_kind(data) is kind


def test_parse_gram_without_kind(parser: JsonDocumentParser) -> None:
    """Test that a gram document is recognized by its entries."""
    document = parser.parse('{"n": 2, "entries": [[2, 1], [1, 2]]}', "g.json")
    assert isinstance(document.payload, GramPayload)
    assert_allclose(document.payload.to_gram().entries, [[2, 1], [1, 2]])


def test_parse_blaschke_document(parser: JsonDocumentParser) -> None:
    """Test that zeros are read both as zeros and as disk points."""
    document = parser.parse('{"zeros": [[0, 0], [0.5, 0.25]]}', "b.json")
    assert_allclose(document.blaschke().zeros, [0, 0.5 + 0.25j])
    assert document.point_set().m == 1


def test_malformed_json_is_line_anchored(parser: JsonDocumentParser) -> None:
    """Test that syntax errors carry the line and column."""
    with pytest.raises(DocumentParseError) as excinfo:
        parser.parse('{\n  "points": [1, 2,\n}', "bad.json")
    assert excinfo.value.line == 3
    assert "bad.json:3" in str(excinfo.value)


@pytest.mark.parametrize(
    "text",
    [
        "[1, 2, 3]",
        '{"unknown": 1}',
        '{"kind": "other", "points": []}',
        '{"kind": "points", "points": "nope"}',
        '{"kind": "gram", "entries": [[1, 0]], "extra": true}',
    ],
)
def test_invalid_documents(parser: JsonDocumentParser, text: str) -> None:
    """Test that documents not matching a schema are rejected."""
    with pytest.raises(DocumentParseError):
        parser.parse(text, "doc.json")


def test_dimension_mismatch_is_input_error(parser: JsonDocumentParser) -> None:
    """Test that a declared dimension must match the points."""
    with pytest.raises(InvalidInputError):
        parser.parse('{"m": 3, "points": [[0.1, 0.2]]}', "doc.json")


def test_boundary_point_rejected(parser: JsonDocumentParser) -> None:
    """Test that points on the unit sphere are rejected."""
    document = parser.parse('{"points": [[0.6, 0.8]]}', "doc.json")
    with pytest.raises(BoundaryPointError):
        document.point_set()


def test_gram_document_has_no_points(parser: JsonDocumentParser) -> None:
    """Test that commands needing points reject gram documents."""
    document = parser.parse('{"entries": [[1]]}', "g.json")
    with pytest.raises(InvalidInputError):
        document.point_set()
    with pytest.raises(InvalidInputError):
        document.blaschke()


def test_read_document_missing_file(tmp_path: Path) -> None:
    """Test that unreadable files are reported as parse errors."""
    with pytest.raises(DocumentParseError):
        read_document(str(tmp_path / "missing.json"))


def test_points_payload_round_trip(tmp_path: Path) -> None:
    """Test that a written points document reads back."""
    coords = np.array([[0.1 + 0.1j, 0.2], [0.0, -0.3j]])
    payload = PointsPayload(points=coords, m=2)
    path = tmp_path / "points.json"
    path.write_text(payload.model_dump_json(), encoding="utf-8")
    assert_allclose(read_document(str(path)).point_set().coords, coords)


def test_tolerance_overrides_forbid_unknown_keys() -> None:
    """Test that misspelled tolerance keys are rejected."""
    with pytest.raises(ValueError, match="psd"):
        ToleranceOverrides.model_validate({"psd": 1e-3})


def test_bundled_examples() -> None:
    """Test that every bundled example parses."""
    assert list_examples() == ["collinear_triple", "extreme_opposite", "two_point_disk"]
    assert load_example("extreme_opposite").point_set().n == 3
    assert load_example("collinear_triple").blaschke().n == 3
    with open(example_path("two_point_disk"), encoding="utf-8") as f:
        assert json.load(f)["m"] == 1
