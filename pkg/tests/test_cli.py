"""Tests for the pickspace command line."""

import argparse
import json
from pathlib import Path
from typing import Any

import numpy as np
import pytest
from numpy.testing import assert_allclose

from pickspace.cli import build_parser, run
from pickspace.cli.commands import resolve_command_tolerances
from pickspace.cli.output import round_significant
from pickspace.core.parsers import JsonDocumentParser, read_document
from pickspace.data import example_path
from pickspace.models.documents import GramPayload
from pickspace.models.reports import ClassificationReport, DualMembership

EXTREME = example_path("extreme_opposite")
TWO_POINTS = example_path("two_point_disk")
COLLINEAR = example_path("collinear_triple")

NOT_PICK = [[1.0, 0.4, 0.4], [0.4, 1.0, -0.4], [0.4, -0.4, 1.0]]

# Loose enough for documents rounded to twelve significant digits
ROUNDED_TOL = ["--tol-rankone", "1e-7", "--tol-match", "1e-7"]


def _run_json(capsys: pytest.CaptureFixture[str], argv: list[str]) -> Any:
    assert run(argv) == 0
    return json.loads(capsys.readouterr().out)


def _write(tmp_path: Path, name: str, data: dict[str, Any]) -> str:
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def test_delta_json(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the delta matrix of the points {0, 1/2}."""
    out = _run_json(capsys, ["delta", TWO_POINTS, "--json"])
    assert out == {"n": 2, "delta": [[0.0, 0.5], [0.5, 0.0]]}


def test_delta_text(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the plain text rendering."""
    assert run(["delta", TWO_POINTS]) == 0
    out = capsys.readouterr().out
    assert "n: 2" in out
    assert "delta:" in out
    assert "[0, 0.5]" in out


def test_classify_extreme_set(capsys: pytest.CaptureFixture[str]) -> None:
    """Test that the three point set is classified as not a model space."""
    out = _run_json(capsys, ["classify", EXTREME, "--json"])
    report = ClassificationReport.model_validate(out)
    assert [c.verdict.value for c in report.criteria] == ["false"] * 6
    assert report.consistent
    assert out["is_model_space"] is False


def test_classify_text_lists_criteria(capsys: pytest.CaptureFixture[str]) -> None:
    """Test that the text report names every criterion."""
    assert run(["classify", TWO_POINTS]) == 0
    out = capsys.readouterr().out
    assert "c2_triples:" in out
    assert "not_applicable" in out


def test_gen_is_reproducible(capsys: pytest.CaptureFixture[str]) -> None:
    """Test that equal seeds give byte-identical documents."""
    assert run(["gen", "--geodesic", "--n", "4", "--seed", "7"]) == 0
    first = capsys.readouterr().out
    assert run(["gen", "--geodesic", "--n", "4", "--seed", "7"]) == 0
    assert capsys.readouterr().out == first


def test_generated_geodesic_set_is_model_space(
    capsys: pytest.CaptureFixture[str],
    tmp_path: Path,
) -> None:
    """Test that a generated geodesic set classifies as a model space."""
    document = _run_json(capsys, ["gen", "--geodesic", "--n", "4", "--m", "2", "--seed", "7"])
    path = _write(tmp_path, "geodesic.json", document)
    out = _run_json(capsys, ["classify", path, "--json", *ROUNDED_TOL])
    report = ClassificationReport.model_validate(out)
    assert [c.verdict.value for c in report.criteria] == ["true"] * 6
    assert report.is_model_space


def test_generated_generic_set_is_not_model_space(
    capsys: pytest.CaptureFixture[str],
    tmp_path: Path,
) -> None:
    """Test that a generated generic set fails every criterion."""
    argv = ["gen", "--generic", "--n", "4", "--m", "2", "--seed", "3", "--margin", "1e-4"]
    path = _write(tmp_path, "generic.json", _run_json(capsys, argv))
    out = _run_json(capsys, ["classify", path, "--json"])
    report = ClassificationReport.model_validate(out)
    assert [c.verdict.value for c in report.criteria] == ["false"] * 6


def test_missing_file_exits_2(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    """Test that unreadable documents are input errors."""
    assert run(["classify", str(tmp_path / "nope.json")]) == 2
    assert "error:" in capsys.readouterr().err


def test_malformed_document_exits_2(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    """Test that parse errors name the file and line."""
    path = tmp_path / "bad.json"
    path.write_text('{\n  "points": [\n', encoding="utf-8")
    assert run(["delta", str(path)]) == 2
    assert f"{path}:3" in capsys.readouterr().err


def test_base_out_of_range_exits_2() -> None:
    """Test that the 1-based base index is checked."""
    assert run(["extremal", TWO_POINTS, "--base", "9"]) == 2
    assert run(["extremal", TWO_POINTS, "--base", "0"]) == 2


def test_gram_outside_f_exits_3(tmp_path: Path) -> None:
    """Test that classifying a Gram outside F is a numerical failure."""
    path = _write(tmp_path, "gram.json", {"kind": "gram", "entries": NOT_PICK})
    assert run(["classify", path]) == 3


def test_unknown_command_exits_2() -> None:
    """Test that argument errors exit with 2."""
    assert run(["bogus"]) == 2
    assert run(["gen"]) == 2


def test_invalid_settings_exit_2(
    capsys: pytest.CaptureFixture[str],
    monkeypatch: pytest.MonkeyPatch,
) -> None:
    """Test that a malformed environment tolerance is reported as invalid input."""
    monkeypatch.setenv("PICKSPACE_TOL", "abc")
    assert run(["delta", TWO_POINTS]) == 2
    assert "invalid settings" in capsys.readouterr().err


def test_coarse_settings_tolerance_runs(
    capsys: pytest.CaptureFixture[str],
    monkeypatch: pytest.MonkeyPatch,
) -> None:
    """Test that a coarse environment tolerance only restricts generic generation."""
    monkeypatch.setenv("PICKSPACE_TOL", "1e-3")
    assert _run_json(capsys, ["delta", TWO_POINTS, "--json"])["n"] == 2
    assert run(["gen", "--generic", "--n", "4", "--m", "2"]) == 2
    assert "rank-one" in capsys.readouterr().err
    assert run(["gen", "--generic", "--n", "4", "--m", "2", "--margin", "0.05"]) == 0


def test_flags_override_document_tolerances(tmp_path: Path) -> None:
    """Test the precedence settings < document < flags."""
    data = {
        "kind": "points",
        "points": [[[0.1, 0.0]]],
        "tolerances": {"match_tol": 1e-5, "psd_tol": 1e-6},
    }
    document = read_document(_write(tmp_path, "doc.json", data))
    args = build_parser().parse_args(["classify", "-", "--tol-match", "1e-4"])
    tol = resolve_command_tolerances(args, document)
    assert tol.match_tol == 1e-4
    assert tol.psd_tol == 1e-6
    assert tol.rankone_tol == 1e-8


def test_gen_uses_settings_tolerances() -> None:
    """Test that commands without a document start from the settings."""
    args = argparse.Namespace(tol_psd=None, tol_rankone=1e-7, tol_match=None)
    tol = resolve_command_tolerances(args, None)
    assert tol.rankone_tol == 1e-7
    assert tol.match_tol == 1e-8


def test_extremal_two_points(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the extremal multiplier at the origin vanishing at 1/2."""
    out = _run_json(capsys, ["extremal", TWO_POINTS, "--json"])
    assert out["solution"]["index"] == 0
    assert out["solution"]["zero_set"] == [1]
    assert out["solution"]["value"] == pytest.approx(0.5)
    assert out["reformulations"]["closed_form"] == pytest.approx(0.5)
    assert out["reformulations"]["delta_product"] == pytest.approx(0.5)


def test_dual_is_a_gram_document(capsys: pytest.CaptureFixture[str]) -> None:
    """Test that the dual command writes a gram document that reads back."""
    out = _run_json(capsys, ["dual", TWO_POINTS, "--json"])
    document = JsonDocumentParser().parse(json.dumps(out), "dual.json")
    assert isinstance(document.payload, GramPayload)
    assert_allclose(document.payload.to_gram().entries, [[4, -3], [-3, 3]], atol=1e-9)


def test_model_command_builds_model_gram(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the model Gram of the zeros {0, 1/2, -1/2} as a gram document."""
    out = _run_json(capsys, ["model", COLLINEAR, "--json"])
    document = JsonDocumentParser().parse(json.dumps(out), "model.json")
    assert isinstance(document.payload, GramPayload)
    expected = [[1, 1, 1], [1, 4 / 3, 4 / 5], [1, 4 / 5, 4 / 3]]
    assert_allclose(document.payload.to_gram().entries, expected, atol=1e-9)


def test_model_command_needs_disk_points(capsys: pytest.CaptureFixture[str]) -> None:
    """Test that points of a higher dimensional ball are not zeros of a product."""
    assert run(["model", EXTREME]) == 2
    assert "zeros in the disk" in capsys.readouterr().err


def test_orthogonalize_two_points(capsys: pytest.CaptureFixture[str]) -> None:
    """Test that the two point space has an orthogonal rescaling."""
    out = _run_json(capsys, ["orthogonalize", TWO_POINTS, "--json"])
    assert out["report"]["verdict"] == "r_orthogonal"
    rescaled = np.array(out["rescaled"]["entries"])
    moduli = np.hypot(rescaled[..., 0], rescaled[..., 1])
    assert_allclose(moduli, [[2, np.sqrt(3)], [np.sqrt(3), 2]], atol=1e-9)


def test_geodesic_command(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the geodesic test on both example point sets."""
    assert _run_json(capsys, ["geodesic", TWO_POINTS, "--json"])["in_geodesic"] is True
    out = _run_json(capsys, ["geodesic", EXTREME, "--json"])
    assert out["in_geodesic"] is False
    assert out["margin"] > 0.1


def test_geodesic_needs_points(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    """Test that point commands reject gram documents."""
    path = _write(tmp_path, "gram.json", {"entries": [[1.0, 0.5], [0.5, 1.0]]})
    assert run(["geodesic", path]) == 2
    assert "gram document" in capsys.readouterr().err


def test_congruent_command(capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
    """Test congruence of the extreme set with a re-indexed, rotated copy."""
    swapped = {
        "points": [
            [[0.0, 0.0], [0.5, 0.0]],
            [[0.0, 0.0], [0.0, 0.0]],
            [[0.5, 0.0], [0.0, 0.0]],
        ],
    }
    path = _write(tmp_path, "swapped.json", swapped)
    out = _run_json(capsys, ["congruent", EXTREME, path, "--json"])
    assert out["congruent"] is True
    assert sorted(out["permutation"]) == [0, 1, 2]

    out = _run_json(capsys, ["congruent", EXTREME, COLLINEAR, "--json"])
    assert out["congruent"] is False


def test_realize_command(capsys: pytest.CaptureFixture[str]) -> None:
    """Test that the realization round trip is accurate."""
    out = _run_json(capsys, ["realize", EXTREME, "--json"])
    assert out["residual"] <= 1e-8
    assert out["rank"] <= 2


def test_probe_dual_commands(capsys: pytest.CaptureFixture[str]) -> None:
    """Test the dual probe on a model space and on the extreme set."""
    probe = DualMembership.model_validate(_run_json(capsys, ["probe-dual", COLLINEAR, "--json"]))
    assert probe.dual_in_m

    probe = DualMembership.model_validate(_run_json(capsys, ["probe-dual", EXTREME, "--json"]))
    assert probe.dual_degenerate
    assert not probe.dual_in_m


def test_round_significant() -> None:
    """Test rounding of nested JSON values."""
    data = {"a": [0.49999999999999994, 1], "b": True, "c": None, "d": "x"}
    assert round_significant(data, 12) == {"a": [0.5, 1], "b": True, "c": None, "d": "x"}
