import json
import re
import subprocess
import sys
from fractions import Fraction

import pytest

from ghk.cli import run_command
from ghk.errors import ContractViolation
from ghk.fmt import exact_decimal, rational_json


def run_json(capsys, argv):
    code = run_command(argv)
    captured = capsys.readouterr()
    report = json.loads(captured.out) if captured.out else None
    return code, report, captured.err


class TestFormatting:
    def test_exact_decimal(self):
        assert exact_decimal(Fraction(1, 3)) == "0.333333333333"
        assert exact_decimal(Fraction(2, 3)) == "0.666666666667"
        assert exact_decimal(Fraction(1, 2)) == "0.5"
        assert exact_decimal(Fraction(-5, 4)) == "-1.25"
        assert exact_decimal(Fraction(0)) == "0"
        assert exact_decimal(Fraction(6)) == "6"
        assert exact_decimal(Fraction(10**13)) == "10000000000000"
        assert exact_decimal(Fraction(1, 7)) == "0.142857142857"

    def test_rational_json(self):
        assert rational_json(Fraction(2, 3)) == {
            "rational": "2/3",
            "decimal": "0.666666666667",
        }
        assert rational_json(Fraction(5)) == {"rational": "5", "decimal": "5"}


class TestEghkCommand:
    def test_family(self, capsys):
        code, report, err = run_json(capsys, ["eghk", "--family", "a:3,1"])
        assert code == 0
        assert report["command"] == "eghk"
        assert report["input"] == {"family": "a:3,1"}
        assert report["results"]["eghk"]["rational"] == "2/3"
        assert report["results"]["thresholds"] == [1, 0]
        assert report["results"]["saturated"] is True
        assert report["results"]["closed_form"]["rational"] == "2/3"
        assert "2/3" in err

    def test_file_document(self, capsys, tmp_path):
        doc = {
            "label": "skew sample",
            "cone": {"rays": [[1, 0], [1, 3]]},
            "generators": [[1, 0], [1, 1]],
        }
        path = tmp_path / "ideal.json"
        path.write_text(json.dumps(doc))
        code, report, err = run_json(capsys, ["eghk", "--file", str(path)])
        assert code == 0
        assert report["input"] == doc
        assert report["results"]["eghk"]["rational"] == "1/3"
        assert "skew sample" in err

    def test_report_round_trips_through_json(self, capsys):
        code, report, _ = run_json(capsys, ["eghk", "--family", "veronese:4,2"])
        assert code == 0
        assert json.loads(json.dumps(report)) == report


class TestFunctionCommand:
    def test_values(self, capsys):
        code, report, _ = run_json(
            capsys,
            ["function", "--family", "veronese:3,1", "--prime", "2", "--max-n", "2"],
        )
        assert code == 0
        results = report["results"]
        assert results["values"] == [0, 1, 5]
        assert results["limit"]["rational"] == "1/3"
        assert results["convergence_constant"] == 8
        assert results["normalized"][2]["rational"] == "5/16"

    def test_composite_characteristic_fails(self, capsys):
        code, report, err = run_json(
            capsys,
            ["function", "--family", "veronese:3,1", "--prime", "4", "--max-n", "2"],
        )
        assert code == 1
        assert report is None
        assert "error" in err


class TestSplitCommand:
    def test_values(self, capsys):
        code, report, _ = run_json(
            capsys, ["split", "--family", "a:3,1", "--q", "3"]
        )
        assert code == 0
        results = report["results"]
        assert (results["total_gap"], results["sym_vs_ord"], results["ord_vs_frob"]) == (
            6,
            3,
            3,
        )
        assert results["additive"] is True

    def test_not_saturated_is_input_error(self, capsys):
        code, report, err = run_json(
            capsys, ["split", "--family", "quadrant:(2,0);(0,3)", "--q", "2"]
        )
        assert code == 1
        assert report is None
        assert "saturated" in err

    def test_bad_q(self, capsys):
        code, _, _ = run_json(capsys, ["split", "--family", "a:3,1", "--q", "0"])
        assert code == 1


class TestPowersCommand:
    def test_torsion_and_fit(self, capsys):
        code, report, _ = run_json(
            capsys, ["powers", "--family", "a:3,1", "--max-n", "21"]
        )
        assert code == 0
        results = report["results"]
        assert results["values"][:4] == [0, 1, 3, 5]
        torsion = results["torsion"]
        assert torsion["order"] == 3
        assert torsion["shift"] == [3, -1]
        assert torsion["newton_multiplicity"] == 6
        assert torsion["predicted_leading"]["rational"] == "1/3"
        fit = results["fit"]
        assert fit["period"] == 3
        for cls in fit["classes"]:
            assert cls["coefficients"][0]["rational"] == "1/3"

    def test_explicit_period_on_unsaturated_input(self, capsys):
        code, report, _ = run_json(
            capsys,
            [
                "powers",
                "--family",
                "quadrant:(1,0);(0,2)",
                "--max-n",
                "8",
                "--period",
                "1",
            ],
        )
        assert code == 0
        results = report["results"]
        assert "torsion" not in results
        assert results["fit"]["classes"][0]["coefficients"][0]["rational"] == "1"

    def test_torsion_bound_too_small(self, capsys):
        code, report, err = run_json(
            capsys,
            ["powers", "--family", "a:3,1", "--max-n", "21", "--max-order", "2"],
        )
        assert code == 1
        assert report is None
        assert "torsion" in err


class TestReptypeCommand:
    def test_flags(self, capsys):
        code, report, _ = run_json(capsys, ["reptype", "--r", "3", "--u", "1,0"])
        assert code == 0
        assert report["results"]["eghk"]["rational"] == "2/3"
        assert report["results"]["weights"][0]["rational"] == "1/3"

    def test_custom_weights(self, capsys):
        code, report, _ = run_json(
            capsys, ["reptype", "--r", "3", "--u", "1,1", "--v", "1/2,1/2"]
        )
        assert code == 0
        assert report["results"]["eghk"]["rational"] == "2"

    def test_file_with_table(self, capsys, tmp_path):
        doc = {
            "reptype": {
                "table": [[1, 1], [1, 1]],
                "multiplicities": [1, 0],
                "weights": ["1/3", "1/3"],
            }
        }
        path = tmp_path / "mods.json"
        path.write_text(json.dumps(doc))
        code, report, _ = run_json(capsys, ["reptype", "--file", str(path)])
        assert code == 0
        assert report["results"]["eghk"]["rational"] == "2/3"

    def test_asymmetric_table_rejected(self, capsys, tmp_path):
        doc = {"reptype": {"table": [[1, 2], [3, 1]], "multiplicities": [1, 0],
                           "weights": ["1", "1"]}}
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        code, report, err = run_json(capsys, ["reptype", "--file", str(path)])
        assert code == 1
        assert "differ" in err

    def test_missing_arguments(self, capsys):
        code, _, _ = run_json(capsys, ["reptype", "--r", "3"])
        assert code == 1

    def test_dimension_mismatch(self, capsys):
        code, _, _ = run_json(capsys, ["reptype", "--r", "5", "--u", "1,0"])
        assert code == 1


class TestVerifyCommand:
    def test_family_passes(self, capsys):
        code, report, err = run_json(capsys, ["verify", "--family", "a:4,1"])
        assert code == 0
        assert report["results"]["all_passed"] is True
        names = {c["name"] for c in report["results"]["checks"]}
        assert "saturation-oracle" in names
        assert "gap-split-additivity" in names
        assert "PASS saturation-oracle" in err

    def test_unsaturated_input_still_verifies(self, capsys):
        code, report, _ = run_json(
            capsys, ["verify", "--family", "quadrant:(2,0);(0,3)"]
        )
        assert code == 0
        assert report["results"]["all_passed"] is True


class TestErrorMapping:
    def test_unknown_family(self, capsys):
        code, report, err = run_json(capsys, ["eghk", "--family", "mystery:1"])
        assert code == 1
        assert report is None
        assert "error" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run_json(capsys, ["eghk", "--file", str(tmp_path / "no.json")])
        assert code == 1
        assert "cannot read" in err

    def test_malformed_json(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        code, _, err = run_json(capsys, ["eghk", "--file", str(path)])
        assert code == 1
        assert "JSON" in err

    def test_bad_document_shape(self, capsys, tmp_path):
        path = tmp_path / "doc.json"
        path.write_text(json.dumps({"cone": {"rays": [[1, 0]]}, "generators": [[1, 1]]}))
        code, _, err = run_json(capsys, ["eghk", "--file", str(path)])
        assert code == 1
        assert "two rays" in err

    def test_collinear_rays_in_document(self, capsys, tmp_path):
        path = tmp_path / "doc.json"
        path.write_text(
            json.dumps({"cone": {"rays": [[1, 2], [2, 4]]}, "generators": [[1, 2]]})
        )
        code, _, err = run_json(capsys, ["eghk", "--file", str(path)])
        assert code == 1
        assert "collinear" in err

    def test_contract_violation_maps_to_internal_error(self, capsys, monkeypatch):
        def boom(ideal):
            raise ContractViolation("boom")

        monkeypatch.setattr("ghk.cli.eghk", boom)
        code, report, err = run_json(capsys, ["eghk", "--family", "a:3,1"])
        assert code == 2
        assert report is None
        assert "internal error" in err

    def test_unexpected_exception_maps_to_internal_error(self, capsys, monkeypatch):
        def boom(ideal, q_mark=None):
            raise RuntimeError("surprise")

        monkeypatch.setattr("ghk.cli.render_region_svg", boom)
        code, _, err = run_json(
            capsys, ["plot", "--family", "a:3,1", "--out", "/tmp/unused.svg"]
        )
        assert code == 2
        assert "internal error" in err


class TestEntryPoint:
    def test_module_execution(self):
        proc = subprocess.run(
            [sys.executable, "-m", "ghk", "eghk", "--family", "veronese:3,1"],
            capture_output=True,
            text=True,
            timeout=60,
        )
        assert proc.returncode == 0
        report = json.loads(proc.stdout)
        assert report["results"]["eghk"]["rational"] == "1/3"
