"""Command-line surface: output shapes, exit codes, reproducibility."""

import json
import os
import subprocess
import sys

import pytest

from frametc.algebra import ring_to_json
from frametc.catalog import rp_ring

DESCRIPTOR = os.path.join(os.path.dirname(__file__), "..", "descriptors", "s2.json")


class TestRingCommand:
    def test_text_shape(self, run_cli):
        code, out, err = run_cli(
            ["ring", "rp:3", "--compute", "cl,basis,poincare", "--no-timing"]
        )
        assert code == 0 and err == ""
        assert "ring: rp:3:char2" in out
        assert "poincare: 1 1 1 1" in out
        assert "cl: 3 (exact; method closed-form)" in out
        assert "cl witness: a * a * a" in out

    def test_json_shape(self, run_cli):
        code, out, err = run_cli(["ring", "rp:3", "--json", "--no-timing"])
        assert code == 0
        payload = json.loads(out)
        assert payload["ring"]["id"] == "rp:3:char2"
        assert payload["results"]["cl"]["value"] == 3
        assert payload["results"]["cl"]["witness_product"] == "a^3"
        assert payload["warnings"] == []

    def test_all_computations_at_once(self, run_cli):
        code, out, _ = run_cli(
            ["ring", "t:2:char0", "--json", "--no-timing",
             "--compute", "cl,zcl-basic,zcl-full,basis,poincare"]
        )
        assert code == 0
        results = json.loads(out)["results"]
        assert results["cl"]["value"] == 2
        assert results["zcl-basic"]["value"] == 2
        assert results["zcl-full"]["value"] == 2
        assert len(results["basis"]) == 4

    def test_ring_from_file(self, run_cli, tmp_path):
        path = tmp_path / "ring.json"
        path.write_text(json.dumps(ring_to_json(rp_ring(3))))
        code, out, _ = run_cli(["ring", str(path), "--json", "--no-timing"])
        assert code == 0
        payload = json.loads(out)
        assert payload["ring"]["id"] == str(path)
        assert payload["results"]["cl"]["value"] == 3

    def test_field_mismatch_on_file(self, run_cli, tmp_path):
        path = tmp_path / "ring.json"
        path.write_text(json.dumps(ring_to_json(rp_ring(3))))
        code, _, err = run_cli(
            ["ring", str(path), "--field", "char=3", "--no-timing"]
        )
        assert code == 1 and "error:" in err

    def test_exhausted_budget_is_a_warning_exit(self, run_cli):
        code, out, _ = run_cli(
            ["ring", "so:5:char2", "--compute", "zcl-basic",
             "--budget", "10", "--no-timing"]
        )
        assert code == 2
        assert "budget exhausted" in out


class TestFrameBundleCommand:
    def test_text_shape(self, run_cli):
        code, out, _ = run_cli(["frame-bundle", "s2", "--no-timing"])
        assert code == 0
        assert "interval: TC(F(M)) in [4, 4]" in out
        assert "rule\tkind\tvalue\tfield\tstatement" in out

    def test_json_validates_against_schema(self, run_cli, schema_validator):
        validator = schema_validator("report.schema.json")
        for key in ("s2", "t2", "rp3"):
            code, out, _ = run_cli(["frame-bundle", key, "--json", "--no-timing"])
            assert code == 0
            assert not list(validator.iter_errors(json.loads(out))), key

    def test_file_matches_builtin(self, run_cli):
        _, from_key, _ = run_cli(["frame-bundle", "s2", "--json", "--no-timing"])
        _, from_file, _ = run_cli(
            ["frame-bundle", DESCRIPTOR, "--json", "--no-timing"]
        )
        assert from_key == from_file

    def test_unknown_key(self, run_cli):
        code, _, err = run_cli(["frame-bundle", "klein", "--no-timing"])
        assert code == 1
        assert "neither a descriptor file nor a built-in key" in err

    def test_missing_file(self, run_cli):
        code, _, err = run_cli(["frame-bundle", "no/such/file.json"])
        assert code == 1 and "error:" in err


class TestExamplesCommand:
    def test_agreeing_subset_exits_zero(self, run_cli):
        code, out, _ = run_cli(["examples", "rp1", "t2", "--no-timing"])
        assert code == 0
        assert "yes" in out and "NO" not in out

    def test_disagreeing_row_exits_two(self, run_cli):
        code, out, _ = run_cli(["examples", "s2", "t3", "--no-timing"])
        assert code == 2
        assert "NO" in out
        assert "note (t3):" in out

    def test_json_mode(self, run_cli):
        code, out, _ = run_cli(["examples", "rp1", "--json", "--no-timing"])
        assert code == 0
        rows = json.loads(out)["examples"]
        assert rows[0]["key"] == "rp1" and rows[0]["agrees"] is True

    def test_unknown_example(self, run_cli):
        code, _, err = run_cli(["examples", "rp2", "--no-timing"])
        assert code == 1 and "unknown example keys" in err


class TestCommonFlags:
    def test_bad_compute_item(self, run_cli):
        code, _, err = run_cli(["ring", "rp:3", "--compute", "bogus"])
        assert code == 1 and "unknown --compute item" in err

    def test_threads_must_be_positive(self, run_cli):
        with pytest.raises(SystemExit):
            run_cli(["ring", "rp:3", "--threads", "0"])

    def test_thread_count_never_changes_output(self, run_cli):
        for argv in (
            ["ring", "so:4:char2", "--compute", "cl,zcl-basic", "--json"],
            ["frame-bundle", "rp3", "--json"],
            ["examples", "t2"],
        ):
            runs = [
                run_cli(argv + ["--no-timing", "--threads", str(n)])
                for n in (1, 4)
            ]
            assert runs[0] == runs[1]

    def test_timing_line_present_by_default(self, run_cli):
        _, text_out, _ = run_cli(["ring", "rp:3"])
        assert "elapsed" in text_out
        _, json_out, _ = run_cli(["ring", "rp:3", "--json"])
        assert "elapsed_seconds" in json.loads(json_out)

    def test_no_timing_removes_it(self, run_cli):
        _, out, _ = run_cli(["ring", "rp:3", "--json", "--no-timing"])
        assert "elapsed_seconds" not in json.loads(out)


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "frametc.cli", "ring", "rp:3", "--no-timing"],
            capture_output=True,
            text=True,
            timeout=120,
        )
        assert proc.returncode == 0
        assert "cl: 3" in proc.stdout
