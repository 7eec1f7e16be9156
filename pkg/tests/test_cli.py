import json

import pytest

from singdisc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompute:
    def test_inline_spec(self, capsys):
        code, out, _ = run(capsys, "compute", "--spec",
                           '{"kind":"ade","type":"A","n":3}')
        assert code == 0
        assert "verdict: COMPATIBLE" in out
        assert "Z/4" in out

    def test_spec_file(self, capsys, tmp_path):
        path = tmp_path / "quotient.json"
        path.write_text('{"kind":"cyclic_quotient","n":5,"q":2}')
        code, out, _ = run(capsys, "compute", str(path))
        assert code == 0
        assert "Z/5" in out

    def test_json_output_parses(self, capsys):
        code, out, _ = run(capsys, "compute", "--json", "--spec",
                           '{"kind":"ade","type":"E","n":8}')
        assert code == 0
        obj = json.loads(out)
        assert obj["verdict"] == "COMPATIBLE"
        assert obj["det_m"] == 1

    def test_quiet_suppresses_output(self, capsys):
        code, out, _ = run(capsys, "compute", "--quiet", "--spec",
                           '{"kind":"ade","type":"A","n":1}')
        assert code == 0
        assert out == ""

    def test_mismatch_exit_code(self, capsys):
        code, out, _ = run(capsys, "compute", "--spec",
                           '{"kind":"brieskorn_pham","a":2,"b":3,"c":11}')
        assert code == 1
        assert "MISMATCH" in out

    def test_invalid_spec_exit_code(self, capsys):
        code, _, err = run(capsys, "compute", "--spec",
                           '{"kind":"ade","type":"D","n":3}')
        assert code == 2
        assert "D requires n >= 4" in err

    def test_needs_exactly_one_source(self, capsys):
        code, _, err = run(capsys, "compute")
        assert code == 2
        assert "exactly one" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "compute", "/no/such/file.json")
        assert code == 2
        assert "cannot read" in err


class TestTables:
    def test_exit_reflects_golden_diff(self, capsys):
        # the Brieskorn z^11 golden row cannot be reproduced by exact
        # computation, so the diff is reported and the exit is nonzero
        code, out, _ = run(capsys, "tables")
        assert code == 1
        assert "E_7" in out
        assert "disagreements with the golden values" in out
        assert "x^2+y^3+z^11" in out

    def test_json_structure(self, capsys):
        code, out, _ = run(capsys, "tables", "--json")
        obj = json.loads(out)
        labels = [row["label"] for row in obj["rows"]]
        assert "E_8" in labels
        clean = [row for row in obj["rows"] if not row["diffs"]]
        assert len(clean) == len(labels) - 1


class TestSelfcheck:
    def test_summary_and_exit(self, capsys):
        code, out, _ = run(capsys, "selfcheck")
        assert code == 1  # Brieskorn family formula disagreements
        assert "COMPATIBLE: 91" in out
        assert "MISMATCH: 9" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "selfcheck", "--json")
        obj = json.loads(out)
        assert obj["cases"] == 102
        assert obj["verdicts"]["COMPATIBLE"] == 91
        assert len(obj["mismatches"]) == 9


def test_module_entry_point():
    import subprocess
    import sys
    proc = subprocess.run(
        [sys.executable, "-m", "singdisc", "compute", "--spec",
         '{"kind":"ade","type":"A","n":2}'],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "Z/3" in proc.stdout
