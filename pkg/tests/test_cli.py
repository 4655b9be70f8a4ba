import json
import subprocess
import sys

import pytest
from support import fixture

from dblcoh.cli import EXIT_ERROR, EXIT_FAIL, EXIT_OK, main, to_text

SPAN = ["--builtin", "span", "--max-size", "1", "--max-apex", "2"]


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_builtin_passes(capsys):
    code, out, _ = _run(capsys, "validate", *SPAN)
    report = json.loads(out)
    assert code == EXIT_OK and report["ok"] and report["exit_code"] == 0
    assert "timings" not in report
    assert report["model"]


def test_lift_two_group_text(capsys):
    code, out, _ = _run(capsys, "lift", "--table", fixture("two_group"), "--level", "symmetric", "--format", "text")
    assert code == EXIT_OK
    for group in ("three equations", "four 2-cell diagrams", "two axioms", "one additional axiom"):
        assert f"[{group}]" in out
    assert "cite: " in out
    assert "constraint pi at" in out
    assert out.rstrip().endswith("result: PASS (exit 0)")


def test_lift_theta_mode(capsys):
    code, out, _ = _run(capsys, "lift", *SPAN, "--level", "braided", "--check-mode", "theta")
    assert code == EXIT_OK
    assert json.loads(out)["check_mode"] == "theta"


def test_nonfibrant_exit_one(capsys):
    code, out, _ = _run(capsys, "lift", "--table", fixture("nonfibrant"))
    report = json.loads(out)
    assert code == EXIT_FAIL
    assert report["error"].startswith("NotFibrant")
    assert any(not r["passed"] and "f" in r["counterexample"] for rep in report["reports"] for r in rep["results"])


def test_nonfibrant_with_isofibrant_needs_tensor(capsys):
    code, _, err = _run(capsys, "lift", "--table", fixture("nonfibrant"), "--isofibrant")
    assert code == EXIT_ERROR
    assert "tensor" in err


@pytest.mark.parametrize("name", ["broken_interchange", "broken_hexagon", "non_involutive"])
def test_broken_models_exit_one(capsys, name):
    code, out, _ = _run(capsys, "validate", "--table", fixture(name))
    assert code == EXIT_FAIL
    assert not json.loads(out)["ok"]


def test_braided_level_needs_braiding(tmp_path, capsys):
    with open(fixture("two_group"), encoding="utf-8") as fh:
        d = json.load(fh)
    del d["braiding"]
    p = tmp_path / "plain.json"
    p.write_text(json.dumps(d))
    assert _run(capsys, "lift", "--table", str(p))[0] == EXIT_OK
    code, _, err = _run(capsys, "lift", "--table", str(p), "--level", "braided")
    assert code == EXIT_ERROR and "braiding" in err


def test_malformed_json_exit_two(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("{ not json")
    code, out, err = _run(capsys, "validate", "--table", str(p))
    assert code == EXIT_ERROR and out == ""
    assert "invalid JSON" in err
    assert _run(capsys, "report", str(p))[0] == EXIT_ERROR


def test_schema_error_and_missing_file_exit_two(tmp_path, capsys):
    p = tmp_path / "old.json"
    p.write_text(json.dumps({"schema_version": 0}))
    assert _run(capsys, "validate", "--table", str(p))[0] == EXIT_ERROR
    assert _run(capsys, "validate", "--table", str(tmp_path / "absent.json"))[0] == EXIT_ERROR


def test_usage_error_exit_two(capsys):
    with pytest.raises(SystemExit) as err:
        main(["lift", "--builtin", "span", "--table", fixture("two_group")])
    assert err.value.code == 2
    capsys.readouterr()


def test_report_renders_and_round_trips(tmp_path, capsys):
    saved = tmp_path / "r.json"
    code = main(["lift", *SPAN, "--level", "symmetric", "--output", str(saved)])
    assert code == EXIT_OK
    capsys.readouterr()
    code, text, _ = _run(capsys, "report", str(saved))
    assert code == EXIT_OK
    assert text == to_text(json.loads(saved.read_text()))
    code, again, _ = _run(capsys, "report", str(saved), "--format", "json")
    assert json.loads(again) == json.loads(saved.read_text())


def test_empty_report_renders_header_only(tmp_path, capsys):
    p = tmp_path / "empty.json"
    p.write_text("{}")
    code, text, _ = _run(capsys, "report", str(p))
    assert code == EXIT_OK and text == "dblcoh report\n"
    p.write_text("[]")
    assert _run(capsys, "report", str(p))[0] == EXIT_ERROR


def test_same_seed_same_bytes(capsys):
    argv = ["lift", *SPAN, "--level", "symmetric", "--seed", "4", "--budget", "5"]
    first = _run(capsys, *argv)[1]
    assert _run(capsys, *argv)[1] == first
    other = _run(capsys, *argv[:-4], "--seed", "5", "--budget", "5")[1]
    assert json.loads(other)["seed"] == 5


def test_timings_are_opt_in(capsys):
    code, out, _ = _run(capsys, "validate", *SPAN, "--timings")
    t = json.loads(out)["timings"]
    assert set(t) == {"load", "structure"}
    assert all(v >= 0 for v in t.values())


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dblcoh", "validate", "--table", fixture("two_group"),
                           "--format", "text"], capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0
    assert "result: PASS" in proc.stdout
