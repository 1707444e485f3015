import json
import subprocess
import sys

import pytest

from curvesing.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_polygon_example(capsys):
    code, out, _ = run(capsys, "polygon", "--char", "2", "--poly", "x^2+y^3")
    assert code == 0
    assert "(h, v, r) = (2, 3, 1)" in out
    code, out, _ = run(capsys, "polygon", "--char", "2", "--poly", "x^2+y^3", "--json")
    d = json.loads(out)
    assert len(d["edges"]) == 1 and (d["edges"][0]["h"], d["edges"][0]["v"], d["edges"][0]["r"]) == (2, 3, 1)


def test_semigroup_example(capsys):
    code, out, _ = run(capsys, "semigroup", "--gens", "4,6,13", "--json")
    d = json.loads(out)
    assert code == 0
    assert d["conductor"] == 16 and d["cota"]["bound"] == 16 and d["cota"]["holds"]


def test_verify_three_lines(tmp_path, capsys):
    path = tmp_path / "three_lines.json"
    path.write_text(json.dumps({"id": "three", "branches": [{"poly": "y-x"}, {"poly": "y+x"}, {"poly": "y-x^2"}]}))
    code, out, _ = run(capsys, "verify", "--char", "0", "--spec", str(path), "--json")
    assert code == 0
    d = json.loads(out)
    assert d["schema"] == "v1"
    assert all(c["status"] == "pass" for c in d["checks"])


def test_verify_corpus_and_report_file(tmp_path, capsys):
    corpus = tmp_path / "c.json"
    report = tmp_path / "r.json"
    assert run(capsys, "corpus", "--seed", "4", "--count", "12", "--out", str(corpus))[0] == 0
    code, out, _ = run(capsys, "verify", "--spec", str(corpus), "--out", str(report), "--no-milnor")
    assert code == 0 and "0 with failed checks" in out
    reports = json.loads(report.read_text())
    assert len(reports) == 12 and all(r["schema"] == "v1" for r in reports)


def test_failed_check_gives_exit_one(tmp_path, capsys):
    # the true i0 of the cusp and its tangent is 3; claiming 1 breaks the inequality
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({
        "char": 0,
        "branches": [{"semigroup": [2, 3], "poly": "y^2-x^3"}, {"poly": "y"}],
        "i0": [[0, 1], [1, 0]],
    }))
    code, out, _ = run(capsys, "verify", "--spec", str(path), "--no-milnor")
    assert code == 1 and "failed" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["polygon", "--poly", "x^2+"],
        ["polygon", "--char", "4", "--poly", "x"],
        ["semigroup", "--gens", "4,6"],
        ["semigroup", "--gens", "a,b"],
        ["verify", "--spec", "/nonexistent/file.json"],
        ["branch", "--char", "2", "--x", "t^2", "--y", "t^3"],
        ["i0", "--g", "y"],
        ["nosuchcommand"],
    ],
)
def test_input_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_i0_and_branch_and_nondeg(capsys):
    code, out, _ = run(capsys, "i0", "--x", "t^2", "--y", "t^3", "--g", "y^2-x^5", "--json")
    d = json.loads(out)
    assert code == 0 and d["agree"] and set(d["routes"].values()) == {6}
    code, out, _ = run(capsys, "branch", "--x", "t^4", "--y", "t^6+t^7", "--json")
    assert json.loads(out)["semigroup"]["generators"] == [4, 6, 13]
    code, out, _ = run(capsys, "nondeg", "--char", "3", "--poly", "x^3+y^4", "--json")
    d = json.loads(out)
    assert d["nondegenerate"] and not d["strongly_nondegenerate"]
    code, out, _ = run(capsys, "invariants", "--poly", "y^3-x^2*y-x^2*y^2+x^4", "--json")
    assert json.loads(out)["mu_newton"] == 4
    code, out, _ = run(capsys, "milnor", "--poly", "x^3+y^5", "--json")
    assert json.loads(out)["milnor"] == 8


@pytest.mark.parametrize("argv", [
    ["--char", "3", "--json", "nondeg", "--poly", "x^3+y^4"],
    ["nondeg", "--char", "3", "--json", "--poly", "x^3+y^4"],
])
def test_global_flags_before_or_after_subcommand(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    d = json.loads(out)
    assert d["nondegenerate"] and not d["strongly_nondegenerate"]


def test_trunc_flag(capsys):
    code, out, _ = run(capsys, "polygon", "--poly", "x^2+y^3+x^9", "--trunc", "5", "--json")
    d = json.loads(out)
    assert d["vertices"] == [[0, 3], [2, 0]]


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "curvesing", "semigroup", "--gens", "2,3"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0 and "conductor: 2" in res.stdout
