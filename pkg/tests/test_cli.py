import json

import pytest

from aqt.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_stat(capsys):
    code, out, _ = run(capsys, "stat", "--n", "3", "--window", "1,5,0")
    assert code == 0
    rec = json.loads(out)
    assert rec["shi"] == 3 and rec["ish"] == 2
    assert list(rec) == sorted(rec)
    code, out, _ = run(capsys, "stat", "--n", "3", "--window", "1,2,3")
    rec = json.loads(out)
    assert rec["shi"] == rec["ish"] == rec["ish_inv"] == rec["length"] == 0


def test_stat_bad_sum(capsys):
    code, _, err = run(capsys, "stat", "--n", "3", "--window", "1,4,0")
    assert code == 2
    assert "BadSum" in err


def test_usage_error(capsys):
    assert run(capsys, "table")[0] == 2
    assert run(capsys, "verify", "--suite", "nope")[0] == 2


def test_table_json_and_csv(capsys):
    code, out, _ = run(capsys, "table", "--n", "3", "--m", "1")
    assert json.loads(out)["matrix"] == [[1, 0, 0, 0], [2, 1, 0, 0], [2, 3, 1, 0], [1, 2, 2, 1]]
    code, out, _ = run(capsys, "--csv", "table", "--n", "3", "--m", "2", "--negative",
                       "--positive-only")
    lines = out.strip().splitlines()
    assert lines[0] == "shi\\ish_inv,0,1,2,3,4"
    assert lines[-1] == "4,0,0,0,0,1"


def test_table_budget(capsys):
    code, _, err = run(capsys, "table", "--n", "6", "--m", "2", "--budget", "1000")
    assert code == 2 and "BudgetExceeded" in err


def test_charpoly_and_counts(capsys):
    code, out, _ = run(capsys, "charpoly", "--family", "ish", "--n", "3")
    assert out.strip() == '{"coeffs": [0, 9, -6, 1], "family": "ish", "n": 3}'
    code, out, _ = run(capsys, "counts", "--family", "ish", "--n", "3")
    rec = json.loads(out)
    assert (rec["chambers"], rec["bounded"]) == (16, 4)
    assert run(capsys, "counts", "--family", "bogus", "--n", "3")[0] == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "5", "--p", "2")
    rec = json.loads(out)
    assert (rec["n"], rec["p"], len(rec["alcoves"])) == (5, 2, 16)
    code, out, _ = run(capsys, "--csv", "enumerate", "--n", "3", "--m", "1")
    lines = out.strip().splitlines()
    assert lines[0] == "descriptor-hash,min-window,length,bounded"
    assert len(lines) == 17
    assert sum(1 for line in lines if line.endswith("true")) == 4


def test_bijection(capsys):
    code, out, _ = run(capsys, "bijection", "--window=-1,4,3")
    rec = json.loads(out)["records"][0]
    assert rec["path"] == {"w": [1, 3, 2], "ideal": [[1, 2], [1, 3]]}
    code, out, _ = run(capsys, "bijection", "--labels", "1,3,2", "--gens", "1-2")
    assert json.loads(out)["records"][0]["window"] == [-1, 4, 3]
    code, out, _ = run(capsys, "bijection", "--n", "3")
    assert code == 0 and len(json.loads(out)["records"]) == 16
    code, _, err = run(capsys, "bijection", "--labels", "1,3,2", "--gens", "2-3")
    assert code == 2 and "ValleyViolation" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "mystery-case")
    rep = json.loads(out)
    assert code == 0 and rep["ok"]
    cases = {c["claim"]: c for c in rep["cases"]}
    assert cases["ish-inv-distribution"]["actual"] == [10, 5, 1]
    assert cases["dominant-inverse-distribution"]["actual"] == [1, 1, 1]
    code, out, _ = run(capsys, "verify", "--suite", "bijection", "--n-max", "3")
    assert code == 0
    assert {c["status"] for c in json.loads(out)["cases"]} == {"proved-match"}


def test_verify_mismatch_exit(capsys, monkeypatch):
    from aqt import verify

    def broken(bounds):
        rep = verify.Report("assertions")
        rep.add("forced", {}, 1, 2)
        return rep
    monkeypatch.setitem(verify.RUNNERS, "assertions", broken)
    code, out, _ = run(capsys, "verify", "--suite", "assertions")
    assert code == 1
    assert json.loads(out)["cases"][0]["status"] == "mismatch"


@pytest.mark.parametrize("argv", [
    ["table", "--n", "3", "--m", "2"],
    ["genfun", "--n", "3", "--m", "1"],
    ["enumerate", "--n", "3", "--m", "2"],
])
def test_deterministic(capsys, argv):
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first
