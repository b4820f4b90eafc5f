import csv
import io
import json

import pytest

from qyt import verify
from qyt.cli import main
from qyt.verify import SuiteReport


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_count_examples(capsys):
    code, out = run(capsys, "count", "--shape", "2,2,1", "--exact-entry", "3")
    assert code == 0 and out.strip() == "3"
    code, out = run(capsys, "count", "--shape", "3,2", "--syt")
    assert code == 0 and out.strip() == "5"
    code, out = run(capsys, "count", "--shape", "2,2", "--ssyt", "3")
    assert code == 0 and out.strip() == "6"
    code, out = run(capsys, "count", "--shape", "2,2,1", "--max-entry", "4")
    assert code == 0 and out.strip() == "5"


def test_count_json(capsys):
    code, out = run(capsys, "count", "--shape", "2,2,1", "--exact-entry", "3",
                    "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob == {"shape": "2,2,1", "mode": "exact-entry", "arg": 3, "count": 3}


def test_board_examples(capsys):
    code, out = run(capsys, "board", "--shape", "3,2")
    assert code == 0 and out.strip() == "2,2,2,3,3"
    code, out = run(capsys, "board", "--shape", "3,2", "--plus-one")
    assert code == 0 and out.strip() == "3,3,3,4,4"
    code, out = run(capsys, "board", "--shape", "2,2,1", "--hits")
    assert code == 0 and out.strip() == "0,48,72,0,0,0"


def test_board_csv_and_json_agree(capsys):
    code, json_out = run(capsys, "board", "--shape", "2,2,1", "--hits",
                         "--format", "json")
    assert code == 0
    code, csv_out = run(capsys, "board", "--shape", "2,2,1", "--hits",
                        "--format", "csv")
    assert code == 0
    blob = json.loads(json_out)
    rows = list(csv.DictReader(io.StringIO(csv_out)))
    assert [int(r["count"]) for r in rows] == blob["hit_numbers"]
    assert [int(r["k"]) for r in rows] == list(range(len(blob["hit_numbers"])))


def test_board_q_hits(capsys):
    code, out = run(capsys, "board", "--shape", "2,1", "--q-hits", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    # entries are [degree, coeff] pairs per k; q=1 totals give hit numbers
    totals = [sum(c for _, c in pairs) for pairs in blob["q_hit_numbers"]]
    code, out = run(capsys, "board", "--shape", "2,1", "--hits")
    assert totals == [int(v) for v in out.strip().split(",")]


def test_verify_pass_and_exit_codes(capsys):
    code, out = run(capsys, "verify", "hit", "--max-n", "4")
    assert code == 0
    assert "hit: pass" in out
    code, out = run(capsys, "verify", "hit", "--max-n", "4", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["status"] == "pass" and blob["bounds"] == {"max_n": 4}


def test_verify_env_override(capsys, monkeypatch):
    monkeypatch.setenv("QYT_MAX_N", "3")
    code, out = run(capsys, "verify", "summation", "--format", "json")
    assert code == 0
    assert json.loads(out)["bounds"] == {"max_n": 3}


def test_verify_failure_exit_code(capsys, monkeypatch):
    def broken(max_n=2):
        return SuiteReport("broken", {"max_n": max_n}, "fail",
                           {"shape": "2,1", "lhs": 1, "rhs": 2}, 0)

    monkeypatch.setitem(verify.SUITES, "broken", broken)
    code, out = run(capsys, "verify", "broken")
    assert code == 1
    assert "broken: fail" in out
    assert '"shape": "2,1"' in out


def test_table_a_coeffs(capsys):
    code, out = run(capsys, "table", "a-coeffs", "--n", "6", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["n"] == 6
    assert [blob["a"][k][3] for k in range(6)] == [1, 1, -8, 8, -1, -1]
    code, csv_out = run(capsys, "table", "a-coeffs", "--n", "6", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(csv_out)))
    assert [int(r["m3"]) for r in rows[:6]] == [1, 1, -8, 8, -1, -1]


def test_rsk_example(capsys):
    code, out = run(capsys, "rsk", "45312", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["shape"] == "2,2,1"
    assert blob["des_Q"] == [2, 3]
    code, out = run(capsys, "rsk", "45312")
    assert "shape: 2,2,1" in out


def test_rsk_multiset_word(capsys):
    code, out = run(capsys, "rsk", "1,1,2", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["shape"] == "3"


def test_expand_schur(capsys):
    code, out = run(capsys, "expand", "schur", "--shape", "2,2", "--vars", "3",
                    "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert len(blob["terms"]) == 6
    assert all(entry["coeff"] == 1 for entry in blob["terms"])


def test_expand_genfun(capsys):
    code, out = run(capsys, "expand", "genfun", "--n", "3", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    entries = {e["partition"]: e["coeff"] for e in blob["schur"]}
    assert entries["1,1,1"] == [[3, 2, 1]]  # q^3 t^2


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--shape", "2,2", "--bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["count", "--shape", "2,2"])  # missing mode
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "no-such-suite"])
    assert exc.value.code == 2


def test_domain_errors_exit_2(capsys):
    code = main(["board", "--shape", "10", "--hits"])  # over the cap
    assert code == 2
    err = capsys.readouterr().err
    assert "error:" in err


def test_output_is_deterministic(capsys):
    first = run(capsys, "expand", "genfun", "--n", "4", "--format", "json")
    second = run(capsys, "expand", "genfun", "--n", "4", "--format", "json")
    assert first == second
