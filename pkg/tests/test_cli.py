import csv
import io
import json
import subprocess
import sys

import pytest

from quiverhh.cli import CHECKS, FIELDS, main, parse_int_set


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def hh_column(out):
    return [int(r["dim_hh"]) for r in csv.DictReader(io.StringIO(out))]


def test_dims_examples(capsys):
    code, out = run(capsys, "dims", "--T", "0", "--char", "0", "--max-n", "4")
    assert code == 0
    assert out.splitlines()[0] == ",".join(FIELDS) == "T,char,n,dim_hh,dim_ker,dim_im,formula_hh,divides,match"
    assert hh_column(out) == [1, 4, 3, 0, 5]
    _, out = run(capsys, "dims", "--T", "1", "--char", "3", "--max-n", "3")
    assert hh_column(out) == [3, 7, 6, 2]
    _, out = run(capsys, "dims", "--T", "1", "--char", "0", "--max-n", "3")
    assert hh_column(out) == [3, 6, 5, 2]


def test_csv_and_json_agree(capsys):
    _, c = run(capsys, "dims", "--T", "0..2", "--char", "0,3", "--max-n", "5")
    _, j = run(capsys, "dims", "--T", "0..2", "--char", "0,3", "--max-n", "5", "--emit", "json")
    rows = list(csv.DictReader(io.StringIO(c)))
    recs = json.loads(j)
    assert len(rows) == len(recs) == 3 * 2 * 6
    for r, d in zip(rows, recs):
        assert list(d) == list(FIELDS)
        assert {k: str(v).lower() for k, v in d.items()} == r


def test_output_is_deterministic(capsys):
    outs = {run(capsys, "dims", "--T", "2,0", "--char", "5", "--max-n", "6")[1] for _ in range(2)}
    assert len(outs) == 1


@pytest.mark.parametrize("argv", [
    ["dims", "--char", "4"],
    ["dims", "--max-n", "13"],
    ["dims", "--T", "3..1"],
    ["verify", "--only", "nonsense"],
    ["frobnicate"],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_hard_cap_can_be_raised(capsys):
    code, out = run(capsys, "dims", "--T", "0", "--max-n", "13", "--hard-cap", "16")
    assert code == 0 and len(out.splitlines()) == 15


def test_mismatch_gives_exit_1(capsys, monkeypatch):
    from quiverhh import hochschild
    from quiverhh.hochschild import Dims
    monkeypatch.setattr(hochschild, "formula_for_degree", lambda T, n, p: Dims(0, 0, -1))
    code, out = run(capsys, "dims", "--T", "0", "--max-n", "1")
    assert code == 1 and "false" in out


def test_verify_suite(capsys):
    code, out = run(capsys, "verify", "--T", "0..1", "--char", "0,3", "--max-n", "10")
    rep = json.loads(out)
    assert code == 0 and rep["passed"]
    names = {c["check"] for c in rep["checks"]}
    assert {"koszul_linearity", "bimodule_complex", "bar_oracle", "ring_presentation", "center"} <= names
    assert all(c["anchor"] for c in rep["checks"])


def test_verify_only(capsys):
    code, out = run(capsys, "verify", "--only", "ring", "--wmax", "4", "--T", "0", "--char", "0")
    rep = json.loads(out)
    assert code == 0 and [c["check"] for c in rep["checks"]] == ["ring_presentation"]
    assert rep["checks"][0]["data"]["hilbert"] == {"1": 5, "2": 9, "3": 13, "4": 17}
    code, out = run(capsys, "verify", "--only", "oracle")
    rep = json.loads(out)
    assert code == 0 and {c["check"] for c in rep["checks"]} == {"bar_oracle"}


def test_ring_command(capsys):
    code, out = run(capsys, "ring", "--emit", "json")
    d = json.loads(out)
    assert code == 0 and d["passed"]
    assert len(d["relations"]) == 6
    assert d["hilbert"]["1"] == 5 == d["dim_HH4w"]["1"]
    assert d["hilbert"]["2"] == 9 == d["dim_HH4w"]["2"]
    code, out = run(capsys, "ring")
    assert "z0z2 - z1^2" in out and out.rstrip().endswith("verified")


def test_parse_int_set():
    assert parse_int_set("0..3") == (0, 1, 2, 3)
    assert parse_int_set("5,0,2..3") == (0, 2, 3, 5)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "quiverhh", "dims", "--T", "0", "--max-n", "2"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert hh_column(res.stdout) == [1, 4, 3]


def test_check_names_are_stable():
    assert "oracle" in CHECKS and "ring" in CHECKS and len(CHECKS) == len(set(CHECKS))
