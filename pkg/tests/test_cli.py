import csv
import io
import json

import pytest

from stirnum.cli import main
from stirnum.exactnum import format_rational, parse_rational


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def values(out):
    return [json.loads(line)["value"] for line in out.splitlines()]


def test_table_bernoulli_csv(capsys):
    code, out, _ = run(capsys, "table", "bernoulli", "--max-n", "4", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["sequence", "n", "value"]
    assert [r[2] for r in rows[1:]] == ["1", "-1/2", "1/6", "0", "-1/30"]


def test_table_stirling2_row(capsys):
    code, out, _ = run(capsys, "table", "stirling2", "--max-n", "4")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    row4 = [r["value"] for r in recs if r["params"]["n"] == 4]
    assert row4 == ["0", "1", "7", "6", "1"]


def test_table_bfile_flattens_row_major(capsys):
    code, out, _ = run(capsys, "table", "stirling2", "--max-n", "3", "--format", "bfile")
    assert code == 0
    assert out.splitlines() == [
        "0 1", "1 0", "2 1", "3 0", "4 1", "5 1", "6 0", "7 1", "8 3", "9 1",
    ]


def test_table_cauchy(capsys):
    code, out, _ = run(capsys, "table", "cauchy", "--max-n", "3")
    assert code == 0
    assert values(out) == ["1", "1/2", "-1/6", "1/4"]


def test_table_pretty_is_array(capsys):
    code, out, _ = run(capsys, "table", "cauchy", "--max-n", "2", "--pretty")
    assert code == 0
    assert [r["value"] for r in json.loads(out)] == ["1", "1/2", "-1/6"]


def test_table_fixed_r_and_q(capsys):
    code, out, _ = run(capsys, "table", "rstirling2", "--r", "2", "--max-n", "3")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert {r["params"]["r"] for r in recs} == {2}
    assert [r["value"] for r in recs if r["params"]["n"] == 3] == ["0", "0", "2", "1"]
    code, out, _ = run(capsys, "table", "polybernoulli", "--q", "2", "--max-n", "2")
    assert values(out) == ["1", "1/4", "-1/36"]


def test_table_errors(capsys):
    assert run(capsys, "table", "nope")[0] == 2
    code, out, err = run(capsys, "table", "bernoulli", "--format", "bfile")
    assert code == 2 and out == "" and "integer" in err
    assert run(capsys, "table", "stirling2", "--max-n", "101")[0] == 2
    assert run(capsys, "table", "bernoulli", "--max-n", "201")[0] == 2


def test_bfile_accepts_integer_linear_sequence(capsys):
    code, out, _ = run(capsys, "table", "polybernoulli", "--q", "1", "--max-n", "0", "--format", "bfile")
    assert code == 0 and out == "0 1\n"


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["polybernoulli", "n=1", "q=2"], "1/4"),
        (["rstirling2", "r=2", "n=3", "k=2"], "2"),
        (["cauchypoly", "n=1", "r=1"], "-1/2"),
        (["bernoulli", "n=2", "x=1/2"], "-1/12"),
        (["polycauchy", "n=2", "q=2"], "-5/36"),
        (["stirling1", "n=3", "k=2"], "-3"),
    ],
)
def test_eval(capsys, argv, expected):
    code, out, _ = run(capsys, "eval", *argv)
    assert code == 0
    rec = json.loads(out)
    assert rec["sequence"] == argv[0]
    assert rec["value"] == expected


@pytest.mark.parametrize(
    "argv",
    [
        ["bernoulli"],
        ["bernoulli", "n=x"],
        ["bernoulli", "n=1/2"],
        ["polybernoulli", "n=1", "q=0"],
        ["cauchy", "n=1", "z=3"],
        ["cauchy", "n"],
        ["nope", "n=1"],
    ],
)
def test_eval_usage_errors(capsys, argv):
    code, out, err = run(capsys, "eval", *argv)
    assert code == 2
    assert out == ""
    assert "usage" in err


def test_verify_single_identity(capsys):
    code, out, _ = run(capsys, "verify", "eq5-broder", "--max-n", "10", "--max-r", "3")
    assert code == 0
    rep = json.loads(out)
    assert rep["identity"] == "eq5-broder" and rep["status"] == "pass"
    assert rep["counterexample"] is None


def test_verify_unknown_and_bad_order(capsys):
    assert run(capsys, "verify", "nope")[0] == 2
    assert run(capsys, "verify", "cauchy-egf", "--max-n", "10", "--order", "11")[0] == 2


def test_output_is_deterministic(capsys):
    first = run(capsys, "table", "rstirling1", "--max-n", "8", "--max-r", "2")[1]
    second = run(capsys, "table", "rstirling1", "--max-n", "8", "--max-r", "2")[1]
    assert first == second


def test_emitted_values_round_trip(capsys):
    for seq in ("bernoulli", "polybernoulli", "cauchy", "polycauchy", "cauchypoly"):
        _, out, _ = run(capsys, "table", seq, "--max-n", "12", "--max-q", "3", "--max-r", "2")
        for v in values(out):
            assert format_rational(parse_rational(v)) == v


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "stirnum", "eval", "cauchy", "n=3"],
                         capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["value"] == "1/4"
