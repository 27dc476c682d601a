import json

import pytest

from stirnum import stirling
from stirnum.cli import main
from stirnum.verify import IDENTITIES, Bounds, run_all, run_identity


def corrupt(kind, r, n, k, delta=1):
    table = stirling.get_table(kind, r)
    table.ensure(n + 30)
    table.rows[n][k] += delta


def test_every_identity_passes_small_bounds(fresh_tables):
    reports = run_all(bounds=Bounds(max_n=8, max_q=2, max_r=2))
    assert [r.identity for r in reports] == list(IDENTITIES)
    assert all(r.status == "pass" and r.checked > 0 for r in reports)


@pytest.mark.parametrize(
    "kind, r, n, k, identity",
    [
        (stirling.SECOND, 0, 7, 3, "stirling2-explicit"),
        (stirling.SECOND, 2, 9, 4, "eq5-broder"),
        (stirling.FIRST, 0, 6, 2, "stirling1-falling"),
        (stirling.FIRST, 3, 7, 5, "rstirling1-brute"),
        (stirling.FIRST, 2, 16, 5, "komatsu-mezo"),
    ],
)
def test_corruption_is_caught(fresh_tables, kind, r, n, k, identity):
    corrupt(kind, r, n, k)
    rep = run_identity(identity)
    assert rep.status == "fail"
    a, b = rep.counterexample
    assert a["sequence"] != b["sequence"]
    assert a["value"] != b["value"]
    assert a["params"] == b["params"]


def test_polynomial_counterexample_names_coefficient(fresh_tables):
    corrupt(stirling.SECOND, 0, 5, 2)
    rep = run_identity("lemma2-first", Bounds(max_n=8))
    assert rep.status == "fail"
    assert "coeff" in rep.counterexample[0]["params"]


def test_cli_verify_exit_code_flips(fresh_tables, capsys):
    assert main(["verify", "stirling2-explicit", "cor5", "--max-n", "10"]) == 0
    capsys.readouterr()
    corrupt(stirling.SECOND, 0, 8, 5, delta=-3)
    assert main(["verify", "stirling2-explicit", "cor5", "--max-n", "10"]) == 1
    out, err = capsys.readouterr()
    reps = [json.loads(line) for line in out.splitlines()]
    assert all(r["status"] == "fail" for r in reps)
    assert "verification failed" in err
