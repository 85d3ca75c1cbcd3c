"""CLI: goldens never regenerated silently, exit codes, JSON shape."""

import json
import os

import pytest

from qwhit.cli import main

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.mark.parametrize("name", [
    "qt-kostka-4", "kostka-4", "W-values-5", "Htilde-4",
    "qmn-3", "qmn-4", "qmn-5", "qmn-6", "C6",
])
def test_tables_match_goldens(capsys, name):
    code, out = run(capsys, "table", name)
    assert code == 0
    with open(os.path.join(GOLDEN, name + ".txt")) as fh:
        assert out == fh.read()


def test_expand_w31(capsys):
    code, out = run(capsys, "expand", "W", "--mu", "3,1")
    assert code == 0
    assert out.strip() == \
        "s[3,1] + q*s[2,2] + (q^2+q)*s[2,1,1] + q^3*s[1,1,1,1]"


def test_expand_trivial_column(capsys):
    code, out = run(capsys, "expand", "W", "--mu", "1,1,1")
    assert (code, out.strip()) == (0, "s[1,1,1]")


def test_expand_qmn_table_line(capsys):
    code, out = run(capsys, "expand", "Qmn", "--m", "2", "--n", "3")
    assert (code, out.strip()) == (0, "q*W[2,1] + W[1,1,1]")


def test_expand_json_schema(capsys):
    code, out = run(capsys, "expand", "Htilde", "--mu", "2,1", "--json")
    assert code == 0
    blob = json.loads(out)
    assert blob == {"basis": "s", "n": 3, "terms": [
        {"mu": [3], "c": "1"},
        {"mu": [2, 1], "c": "q+t"},
        {"mu": [1, 1, 1], "c": "q*t"},
    ]}


def test_expand_missing_flag_usage_error(capsys):
    code = main(["expand", "W"])
    assert code == 2


def test_verify_pass_and_json(capsys):
    code, out = run(capsys, "verify", "duality", "--n", "3")
    assert code == 0
    assert "0 failures" in out
    code, out = run(capsys, "verify", "cauchy", "--n", "1", "--json")
    assert code == 0
    blob = json.loads(out)
    assert blob["suite"] == "cauchy"
    assert all(c["status"] == "pass" for c in blob["checks"])


def test_verify_beyond_cap_skips(capsys):
    code, out = run(capsys, "verify", "duality", "--n", "9")
    assert code == 0
    assert "skipped-slow" in out


def test_gh_hilbert(capsys):
    code, out = run(capsys, "gh", "--diagram", "[[0,0],[1,0],[0,1]]",
                    "--report", "hilbert")
    assert code == 0
    assert "total: 6" in out


def test_gh_frobenius(capsys):
    code, out = run(capsys, "gh", "--diagram", "[[0,0],[2,0]]",
                    "--report", "frobenius")
    assert (code, out.strip()) == (0, "(q+1)*s[2] + (q^2+q)*s[1,1]")


def test_gh_bad_diagram(capsys):
    assert main(["gh", "--diagram", "not json"]) == 2
    assert main(["gh", "--diagram",
                 "[[0,0],[1,0],[2,0],[3,0],[4,0],[5,0],[6,0]]"]) == 2


def test_gh_nfact_example(capsys):
    # dim 6 at n=3
    code, out = run(capsys, "verify", "gh-nfact", "--n", "3")
    assert code == 0
    assert "dim-(3,)" in out and "0 failures" in out
