"""CLI behavior: outputs, exit codes, and deterministic JSON."""

import json

import pytest

from foxabf import cli
from foxabf.coloring import ENUMERATION_CAP_ENV
from foxabf.sequences import IdentityCheck


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(argv, capsys):
    code, out = run(argv, capsys)
    return code, out, json.loads(out)


# -- colorgroup -----------------------------------------------------------------


def test_colorgroup_wheel_three(capsys):
    code, out = run(["colorgroup", "1 -2 1 -2 1 -2"], capsys)
    assert code == 0
    assert "Z_4 + Z_4" in out
    assert "determinant: 16" in out


def test_colorgroup_unknot_one_strand(capsys):
    code, out, doc = run_json(["colorgroup", "", "--strands", "1", "--format", "json"], capsys)
    assert code == 0
    assert doc["results"]["group"]["display"] == "0"
    assert doc["results"]["determinant"] == "1"


def test_colorgroup_bad_token_exits_2(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["colorgroup", "1 0"])
    assert info.value.code == 2


def test_colorgroup_json_braid_input(capsys):
    code, out = run(["colorgroup", '{"strands": 3, "letters": [1, -2, 1, -2, 1, -2]}'], capsys)
    assert code == 0
    assert "Z_4 + Z_4" in out


# -- abf ---------------------------------------------------------------------------


def test_abf_figure_eight(capsys):
    code, out, doc = run_json(["abf", "1 -2 1 -2", "--format", "json"], capsys)
    assert code == 0
    assert doc["results"]["alexander"] == "1-3*t+t^2"


def test_abf_split_unlink(capsys):
    code, out, doc = run_json(["abf", "1 -1", "--format", "json"], capsys)
    assert code == 0
    assert doc["results"]["alexander"] == "0"


def test_abf_unknot_two_strands(capsys):
    code, out, doc = run_json(["abf", "1", "--strands", "2", "--format", "json"], capsys)
    assert code == 0
    assert doc["results"]["alexander"] == "1"


# -- wheel --------------------------------------------------------------------------


def test_wheel_five(capsys):
    code, out, doc = run_json(["wheel", "5", "--format", "json"], capsys)
    assert code == 0
    assert doc["consistency"] is True
    assert doc["results"]["closed_form_group"]["torsion"] == ["11", "11"]
    assert doc["results"]["ideal_gens"][0] == doc["results"]["ideal_gens"][1]
    assert doc["results"]["det_a_prime"] == "1"


def test_wheel_two_brute_force(capsys):
    code, out, doc = run_json(["wheel", "2", "--moduli", "5", "--format", "json"], capsys)
    assert code == 0
    checks = doc["results"]["brute_force"]
    assert checks == [{"modulus": 5, "count": "25", "predicted": "25", "ok": True}]


def test_wheel_zero_exits_2(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["wheel", "0"])
    assert info.value.code == 2


def test_wheel_enumeration_cap_exits_2(capsys, monkeypatch):
    monkeypatch.setenv(ENUMERATION_CAP_ENV, "10")
    with pytest.raises(SystemExit) as info:
        cli.main(["wheel", "2", "--moduli", "5"])
    assert info.value.code == 2


# -- verify ---------------------------------------------------------------------------


def test_verify_small(capsys):
    code, out = run(["verify", "--max-n", "3", "--max-index", "4"], capsys)
    assert code == 0
    assert "all suites passed" in out


def test_verify_degenerate(capsys):
    code, out = run(["verify", "--max-n", "1", "--max-index", "1"], capsys)
    assert code == 0


def test_verify_reports_failure(capsys, monkeypatch):
    # simulate a corrupted build: one suite yields a counterexample
    class FakeReport:
        checks = (IdentityCheck("broken_suite", 3, "m=1, n=2"),)

    monkeypatch.setattr(cli, "identity_suite", lambda max_index: FakeReport())
    code, out = run(["verify", "--max-n", "1", "--max-index", "2"], capsys)
    assert code == 1
    assert "FAIL broken_suite" in out
    assert "m=1, n=2" in out


# -- table ----------------------------------------------------------------------------


def test_table_lists_known_groups(capsys):
    code, out = run(["table", "--from", "2", "--to", "7"], capsys)
    assert code == 0
    for display in ("Z_5", "Z_4 + Z_4", "Z_15 + Z_3", "Z_11 + Z_11", "Z_40 + Z_8", "Z_29 + Z_29"):
        assert display in out


def test_table_single_row(capsys):
    code, out = run(["table", "--from", "1", "--to", "1"], capsys)
    assert code == 0
    assert "n=1: 0" in out


def test_table_csv(capsys):
    code, out = run(["table", "--from", "2", "--to", "3", "--format", "csv"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,group,ideal_gen_1,ideal_gen_2,alexander"
    assert lines[1].startswith("2,Z_5,1,1-3*t+t^2,")


def test_table_markdown(capsys):
    code, out = run(["table", "--from", "2", "--to", "2", "--format", "markdown"], capsys)
    assert code == 0
    assert out.splitlines()[0] == "| n | group | ideal generators | alexander |"


def test_table_bad_range_exits_2(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["table", "--from", "3", "--to", "2"])
    assert info.value.code == 2


def test_table_large_range_csv(capsys):
    # performance check: full-precision big integers all the way to n = 200
    code, out = run(["table", "--from", "2", "--to", "200", "--format", "csv"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 200
    assert lines[-1].startswith("200,")


# -- JSON round trip -------------------------------------------------------------------


@pytest.mark.parametrize(
    "argv",
    [
        ["colorgroup", "1 -2 1 -2", "--format", "json"],
        ["abf", "1 -2", "--format", "json"],
        ["wheel", "4", "--moduli", "3", "5", "--format", "json"],
        ["verify", "--max-n", "2", "--max-index", "3", "--format", "json"],
        ["table", "--from", "1", "--to", "4", "--format", "json"],
    ],
)
def test_json_round_trip(argv, capsys):
    code, out = run(argv, capsys)
    assert code == 0
    reparsed = json.loads(out)
    assert cli.render_json(reparsed) + "\n" == out
