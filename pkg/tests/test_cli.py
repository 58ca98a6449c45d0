"""CLI behavior: JSON reports on stdout, summaries on stderr, exit codes."""

import json

import pytest

from cyclecount import cli
from cyclecount.constructions import petersen, random_graph
from cyclecount.io import dump_path, to_graph6


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    payload = json.loads(captured.out) if captured.out.strip() else None
    return code, payload, captured.err


def test_count_cycle7(capsys):
    code, payload, err = run_cli(capsys, "count", "--construct", "cycle:7", "--k", "7")
    assert code == 0
    assert payload["report"]["total"] == 1
    assert payload["manifest"]["command"] == "count"
    assert "induced 7-cycles: 1" in err


def test_count_iterated_blowup(capsys):
    code, payload, _ = run_cli(
        capsys, "count", "--construct", "iterated-blowup:C5:depth=2", "--k", "5"
    )
    assert code == 0
    assert payload["report"]["total"] == 3130
    assert payload["report"]["n"] == 25


def test_count_check_mode_agrees(capsys):
    code, payload, _ = run_cli(
        capsys, "count", "--construct", "random:11,0.4", "--k", "5",
        "--seed", "3", "--check",
    )
    assert code == 0
    assert payload["report"]["check_agrees"] is True


def test_count_from_file_records_digest(capsys, tmp_path):
    path = tmp_path / "pet.g6"
    dump_path(petersen(), str(path))
    code, payload, _ = run_cli(capsys, "count", "--input", str(path), "--k", "5")
    assert code == 0
    assert payload["report"]["total"] == 12
    digest = payload["manifest"]["input_digest"]
    assert list(digest.values())[0].isalnum()


def test_count_rooted_output(capsys):
    code, payload, _ = run_cli(
        capsys, "count", "--construct", "petersen", "--k", "5", "--roots", "all"
    )
    assert code == 0
    assert payload["report"]["rooted"] == {str(v): 6 for v in range(10)}


def test_count_rejects_bad_k(capsys):
    code, _, err = run_cli(capsys, "count", "--construct", "cycle:3", "--k", "9")
    assert code == 1
    assert "error:" in err


def test_count_needs_exactly_one_source(capsys):
    with pytest.raises(SystemExit):
        cli.main(["count", "--k", "5"])


def test_search_exhaustive(capsys):
    code, payload, _ = run_cli(capsys, "search", "--n", "6", "--k", "4")
    assert code == 0
    assert payload["report"]["best_count"] == 9
    assert payload["report"]["exhaustive"] is True


def test_search_local(capsys):
    code, payload, _ = run_cli(
        capsys, "search", "--n", "8", "--k", "5", "--mode", "local",
        "--budget", "100", "--seed", "1",
    )
    assert code == 0
    assert payload["report"]["exhaustive"] is False
    assert payload["report"]["best_count"] >= 1


def test_verify_analytic_exit_zero(capsys):
    code, payload, err = run_cli(capsys, "verify", "--suite", "analytic")
    assert code == 0
    assert payload["report"]["passed"] is True
    assert "suite analytic: ok" in err


def test_construct_round_trip(capsys):
    code, payload, _ = run_cli(capsys, "construct", "--construct", "petersen")
    assert code == 0
    assert payload["report"]["graph"] == to_graph6(petersen())
    code, payload, _ = run_cli(
        capsys, "construct", "--construct", "kbipartite:3,4",
        "--format", "edgelist",
    )
    assert code == 0
    assert payload["report"]["m"] == 12


def test_construct_random_needs_seed(capsys):
    code, _, err = run_cli(capsys, "construct", "--construct", "random:10,0.5")
    assert code == 1 and "seed" in err


def test_construct_rejects_unknown_spec(capsys):
    code, _, err = run_cli(capsys, "construct", "--construct", "moebius:5")
    assert code == 1 and "cannot parse" in err


def test_parse_construct_specs():
    assert cli.parse_construct("cycle:6").n == 6
    assert cli.parse_construct("blowup:C5:2").n == 10
    assert cli.parse_construct("iterated-blowup:C5:depth=2").n == 25
    assert cli.parse_construct("random:9,1/4", seed=5) == random_graph(9, 0.25, 5)
    with pytest.raises(ValueError):
        cli.parse_construct("blowup:C5")
    with pytest.raises(ValueError):
        cli.parse_construct("iterated-blowup:C5:m=2")


def test_reports_are_deterministic(capsys):
    def strip(payload):
        payload["manifest"].pop("started_at")
        payload["manifest"].pop("finished_at")
        payload["report"].pop("runtime_ms", None)
        return payload

    a = strip(run_cli(capsys, "count", "--construct", "random:12,0.4",
                      "--k", "5", "--seed", "7")[1])
    b = strip(run_cli(capsys, "count", "--construct", "random:12,0.4",
                      "--k", "5", "--seed", "7")[1])
    assert a == b


def test_out_flag_writes_identical_payload(capsys, tmp_path):
    out = tmp_path / "report.json"
    code, payload, _ = run_cli(
        capsys, "count", "--construct", "cycle:6", "--k", "6", "--out", str(out)
    )
    assert code == 0
    assert json.loads(out.read_text()) == payload
