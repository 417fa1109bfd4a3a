from __future__ import annotations

import json

import pytest

from c6cover import __version__
from c6cover.cli import main, parse_range
from c6cover.core import complete_three_graph
from c6cover.fileio import parse_graph, serialize


def run(capsys, *argv: str) -> tuple[int, dict | None, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def deterministic(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != "timing"}


def test_parse_range():
    assert parse_range("3..8") == range(3, 9)
    assert parse_range("9") == range(9, 10)


def test_gen_c2_reports_parameters(capsys):
    code, rep, _ = run(capsys, "gen", "c2", "--n", "24")
    assert code == 0
    assert (rep["b"], rep["a_floor"], rep["a_ceil"], rep["edges"]) == (7, 4, 5, 573)
    assert parse_graph(rep["graph"]).n == 24


def test_gen_c1_to_file(capsys, tmp_path):
    out = tmp_path / "c1.txt"
    code, rep, _ = run(capsys, "gen", "c1", "--n", "6", "--out", str(out))
    assert code == 0 and rep["edges"] == 10
    assert out.read_text().startswith("6 10\n")


def test_gen_turan_two_graph(capsys):
    code, rep, _ = run(capsys, "gen", "turan", "--n", "7", "--r", "3")
    assert code == 0 and rep["parts"] == [3, 2, 2]
    assert rep["graph"].splitlines()[0] == "7 16"


@pytest.mark.parametrize("argv", [["gen", "c2", "--n", "5"], ["gen", "turan", "--n", "5"], ["gen", "c1", "--n", "2"]])
def test_gen_errors(capsys, argv):
    code, rep, err = run(capsys, *argv)
    assert code == 2 and rep is None and err.startswith("error:")


def test_gen_unwritable(capsys, tmp_path):
    code, _, err = run(capsys, "gen", "c1", "--n", "6", "--out", str(tmp_path / "missing" / "x.txt"))
    assert code == 2 and "cannot write" in err


def test_check_cover_complete(capsys, tmp_path):
    path = tmp_path / "k6.txt"
    path.write_text(serialize(complete_three_graph(6)))
    code, rep, _ = run(capsys, "check-cover", str(path))
    assert code == 0
    assert rep["result"]["fully_covered"] and rep["result"]["uncovered"] == []
    assert rep["toolkit_version"] == __version__
    assert rep["command"] == ["check-cover", str(path)]
    assert sorted(rep) == ["command", "input_digest", "result", "seed", "timing", "toolkit_version"]


def test_check_cover_fast_flag(capsys, tmp_path):
    path = tmp_path / "k7.txt"
    path.write_text(serialize(complete_three_graph(7)))
    code, rep, _ = run(capsys, "check-cover", str(path), "--fast", "--vertex", "3")
    assert code == 0
    entry = rep["result"]["vertices"]["3"]
    assert entry["method"] == "fast" and 3 in entry["witness"]


def test_check_cover_construction1(capsys, tmp_path):
    path = tmp_path / "c1.txt"
    run(capsys, "gen", "c1", "--n", "6", "--out", str(path))
    code, rep, _ = run(capsys, "check-cover", str(path))
    assert code == 1
    assert rep["result"]["uncovered"] == [0, 1, 2, 3, 4, 5]


def test_check_cover_bad_input(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3 1\n1 1 2\n")
    code, rep, err = run(capsys, "check-cover", str(path))
    assert code == 2 and rep is None
    assert "line 2, column 3: E_ORDER" in err
    code, _, _ = run(capsys, "check-cover", str(tmp_path / "absent.txt"))
    assert code == 2


def test_check_cover_bad_vertex(capsys, tmp_path):
    path = tmp_path / "k6.txt"
    path.write_text(serialize(complete_three_graph(6)))
    code, _, _ = run(capsys, "check-cover", str(path), "--vertex", "6")
    assert code == 2


def test_thresholds_shards_identical(capsys):
    code1, one, _ = run(capsys, "thresholds", "codegree", "--n", "6", "--shards", "1")
    code8, eight, _ = run(capsys, "thresholds", "codegree", "--n", "6", "--shards", "8")
    assert code1 == code8 == 0
    assert one["result"] == eight["result"]
    assert one["result"]["value"] == 1 and one["result"]["graphs_scanned"] == 1 << 20
    assert one["result"]["display"] == "= 1"
    assert one["input_digest"] == eight["input_digest"]


def test_thresholds_rerun_byte_identical(capsys):
    _, a, _ = run(capsys, "thresholds", "degree", "--n", "5", "--shards", "2")
    _, b, _ = run(capsys, "thresholds", "degree", "--n", "5", "--shards", "2")
    assert json.dumps(deterministic(a), sort_keys=True) == json.dumps(deterministic(b), sort_keys=True)


def test_thresholds_guard(capsys):
    code, _, err = run(capsys, "thresholds", "degree", "--n", "12")
    assert code == 2 and "--randomized" in err


def test_thresholds_randomized(capsys):
    code, rep, _ = run(capsys, "thresholds", "codegree", "--n", "8", "--randomized", "--trials", "3", "--seed", "4")
    assert code == 0
    assert rep["seed"] == 4 and rep["result"]["exact"] is False
    assert rep["result"]["display"] == f">= {rep['result']['value']}"


def test_verify_structure_and_turan(capsys):
    code, rep, _ = run(capsys, "verify", "structure", "--m", "5..6")
    assert code == 0 and rep["result"]["violations"] == 0
    code, rep, _ = run(capsys, "verify", "turan", "--n", "3..6")
    assert code == 0 and rep["result"]["reports"][0]["checks"] == sum(n - 2 for n in range(3, 7))


def test_verify_structure_m4_negative(capsys):
    code, rep, _ = run(capsys, "verify", "structure", "--m", "4")
    assert code == 1
    cex = rep["result"]["reports"][0]["counterexamples"][0]
    assert cex.splitlines()[1:] == ["4 4", "0 2", "0 3", "1 2", "1 3"]


def test_verify_claims_small(capsys):
    code, rep, _ = run(capsys, "verify", "claim41", "--trials", "20", "--seed", "7", "--n", "9")
    assert code == 0
    assert [r["suite"] for r in rep["result"]["reports"]] == ["claim41-construction2", "claim41-random"]
    code, rep, _ = run(capsys, "verify", "claim42", "--trials", "20", "--seed", "7", "--n", "9")
    assert code == 0 and rep["seed"] == 7


def test_verify_constructions_range(capsys):
    code, rep, _ = run(capsys, "verify", "constructions", "--n", "6..12")
    assert code == 0 and rep["result"]["reports"][0]["instances"] == 7 + 6


def test_bad_arguments_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "structure", "--m", "x..y"])
    assert info.value.code == 2
    capsys.readouterr()
