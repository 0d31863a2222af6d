"""End-to-end exercises of the command-line front end."""

import json

import pytest

from colorlattice import QPolynomial
from colorlattice.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# ----------------------------------------------------------------- solve

def test_solve_switch_flagship(capsys):
    code, out, _ = run(capsys, "solve", "mixedmiddleswitch", "--n", "5",
                       "--from", "00000", "--to", "01010")
    assert code == 0
    lines = out.splitlines()
    assert "distance=10" in lines
    assert "geodesic shape: mountain" in lines
    assert "00000 --5--> 00001" in lines          # moves in native bit strings
    assert sum(1 for l in lines if "-->" in l) == 10


def test_solve_json_payload_is_complete(capsys):
    code, out, _ = run(capsys, "solve", "snakes", "--n", "4",
                       "--from", "4,4,1,0", "--to", "1,0,0,0", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["family"] == "snakes"
    assert doc["params"] == {"n": 4}
    assert doc["distance"] == 7
    assert doc["path"][0] == "4,4,1,0" and doc["path"][-1] == "1,0,0,0"
    assert len(doc["path"]) == 8
    assert sum(doc["color_counts"].values()) == 7
    assert len(doc["moves"]) == 7
    assert doc["moves"][0]["verb"] in ("add", "remove")


def test_solve_domino_distances_respect_the_board(capsys):
    code, out, _ = run(capsys, "solve", "domino-ballot", "--k", "3", "--n", "3",
                       "--from", "3,2,1", "--to", "0,0,0")
    assert code == 0 and "distance=6" in out
    code, out, _ = run(capsys, "solve", "domino-ballot", "--k", "3", "--n", "3",
                       "--from", "3,2,1", "--to", "2,1,0")
    assert code == 0 and "distance=9" in out


def test_solve_via_meet_reports_a_valley(capsys):
    code, out, _ = run(capsys, "solve", "mixedmiddleswitch", "--n", "4",
                       "--from", "0000", "--to", "1111", "--via", "meet")
    assert code == 0
    assert "geodesic shape: valley" in out


# ------------------------------------------------------- error channels

def test_unparsable_position_exits_two(capsys):
    code, _, err = run(capsys, "solve", "mixedmiddleswitch", "--n", "5",
                       "--from", "0a0b0", "--to", "01010")
    assert code == 2
    assert "error:" in err


def test_wrong_length_position_is_a_non_member(capsys):
    # parses fine as bits, but is no position of the five-switch game
    code, _, err = run(capsys, "solve", "mixedmiddleswitch", "--n", "5",
                       "--from", "000", "--to", "01010")
    assert code == 3


def test_well_formed_non_member_exits_three(capsys):
    # parses as a partition but breaks the ballot row bounds
    code, _, err = run(capsys, "solve", "domino-ballot", "--k", "3", "--n", "3",
                       "--from", "3,3,0", "--to", "0,0,0")
    assert code == 3
    assert "error:" in err


def test_non_tiling_exits_three(capsys):
    code, _, _ = run(capsys, "solve", "snakes", "--n", "4",
                     "--from", "1,1,0,0", "--to", "0,0,0,0")
    assert code == 3


def test_bad_flag_values_exit_two_via_argparse(capsys):
    with pytest.raises(SystemExit) as info:
        main(["export", "--family", "mixedmiddleswitch", "--n", "3",
              "--format", "svg"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["solve", "tangram", "--n", "3", "--from", "0", "--to", "1"])
    assert info.value.code == 2


def test_oversize_instances_are_refused(capsys):
    code, _, err = run(capsys, "solve", "mixedmiddleswitch", "--n", "13",
                       "--from", "0" * 13, "--to", "1" * 13)
    assert code == 2


# ------------------------------------------------------------- export

def test_dot_export_is_deterministic_and_complete(capsys):
    args = ("export", "--family", "mixedmiddleswitch", "--n", "5",
            "--format", "dot")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    assert first.count("label=") >= 32 + 48       # every vertex and edge labeled
    assert 'label="01010"' in first               # native bit-string vertex names


def test_snakes_dot_uses_tuple_vertices(capsys):
    code, out, _ = run(capsys, "export", "--family", "snakes", "--n", "3",
                       "--format", "dot")
    assert code == 0
    assert out.startswith("digraph snakes {")
    assert 'label="3,2,1"' in out


def test_board_rendering_shows_checkered_diagonals(capsys):
    code, out, _ = run(capsys, "export", "--family", "domino-ballot",
                       "--k", "5", "--n", "6", "--format", "text-board")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5
    assert lines[0].startswith("R3   W3   R4")


def test_snakes_board_needs_a_tiling(capsys):
    code, _, err = run(capsys, "export", "--family", "snakes", "--n", "4",
                       "--format", "text-board")
    assert code == 2 and "--from" in err
    code, out, _ = run(capsys, "export", "--family", "snakes", "--n", "4",
                       "--format", "text-board", "--from", "4,4,1,0")
    assert code == 0
    assert out == "####\n####\n#...\n....\n"


def test_switch_text_board_is_not_a_thing(capsys):
    code, _, _ = run(capsys, "export", "--family", "mixedmiddleswitch",
                     "--n", "4", "--format", "text-board")
    assert code == 2


# ---------------------------------------------------------- enumerate

def test_enumerate_switch_positions(capsys):
    code, out, _ = run(capsys, "enumerate", "mixedmiddleswitch", "--n", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "family=mixedmiddleswitch n=3 count=8"
    assert set(lines[1:]) == {format(i, "03b") for i in range(8)}


def test_enumerate_tilings_as_json(capsys):
    code, out, _ = run(capsys, "enumerate", "snakes", "--n", "3", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 14 == len(doc["objects"])
    assert "0,0,0" in doc["objects"]


def test_enumerate_ballot_partitions(capsys):
    code, out, _ = run(capsys, "enumerate", "domino-ballot", "--k", "3",
                       "--n", "3")
    assert code == 0
    assert out.splitlines()[0].endswith("count=14")


# ------------------------------------------------------------- verify

def test_verify_birkhoff_small_sweep_passes(capsys):
    code, out, _ = run(capsys, "verify", "birkhoff", "--max-n", "3", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["failures"] == 0
    assert all(row["ok"] for row in doc["checks"])


def test_verify_text_mode_prints_one_line_per_check(capsys):
    code, out, _ = run(capsys, "verify", "minuscule", "--max-n", "4")
    assert code == 0
    lines = out.splitlines()
    assert all(l.startswith("[ok]") for l in lines[:-1])
    assert lines[-1].startswith("checks=") and lines[-1].endswith("failures=0")


def test_verify_catches_an_injected_regression(capsys, monkeypatch):
    # a corrupted closed form must flip the sweep to failure, with evidence
    monkeypatch.setattr("colorlattice.cli.closed_rgf_b",
                        lambda n: QPolynomial([1]))
    code, out, _ = run(capsys, "verify", "weyl", "--max-n", "2")
    assert code == 1
    assert "[FAIL]" in out
    assert "counterexample:" in out


def test_verify_rejects_unknown_suites(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "everything"])
    assert info.value.code == 2
