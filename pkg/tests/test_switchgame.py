"""The row-of-switches puzzle and its cushioned-tuple lattice."""

import json
import pathlib

import pytest
from hypothesis import given
from hypothesis import strategies as st

from colorlattice import (
    SwitchSolution,
    b_inv,
    b_map,
    gods_number,
    lattice_distance,
    mixedmiddleswitch_digraph,
    replay_switches,
    solve_mixedmiddleswitch,
    switch_moves,
    z_lattice,
)
from colorlattice.switchgame import (
    all_cushioned,
    format_bits,
    format_tuple,
    is_cushioned,
    parse_bits,
    parse_tuple,
)

DATA = pathlib.Path(__file__).parent / "data"


def test_bit_string_parsing_round_trips_and_rejects_junk():
    assert parse_bits("01010") == (0, 1, 0, 1, 0)
    assert format_bits((0, 1, 0, 1, 0)) == "01010"
    for bad in ("", "012", "1 0", "abc"):
        with pytest.raises(ValueError):
            parse_bits(bad)


def test_tuple_parsing_round_trips_and_rejects_junk():
    assert parse_tuple("4,3,2,1,0") == (4, 3, 2, 1, 0)
    assert format_tuple((4, 3, 2, 1, 0)) == "4,3,2,1,0"
    with pytest.raises(ValueError):
        parse_tuple("4,,1")


@pytest.mark.parametrize("x, ok", [
    ((2, 1), True),
    ((0, 0, 0), True),
    ((3, 1, 0), True),
    ((3, 3, 0), False),      # repeated nonzero entry
    ((0, 1), False),         # zero before a nonzero
    ((4, 1, 0), False),      # entry exceeds the length
    ((1,), False),           # too short
])
def test_cushioned_tuple_predicate(x, ok):
    assert is_cushioned(x) is ok


@pytest.mark.parametrize("n", range(2, 7))
def test_lattice_and_game_graph_both_have_two_to_the_n_positions(n):
    tuples = all_cushioned(n)
    assert len(tuples) == 2 ** n
    assert len(z_lattice(n)) == 2 ** n
    assert len(mixedmiddleswitch_digraph(n)) == 2 ** n
    assert all(is_cushioned(x, n) for x in tuples)


def test_switch_moves_follow_the_five_clauses():
    # only switch 1 fires when its right neighbour is on
    assert switch_moves((0, 1, 0, 1, 0)) == [(1, (1, 1, 0, 1, 0))]
    # the last switch toggles on equal tail bits
    assert switch_moves((0, 0, 0, 0, 0)) == [(5, (0, 0, 0, 0, 1))]
    # interior flips need (0,0,1) or (1,1,0) windows
    assert switch_moves((1, 1, 0, 0, 1)) == [
        (2, (1, 0, 0, 0, 1)),
        (4, (1, 1, 0, 1, 1)),
    ]
    with pytest.raises(ValueError):
        switch_moves((0, 2, 0))


def test_encoding_bijection_pinned_values():
    assert b_map((5, 3, 1, 0, 0)) == (1, 1, 0, 0, 1)
    assert b_inv((0, 1, 1, 0, 0)) == (4, 2, 0, 0, 0)
    assert b_inv((0,) * 6) == (0,) * 6
    assert b_map((0,) * 6) == (0,) * 6


@given(st.integers(min_value=2, max_value=9), st.data())
def test_encoding_and_decoding_are_mutually_inverse(n, data):
    parts = data.draw(st.sets(st.integers(min_value=1, max_value=n)))
    x = tuple(sorted(parts, reverse=True)) + (0,) * (n - len(parts))
    assert b_inv(b_map(x)) == x
    bits = tuple(data.draw(st.lists(st.sampled_from([0, 1]), min_size=n, max_size=n)))
    assert b_map(b_inv(bits)) == bits


@pytest.fixture(scope="module")
def snapshot():
    return json.loads((DATA / "switch_graph_n5.json").read_text())


class TestFrozenFiveSwitchGraph:
    """The bundled n=5 graph snapshot pins both lattice and game layers."""

    def test_vertices_carry_the_encoding(self, snapshot):
        for row in snapshot["vertices"]:
            assert format_bits(b_map(tuple(row["tuple"]))) == row["bits"]

    def test_lattice_edges_match(self, snapshot):
        want = {(tuple(a), tuple(b), c) for a, b, c in snapshot["edges"]}
        assert set(z_lattice(5).diagram.edges) == want

    def test_game_graph_edges_match_under_the_encoding(self, snapshot):
        want = {(b_map(tuple(a)), b_map(tuple(b)), c)
                for a, b, c in snapshot["edges"]}
        assert set(mixedmiddleswitch_digraph(5).edges) == want


def test_all_off_to_alternating_takes_ten_moves():
    for via in ("join", "meet"):
        sol = solve_mixedmiddleswitch(5, (0, 0, 0, 0, 0), (0, 1, 0, 1, 0), via=via)
        assert sol.distance == 10
        assert len(sol.flips) == 10
        assert sol.positions[0] == (0, 0, 0, 0, 0)
        assert sol.positions[-1] == (0, 1, 0, 1, 0)
        replay_switches(sol)


def test_replay_rejects_a_tampered_solution():
    sol = solve_mixedmiddleswitch(4, (0, 0, 0, 0), (1, 1, 1, 1))
    broken = SwitchSolution(sol.start, sol.target, sol.positions,
                            (sol.flips[0],) + sol.flips[2:], sol.certificate)
    with pytest.raises(AssertionError):
        replay_switches(broken)


def test_solution_serialization_shows_flip_indices():
    sol = solve_mixedmiddleswitch(3, (0, 0, 0), (0, 0, 1))
    assert sol.serialize().splitlines()[-1] == "000 --3--> 001"


def test_hardest_pair_needs_fifteen_moves():
    assert gods_number(z_lattice(5)) == 15
    top, bottom = (5, 4, 3, 2, 1), (0, 0, 0, 0, 0)
    assert lattice_distance(z_lattice(5), bottom, top) == 15
