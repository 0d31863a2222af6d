"""Square-board tilings, snake moves, and the searched correspondence."""

import pytest

from colorlattice import (
    CapExceededError,
    NotIsomorphicError,
    SnakeSolution,
    all_snakes,
    bfs_distance,
    c_lattice,
    cached_isomorphism,
    catalan_tuples,
    enumerate_tilings,
    find_isomorphism,
    is_tiling,
    legal_snake_moves,
    ming_digraph,
    render_tiling,
    replay_snakes,
    solve_snakes,
    verify_isomorphism,
)
from colorlattice.core import ColoredDigraph

CATALAN = {1: 2, 2: 5, 3: 14, 4: 42, 5: 132, 6: 429}


@pytest.mark.parametrize("n, count", sorted(CATALAN.items()))
def test_tuples_and_tilings_are_equinumerous(n, count):
    assert len(catalan_tuples(n)) == count
    assert len(enumerate_tilings(n)) == count


def test_staircase_bound_on_tuples():
    assert (3, 1, 1) in catalan_tuples(3)
    assert (3, 3, 1) not in catalan_tuples(3)  # second entry may reach only 2
    assert all(t[-1] <= 1 for t in catalan_tuples(4))


def test_tuple_lattice_length_and_colors():
    lat = c_lattice(3)
    assert lat.length == 6  # n(n+1)/2
    assert lat.diagram.colors() == [1, 2, 3, 4, 5]
    # raising the first coordinate to its ceiling wears color n+q-t = 1
    assert lat.diagram.edge_color((2, 1, 0), (3, 1, 0)) == 1


@pytest.mark.parametrize("rows, ok", [
    ((4, 4, 1, 0), True),
    ((1, 0, 0, 0), True),
    ((0, 0, 0, 0), True),
    ((2, 2, 0, 0), True),
    ((1, 2, 0, 0), False),     # rows must decrease weakly
    ((5, 0, 0, 0), False),     # wider than the board
    ((1, 1, 0, 0), False),     # column 1 too tall for the diagonal rule
    ((1, 1), False),           # wrong length
])
def test_tiling_predicate(rows, ok):
    assert is_tiling(rows, 4) is ok


def test_rendering_marks_tiled_squares():
    assert render_tiling((4, 4, 1, 0), 4) == "####\n####\n#...\n...."
    assert render_tiling((0, 0), 2) == "..\n.."


def test_snakes_are_centered_on_the_diagonal():
    snakes = all_snakes(2)
    assert len(snakes) == 6
    assert ((1, 2), (1, 1), (2, 1)) in snakes
    for snake in all_snakes(3):
        m = len(snake)
        i, j = snake[(m + 1) // 2 - 1]
        assert i == j  # the central square sits on the main diagonal
        for (a, b), (c, d) in zip(snake, snake[1:]):
            assert (c - a, d - b) in ((1, 0), (0, -1))  # south or west


def test_moves_from_the_empty_board():
    assert legal_snake_moves(2, (0, 0)) == [
        (((1, 1),), "add", (1, 0)),
        (((1, 2), (1, 1), (2, 1)), "add", (2, 1)),
    ]
    with pytest.raises(ValueError):
        legal_snake_moves(2, (1, 1))


@pytest.mark.parametrize("n, edge_count", [(1, 1), (2, 5), (3, 21), (4, 84), (5, 330)])
def test_move_graph_edge_counts(n, edge_count):
    g = ming_digraph(n)
    assert len(g.edges) == edge_count
    assert len(g) == CATALAN[n]
    assert len(c_lattice(n).diagram.edges) == edge_count


@pytest.mark.parametrize("n", [2, 3, 4])
def test_search_finds_the_correspondence(n):
    mapping = find_isomorphism(c_lattice(n).diagram, ming_digraph(n))
    verify_isomorphism(c_lattice(n).diagram, ming_digraph(n), mapping)


def test_search_reports_genuine_failure():
    # two diamonds whose color-1 edges sit differently: no isomorphism exists
    a = ColoredDigraph("sxyt", [("s", "x", 1), ("s", "y", 2),
                                ("x", "t", 2), ("y", "t", 1)])
    b = ColoredDigraph("sxyt", [("s", "x", 1), ("s", "y", 2),
                                ("x", "t", 1), ("y", "t", 2)])
    with pytest.raises(NotIsomorphicError):
        find_isomorphism(a, b)
    with pytest.raises(CapExceededError):
        find_isomorphism(c_lattice(4).diagram, ming_digraph(4), cap=10)


def test_corrupted_mapping_is_caught():
    mapping = dict(cached_isomorphism(2))
    (u, v), *_ = [(u, v) for u in mapping for v in mapping
                  if mapping[u] != mapping[v]]
    mapping[u], mapping[v] = mapping[v], mapping[u]
    with pytest.raises(NotIsomorphicError):
        verify_isomorphism(c_lattice(2).diagram, ming_digraph(2), mapping)


def test_bundled_tables_cover_every_vertex():
    for n in (2, 3, 4):
        iso = cached_isomorphism(n)
        assert sorted(iso) == catalan_tuples(n)
        assert sorted(iso.values()) == enumerate_tilings(n)


class TestSolving:
    def test_pinned_seven_move_instance(self):
        sol = solve_snakes(4, (4, 4, 1, 0), (1, 0, 0, 0))
        assert sol.distance == 7
        assert sol.distance == bfs_distance(ming_digraph(4), (4, 4, 1, 0),
                                            (1, 0, 0, 0))
        assert sum(sol.color_counts.values()) == 7
        replay_snakes(sol)

    def test_first_action_is_a_five_snake_removal(self):
        sol = solve_snakes(4, (4, 4, 1, 0), (1, 0, 0, 0))
        line = sol.serialize().splitlines()[1]
        assert line == ("4,4,1,0 --5--> 4,0,0,0  "
                        "[remove (2,4) (2,3) (2,2) (2,1) (3,1)]")

    @pytest.mark.parametrize("via", ["join", "meet"])
    def test_both_turning_rules_agree_on_cost(self, via):
        sol = solve_snakes(3, (3, 3, 1), (1, 0, 0), via=via)
        assert sol.distance == bfs_distance(ming_digraph(3), (3, 3, 1), (1, 0, 0))

    def test_replay_rejects_a_detached_snake(self):
        sol = solve_snakes(2, (0, 0), (2, 1))
        (verb, snake) = sol.actions[0]
        forged = SnakeSolution(sol.n, sol.states,
                               ((verb, ((1, 2), (2, 2), (2, 1))),) + sol.actions[1:],
                               sol.color_counts, sol.certificate)
        with pytest.raises(AssertionError):
            replay_snakes(forged)

    def test_non_tilings_are_refused(self):
        with pytest.raises(ValueError, match="not a tiling"):
            solve_snakes(4, (1, 1, 0, 0), (0, 0, 0, 0))
