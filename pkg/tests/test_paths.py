"""Geodesics: rank-formula distances, certificates, and color tallies."""

import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from colorlattice import (
    CapExceededError,
    LatticeError,
    all_shortest_paths,
    bfs_distance,
    color_counts,
    gods_number,
    lattice_distance,
    shortest_path,
    z_lattice,
)
from helpers import random_lattice


@pytest.fixture(scope="module")
def zee4():
    return z_lattice(4)


@pytest.mark.parametrize("s, t, want", [
    ((0, 0, 0, 0), (4, 3, 2, 1), 10),
    ((0, 0, 0, 0), (0, 0, 0, 0), 0),
    ((2, 0, 0, 0), (3, 1, 0, 0), 2),
    ((4, 3, 2, 1), (2, 1, 0, 0), 7),
    ((3, 2, 1, 0), (4, 1, 0, 0), 3),
])
def test_formula_distance_agrees_with_breadth_first_search(zee4, s, t, want):
    assert lattice_distance(zee4, s, t) == want
    assert bfs_distance(zee4.diagram, s, t) == want


def test_join_route_yields_a_valid_mountain(zee4):
    cert = shortest_path(zee4, (2, 1, 0, 0), (4, 3, 0, 0), via="join")
    assert cert.orientation == "mountain"
    assert cert.distance == lattice_distance(zee4, (2, 1, 0, 0), (4, 3, 0, 0))
    assert cert.turning_point == zee4.join((2, 1, 0, 0), (4, 3, 0, 0))
    cert.validate(zee4)


def test_meet_route_yields_a_valid_valley(zee4):
    cert = shortest_path(zee4, (2, 1, 0, 0), (4, 3, 0, 0), via="meet")
    assert cert.orientation == "valley"
    assert cert.turning_point == zee4.meet((2, 1, 0, 0), (4, 3, 0, 0))
    cert.validate(zee4)


def test_via_must_name_a_turning_rule(zee4):
    with pytest.raises(ValueError, match="join.*meet"):
        shortest_path(zee4, (0, 0, 0, 0), (1, 0, 0, 0), via="apex")


def test_color_counts_total_the_distance_and_match_the_certificate(zee4):
    s, t = (2, 1, 0, 0), (4, 3, 0, 0)
    tallies = color_counts(zee4, s, t)
    assert sum(tallies.values()) == lattice_distance(zee4, s, t)
    for via in ("join", "meet"):
        cert = shortest_path(zee4, s, t, via=via)
        observed = cert.color_multiset()
        assert {c: m for c, m in tallies.items() if m} == dict(observed)


def test_every_geodesic_shares_one_color_multiset(zee4):
    s, t = (2, 0, 0, 0), (3, 1, 0, 0)
    paths = all_shortest_paths(zee4, s, t, cap=4)
    assert len(paths) >= 2
    seen = {frozenset(p.color_multiset().items()) for p in paths}
    assert len(seen) == 1
    for p in paths:
        p.validate(zee4)


def test_enumeration_refuses_distances_beyond_the_cap(zee4):
    with pytest.raises(CapExceededError):
        all_shortest_paths(zee4, (0, 0, 0, 0), (4, 3, 2, 1), cap=9)


def test_gods_number_is_the_lattice_length(zee4):
    assert gods_number(zee4) == 10 == zee4.length


def test_serialized_certificate_is_line_oriented(zee4):
    text = shortest_path(zee4, (0, 0, 0, 0), (1, 0, 0, 0)).serialize()
    head, step, tail = text.split("\n")
    assert head == "distance=1 orientation=mountain apex=1,0,0,0"
    assert step == "0,0,0,0 --4--> 1,0,0,0"
    assert tail == ""


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10 ** 6))
def test_rank_formula_matches_search_on_random_ideal_lattices(seed):
    """The move-count formula is exact on arbitrary distributive lattices."""
    lat = random_lattice(seed)
    verts = lat.diagram.vertices
    for i in range(len(verts)):
        for j in range(i, len(verts)):
            s, t = verts[i], verts[j]
            d = lattice_distance(lat, s, t)
            assert d == bfs_distance(lat.diagram, s, t)
            cert = shortest_path(lat, s, t, via=random.Random(seed + i + j).choice(["join", "meet"]))
            assert cert.distance == d
            cert.validate(lat)
