"""Snake moves on a square board, and the staircase-Catalan lattice they hide.

Positions are tilings of an n x n board that are closed to the upper left
(so each is a partition drawn from the top-left corner) and balanced on the
main diagonal: wherever a diagonal square (i, i) is tiled, the tiled squares
below it in its column may not outnumber the tiled squares to its right in
its row.  Writing row lengths as a partition and conjugating, the balance
rule is simply conj(t)_i <= t_i across the Durfee range.

A move adds or removes tiles along a "centered southwesterly snake": a
sequence of squares walking South or West one step at a time whose
floor((m+1)/2)-th square sits on the main diagonal.  Moves are legal when
the result is again a valid tiling.  Orienting additions of even-length
snakes and removals of odd-length snakes (the length is the edge color)
turns the move graph into the diagram of a distributive lattice of bounded
weakly decreasing tuples - but the identification of the two graphs is not
written down anywhere as a formula.  This module finds it by search,
ships the searched tables for small boards, and verifies them on load.
"""

from __future__ import annotations

import json
from collections import Counter
from functools import lru_cache
from importlib import resources

from .core import (CapExceededError, ColoredDigraph, DiamondLattice,
                   LatticeError, attach_birkhoff_coords)
from .paths import color_counts, shortest_path

__all__ = [
    "NotIsomorphicError",
    "catalan_tuples",
    "c_lattice",
    "is_tiling",
    "enumerate_tilings",
    "all_snakes",
    "legal_snake_moves",
    "ming_digraph",
    "snake_moves_table",
    "find_isomorphism",
    "verify_isomorphism",
    "cached_isomorphism",
    "render_tiling",
    "SnakeSolution",
    "solve_snakes",
    "replay_snakes",
]


class NotIsomorphicError(Exception):
    """The two colored digraphs admit no color-preserving isomorphism."""


# --------------------------------------------------------------------------
# the lattice side

def catalan_tuples(n: int):
    """Weakly decreasing n-tuples with 0 <= s_i <= n+1-i, sorted."""
    out = []

    def grow(prefix):
        i = len(prefix)
        if i == n:
            out.append(tuple(prefix))
            return
        hi = min(n - i, prefix[-1] if prefix else n)
        for v in range(hi + 1):
            grow(prefix + [v])

    grow([])
    out.sort()
    return out


@lru_cache(maxsize=None)
def c_lattice(n: int) -> DiamondLattice:
    """The distributive lattice of staircase-bounded tuples.

    Component-wise order; a cover raises coordinate q by one, onto the new
    value t_q, and wears color n + q - t_q.
    """
    if n < 1:
        raise ValueError("n must be positive")
    verts = catalan_tuples(n)
    have = set(verts)
    edges = []
    for s in verts:
        for q in range(1, n + 1):
            t = s[:q - 1] + (s[q - 1] + 1,) + s[q:]
            if t in have:
                edges.append((s, t, n + q - t[q - 1]))
    lat = DiamondLattice(
        ColoredDigraph(verts, edges), "distributive",
        coord_join=lambda a, b: tuple(map(max, a, b)),
        coord_meet=lambda a, b: tuple(map(min, a, b)))
    return attach_birkhoff_coords(lat)


# --------------------------------------------------------------------------
# tilings

def is_tiling(rows, n: int) -> bool:
    """Upper-left-closed tiling of the n x n board obeying the diagonal rule.

    ``rows`` is the n-tuple of row lengths.  The diagonal rule: for each i
    with rows_i >= i (square (i,i) tiled), the i-th column height must not
    exceed rows_i.
    """
    rows = tuple(rows)
    if len(rows) != n or any(not isinstance(p, int) or isinstance(p, bool)
                             for p in rows):
        return False
    if any(a < b for a, b in zip(rows, rows[1:])) or rows[-1] < 0 \
            or rows[0] > n:
        return False
    for i in range(1, n + 1):
        if rows[i - 1] >= i:
            col = sum(1 for p in rows if p >= i)
            if col > rows[i - 1]:
                return False
    return True


def enumerate_tilings(n: int):
    """All valid tilings of the n x n board, as sorted row-length tuples."""
    out = []

    def grow(prefix):
        if len(prefix) == n:
            if is_tiling(tuple(prefix), n):
                out.append(tuple(prefix))
            return
        for v in range((prefix[-1] if prefix else n) + 1):
            grow(prefix + [v])

    grow([])
    out.sort()
    return out


def _cells(rows):
    return {(i, j) for i, p in enumerate(rows, start=1)
            for j in range(1, p + 1)}


def _shape(cells, n):
    rows = tuple(sum(1 for (i, j) in cells if i == r) for r in range(1, n + 1))
    if _cells(rows) != cells:
        return None
    return rows


def render_tiling(rows, n: int) -> str:
    """An ASCII picture, '#' for tiled squares and '.' for bare ones."""
    return "\n".join(
        "".join("#" if j <= rows[i - 1] else "." for j in range(1, n + 1))
        for i in range(1, n + 1))


# --------------------------------------------------------------------------
# snakes

@lru_cache(maxsize=None)
def all_snakes(n: int):
    """Every centered southwesterly snake on the n x n board.

    A snake of length m steps South or West and its floor((m+1)/2)-th
    square lies on the main diagonal; snakes are generated outward from
    that diagonal square (North/East for the head, South/West for the
    tail), so each is produced exactly once.
    """
    snakes = []
    for m in range(1, 2 * n):
        p = (m + 1) // 2
        for d in range(1, n + 1):
            heads = [[(d, d)]]
            for _ in range(p - 1):
                grown = []
                for walk in heads:
                    i, j = walk[-1]
                    for (ni, nj) in ((i - 1, j), (i, j + 1)):
                        if 1 <= ni <= n and 1 <= nj <= n:
                            grown.append(walk + [(ni, nj)])
                heads = grown
            tails = [[]]
            for _ in range(m - p):
                grown = []
                for walk in tails:
                    i, j = walk[-1] if walk else (d, d)
                    for (ni, nj) in ((i + 1, j), (i, j - 1)):
                        if 1 <= ni <= n and 1 <= nj <= n:
                            grown.append(walk + [(ni, nj)])
                tails = grown
            for head in heads:
                for tail in tails:
                    snakes.append(tuple(reversed(head)) + tuple(tail))
    return tuple(snakes)


def legal_snake_moves(n: int, rows):
    """All legal moves at a tiling: (snake, "add"|"remove", resulting tiling).

    Additions lay tiles on a fully untiled snake, removals clear a fully
    tiled one; either is legal only when the result is again a tiling.
    Deterministically ordered.
    """
    rows = tuple(rows)
    if not is_tiling(rows, n):
        raise ValueError(f"not a tiling of the {n} x {n} board: {rows}")
    tiled = _cells(rows)
    moves = []
    for snake in all_snakes(n):
        sq = set(snake)
        if sq <= tiled:
            result = _shape(tiled - sq, n)
            if result is not None and is_tiling(result, n):
                moves.append((snake, "remove", result))
        elif not (sq & tiled):
            result = _shape(tiled | sq, n)
            if result is not None and is_tiling(result, n):
                moves.append((snake, "add", result))
    moves.sort(key=lambda mv: (len(mv[0]), mv[0], mv[1]))
    return moves


@lru_cache(maxsize=None)
def _ming_digraph_and_moves(n: int):
    verts = enumerate_tilings(n)
    edges = []
    table = {}
    for rows in verts:
        for snake, verb, result in legal_snake_moves(n, rows):
            m = len(snake)
            # orientation rule: even-length additions and odd-length
            # removals point forward; their mirrors are the same moves
            # seen from the other endpoint
            if (verb == "add") == (m % 2 == 0):
                edges.append((rows, result, m))
                table[(rows, result)] = (snake, verb)
    return ColoredDigraph(verts, edges), table


def ming_digraph(n: int) -> ColoredDigraph:
    """The directed snake-move graph on all tilings of the n x n board."""
    if n < 1:
        raise ValueError("n must be positive")
    return _ming_digraph_and_moves(n)[0]


def snake_moves_table(n: int) -> dict:
    """Map (source, result) -> (snake, verb) for every edge of ming_digraph."""
    return _ming_digraph_and_moves(n)[1]


# --------------------------------------------------------------------------
# isomorphism search

def _refine(graphs):
    """Shared Weisfeiler-Lehman-style refinement of several colored digraphs.

    Returns one label per vertex per graph; vertices in different graphs
    with different labels can never correspond under an isomorphism.
    """
    labels = [{v: 0 for v in g.vertices} for g in graphs]
    while True:
        raw = []
        for g, lab in zip(graphs, labels):
            cur = {}
            for v in g.vertices:
                outs = tuple(sorted((c, lab[w]) for (w, c) in g.out_edges(v)))
                ins = tuple(sorted((c, lab[w]) for (w, c) in g.in_edges(v)))
                cur[v] = (lab[v], outs, ins)
            raw.append(cur)
        canon = {key: idx for idx, key in enumerate(
            sorted({key for cur in raw for key in cur.values()}))}
        new = [{v: canon[cur[v]] for v in cur} for cur in raw]
        if all(len(set(lab.values())) == len(set(nlab.values()))
               for lab, nlab in zip(labels, new)):
            return new
        labels = new


def find_isomorphism(A: ColoredDigraph, B: ColoredDigraph, cap: int = 2000):
    """A color- and direction-preserving vertex bijection A -> B, by search.

    Vertices are first split into refinement classes (degree and color
    signatures, propagated to a fixpoint); backtracking then assigns
    vertices rarest-class first.  Raises NotIsomorphicError when the
    search space is exhausted, CapExceededError above ``cap`` vertices.
    """
    if len(A.vertices) > cap or len(B.vertices) > cap:
        raise CapExceededError(
            f"isomorphism search capped at {cap} vertices")
    if len(A.vertices) != len(B.vertices) or len(A.edges) != len(B.edges):
        raise NotIsomorphicError("vertex or edge counts differ")
    la, lb = _refine([A, B])
    if Counter(la.values()) != Counter(lb.values()):
        raise NotIsomorphicError("refinement signatures differ")
    classes_b = {}
    for v, lbl in lb.items():
        classes_b.setdefault(lbl, []).append(v)
    order = sorted(A.vertices,
                   key=lambda v: (len(classes_b[la[v]]), la[v], str(v)))
    fwd = {}
    used = set()

    def consistent(v, w):
        for (u, c) in A.out_edges(v):
            if u in fwd and B.edge_color(w, fwd[u]) != c:
                return False
        for (u, c) in A.in_edges(v):
            if u in fwd and B.edge_color(fwd[u], w) != c:
                return False
        return True

    def assign(idx):
        if idx == len(order):
            return True
        v = order[idx]
        for w in classes_b[la[v]]:
            if w not in used and consistent(v, w):
                fwd[v] = w
                used.add(w)
                if assign(idx + 1):
                    return True
                del fwd[v]
                used.remove(w)
        return False

    if not assign(0):
        raise NotIsomorphicError("backtracking exhausted all assignments")
    return fwd


def verify_isomorphism(A: ColoredDigraph, B: ColoredDigraph, mapping) -> None:
    """Check a claimed isomorphism completely; raise NotIsomorphicError if bad."""
    values = list(mapping.values())
    if set(mapping) != set(A.vertices) or set(values) != set(B.vertices) \
            or len(set(values)) != len(values):
        raise NotIsomorphicError("mapping is not a vertex bijection")
    if len(A.edges) != len(B.edges):
        raise NotIsomorphicError("edge counts differ")
    for (u, v, c) in A.edges:
        if B.edge_color(mapping[u], mapping[v]) != c:
            raise NotIsomorphicError(
                f"edge {u} -> {v} (color {c}) is not preserved")


@lru_cache(maxsize=None)
def cached_isomorphism(n: int) -> dict:
    """The lattice-to-tilings correspondence, from the shipped table or by search.

    Tables bundled as package data cover small boards; they are re-verified
    edge by edge on every load, so a corrupted table cannot pass silently.
    Larger boards fall back to a fresh search.
    """
    lat = c_lattice(n)
    ming = ming_digraph(n)
    path = resources.files("colorlattice") / "data" / f"ming_iso_{n}.json"
    if path.is_file():
        payload = json.loads(path.read_text())
        if payload["n"] != n:
            raise ValueError(f"table {path} is for n={payload['n']}")
        mapping = {tuple(a): tuple(b) for a, b in payload["pairs"]}
    else:
        mapping = find_isomorphism(lat.diagram, ming)
    verify_isomorphism(lat.diagram, ming, mapping)
    return mapping


# --------------------------------------------------------------------------
# solving

class SnakeSolution:
    """An optimal play: tilings visited plus the snake of every move."""

    __slots__ = ("n", "states", "actions", "distance", "color_counts",
                 "certificate")

    def __init__(self, n, states, actions, color_counts, certificate):
        self.n = n
        self.states = tuple(states)
        self.actions = tuple(actions)   # (verb, snake) per step
        self.distance = len(actions)
        self.color_counts = dict(color_counts)
        self.certificate = certificate

    @property
    def start(self):
        return self.states[0]

    @property
    def target(self):
        return self.states[-1]

    def serialize(self) -> str:
        def fmt(rows):
            return ",".join(str(p) for p in rows)

        lines = [f"distance={self.distance}"]
        for (a, (verb, snake), b) in zip(self.states, self.actions,
                                         self.states[1:]):
            path = " ".join(f"({i},{j})" for (i, j) in snake)
            lines.append(f"{fmt(a)} --{len(snake)}--> {fmt(b)}  [{verb} {path}]")
        return "\n".join(lines)

    def __repr__(self):
        return (f"SnakeSolution(n={self.n}, {self.start} -> {self.target}, "
                f"{self.distance} moves)")


def solve_snakes(n: int, s, t, via: str = "join") -> SnakeSolution:
    """Optimal play between two tilings of the n x n board.

    Endpoints are pulled back through the (searched) correspondence into
    the tuple lattice, a mountain or valley geodesic is built there, and
    each step is pushed forward again as a snake addition or removal.
    """
    s, t = tuple(s), tuple(t)
    for rows in (s, t):
        if not is_tiling(rows, n):
            raise ValueError(f"not a tiling of the {n} x {n} board: {rows}")
    iso = cached_isomorphism(n)
    inv = {rows: v for v, rows in iso.items()}
    lat = c_lattice(n)
    cert = shortest_path(lat, inv[s], inv[t], via=via)
    states = [iso[v] for v in cert.vertices]
    table = snake_moves_table(n)
    actions = []
    for (a, b), (color, _) in zip(zip(states, states[1:]), cert.steps):
        if (a, b) in table:
            snake, verb = table[(a, b)]
        elif (b, a) in table:
            snake, verb = table[(b, a)]
            verb = "add" if verb == "remove" else "remove"
        else:
            raise AssertionError(f"no snake move joins {a} and {b}")
        if len(snake) != color:
            raise AssertionError("snake length disagrees with the edge color")
        actions.append((verb, snake))
    sol = SnakeSolution(n, states, actions,
                        color_counts(lat, inv[s], inv[t]), cert)
    replay_snakes(sol)
    return sol


def replay_snakes(sol: SnakeSolution) -> None:
    """Re-run a solution under the raw snake rules; raise if any move cheats."""
    n = sol.n
    snakes = set(all_snakes(n))
    cur = sol.start
    for step, ((verb, snake), nxt) in enumerate(zip(sol.actions,
                                                    sol.states[1:])):
        if snake not in snakes:
            raise AssertionError(f"move {step}: not a centered snake: {snake}")
        tiled = _cells(cur)
        sq = set(snake)
        if verb == "remove":
            if not sq <= tiled:
                raise AssertionError(f"move {step}: removing untiled squares")
            after = tiled - sq
        else:
            if sq & tiled:
                raise AssertionError(f"move {step}: tiling occupied squares")
            after = tiled | sq
        shape = _shape(after, n)
        if shape is None or not is_tiling(shape, n) or shape != nxt:
            raise AssertionError(f"move {step}: illegal or mismatched result")
        cur = nxt
    if cur != sol.target:
        raise AssertionError("replay did not reach the target tiling")
