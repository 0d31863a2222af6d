"""Domino puzzles on checkered boards and the symplectic lattices behind them.

The playing pieces are partitions drawn in a k x (2n-k) grid.  Three board
shapes appear:

* ``ballot``    - the grid minus a southeastern staircase of base/height k-1;
                  row r keeps columns 1 .. (2n-k)-r+1, and the partitions that
                  fit are the "ballot" ones (row r at most (2n-k)-r+1 long);
* ``staircase`` - the 180-degree rotation; row r keeps columns k+1-r .. 2n-k,
                  and the partitions in play always contain the forced
                  northwestern staircase (row r at least k-r long);
* ``full``      - the whole grid, all box partitions.

A move adds or removes one domino (two adjacent squares) or the single
northeastern corner square, provided the result is again a partition of the
board's kind.  A checkerboard coloring anchored red at the northeastern
corner orients each move into a directed, colored edge; the resulting
digraphs turn out to be diagrams of distributive lattices, which is what
makes optimal play computable by rank arithmetic.

Alongside the boards live several codings of the same objects - columnar
tableaux, 0/1 tally sequences, and a reordering bijection between them -
plus the two admissibility conditions that carve the symplectic sublattices
out of the full box lattice.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .core import (ColoredDigraph, DiamondLattice, LatticeError,
                   attach_birkhoff_coords)
from .paths import color_counts, shortest_path

__all__ = [
    "StructureViolationError",
    "is_box_partition",
    "is_ballot",
    "is_staircase",
    "enumerate_box_partitions",
    "enumerate_tableaux",
    "tab_to_part",
    "part_to_tab",
    "wt_c",
    "to_tally",
    "tally_to_tab",
    "reorder_tally",
    "unreorder_tally",
    "box_to_tab",
    "tab_to_box",
    "l_map",
    "l_inv",
    "conjugate",
    "durfee",
    "kn_admissible",
    "dec_admissible",
    "kn_admissible_tally",
    "dec_admissible_tally",
    "is_staircase_tally",
    "is_ballot_tally",
    "Board",
    "Move",
    "legal_moves",
    "domino_digraph",
    "domino_moves",
    "a_lattice",
    "sigma",
    "recolor_sigma",
    "kn_lattice",
    "dec_lattice",
    "DominoSolution",
    "solve_domino",
    "replay_domino",
]


class StructureViolationError(LatticeError):
    """An induced subgraph failed its lattice validation; implementation bug."""


# --------------------------------------------------------------------------
# partitions and their validity per board kind

def _is_parts(tau) -> bool:
    return (all(isinstance(p, int) and not isinstance(p, bool) for p in tau)
            and all(a >= b for a, b in zip(tau, tau[1:]))
            and (not tau or tau[-1] >= 0))


def is_box_partition(tau, k: int, m: int) -> bool:
    """Weakly decreasing, k parts, each between 0 and m."""
    tau = tuple(tau)
    return len(tau) == k and _is_parts(tau) and (not tau or tau[0] <= m)


def is_ballot(tau, k: int, n: int) -> bool:
    """Box partition with row i at most (2n-k)-i+1 long."""
    tau = tuple(tau)
    return (is_box_partition(tau, k, 2 * n - k)
            and all(tau[i] <= 2 * n - k - i for i in range(k)))


def is_staircase(tau, k: int, n: int) -> bool:
    """Box partition with row i at least k-i long."""
    tau = tuple(tau)
    return (is_box_partition(tau, k, 2 * n - k)
            and all(tau[i] >= k - i - 1 for i in range(k)))


def enumerate_box_partitions(k: int, m: int):
    """All weakly decreasing k-tuples with entries in 0..m, sorted."""
    out = []

    def grow(prefix, cap):
        if len(prefix) == k:
            out.append(tuple(prefix))
            return
        for p in range(cap + 1):
            grow(prefix + [p], p)

    grow([], m)
    out.sort()
    return out


# --------------------------------------------------------------------------
# tableaux codings

def enumerate_tableaux(variant: str, k: int, n: int):
    """All columnar tableaux of the variant, as sorted increasing tuples.

    ``king`` requires T_i <= 2(n-k+i); ``seminarii`` requires T_i >= 2i-1;
    both draw strictly increasing values from 1..2n.
    """
    if variant not in ("king", "seminarii"):
        raise ValueError(f"unknown tableau variant {variant!r}")
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    out = []
    for T in combinations(range(1, 2 * n + 1), k):
        if variant == "king":
            if all(T[i] <= 2 * (n - k + i + 1) for i in range(k)):
                out.append(T)
        else:
            if all(T[i] >= 2 * i + 1 for i in range(k)):
                out.append(T)
    return out


def _check_tab(T):
    T = tuple(T)
    if not T or any(not isinstance(v, int) or isinstance(v, bool) for v in T) \
            or any(a >= b for a, b in zip(T, T[1:])) or T[0] < 1:
        raise ValueError(f"not a strictly increasing positive tuple: {T}")
    return T


def tab_to_part(T):
    """Partition from a tableau: tau_i = T_{k+1-i} - (k+1-i).

    Reverses the column and subtracts the staircase; King tableaux land on
    ballot partitions and seminarii tableaux on staircase partitions.
    """
    T = _check_tab(T)
    k = len(T)
    return tuple(T[k - i] - (k + 1 - i) for i in range(1, k + 1))


def part_to_tab(tau):
    """Tableau from a partition: T_j = j + tau_{k+1-j}; inverse of tab_to_part."""
    tau = tuple(tau)
    if not _is_parts(tau) or not tau:
        raise ValueError(f"not a partition: {tau}")
    k = len(tau)
    return tuple(j + tau[k - j] for j in range(1, k + 1))


def wt_c(T, n: int):
    """The weight of a tableau, as n coefficients over fundamental weights.

    Coefficient i < n reads #(2i-1) - #(2i) - #(2i+1) + #(2i+2) off the
    multiplicities of the entry values; coefficient n is #(2n-1) - #(2n).
    """
    T = _check_tab(T)
    if T[-1] > 2 * n:
        raise ValueError(f"entries of {T} exceed 2n = {2 * n}")
    count = [0] * (2 * n + 3)
    for v in T:
        count[v] += 1
    out = []
    for i in range(1, n):
        out.append(count[2 * i - 1] - count[2 * i] - count[2 * i + 1]
                   + count[2 * i + 2])
    out.append(count[2 * n - 1] - count[2 * n])
    return tuple(out)


# --------------------------------------------------------------------------
# tally sequences and the reordering

def to_tally(T, n: int):
    """Length-2n indicator sequence of a tableau's value set."""
    T = _check_tab(T)
    if T[-1] > 2 * n:
        raise ValueError(f"entries of {T} exceed 2n = {2 * n}")
    bits = [0] * (2 * n)
    for v in T:
        bits[v - 1] = 1
    return tuple(bits)


def tally_to_tab(t):
    """Positions of the ones, as an increasing tuple."""
    return tuple(i + 1 for i, b in enumerate(t) if b)


def _reorder_perm(n: int):
    # position i of the reordered sequence reads position perm(i) of the
    # original: odd positions 1,3,...,2n-1 first, then 2n,2n-2,...,2
    return tuple((2 * i - 1 if i <= n else 4 * n + 2 - 2 * i)
                 for i in range(1, 2 * n + 1))


def reorder_tally(t):
    """Rewrite a length-2n tally in the zigzag order t'_i = t_{perm(i)}."""
    t = tuple(t)
    if len(t) % 2 or any(b not in (0, 1) for b in t):
        raise ValueError("expected a 0/1 tuple of even length")
    perm = _reorder_perm(len(t) // 2)
    return tuple(t[p - 1] for p in perm)


def unreorder_tally(tp):
    """Invert reorder_tally."""
    tp = tuple(tp)
    if len(tp) % 2 or any(b not in (0, 1) for b in tp):
        raise ValueError("expected a 0/1 tuple of even length")
    perm = _reorder_perm(len(tp) // 2)
    out = [0] * len(tp)
    for i, p in enumerate(perm):
        out[p - 1] = tp[i]
    return tuple(out)


# --------------------------------------------------------------------------
# the complementary tableau coding used on the box-lattice side

def box_to_tab(tau, m: int):
    """Tableau of a box partition under the complementary coding T_j = m+j-tau_j."""
    tau = tuple(tau)
    if not is_box_partition(tau, len(tau), m):
        raise ValueError(f"not a partition in a {len(tau)} x {m} box: {tau}")
    return tuple(m + j + 1 - tau[j] for j in range(len(tau)))


def tab_to_box(T, m: int):
    """Invert box_to_tab: tau_j = m + j - T_j."""
    T = _check_tab(T)
    return tuple(m + j + 1 - T[j] for j in range(len(T)))


def l_map(tau, k: int, n: int):
    """The five-stage rewriting of one box partition into another.

    partition -> tableau -> tally -> reordered tally -> tableau (read off the
    ones) -> partition (complementary coding).  A bijection on k x (2n-k)
    box partitions; it carries staircase partitions onto the first
    admissible family and ballot partitions onto the second.
    """
    tau = tuple(tau)
    if not is_box_partition(tau, k, 2 * n - k):
        raise ValueError(f"not a partition in a {k} x {2 * n - k} box: {tau}")
    T = part_to_tab(tau)
    tp = reorder_tally(to_tally(T, n))
    return tab_to_box(tally_to_tab(tp), 2 * n - k)


def l_inv(tau, k: int, n: int):
    """Invert l_map."""
    tau = tuple(tau)
    if not is_box_partition(tau, k, 2 * n - k):
        raise ValueError(f"not a partition in a {k} x {2 * n - k} box: {tau}")
    tp = to_tally(box_to_tab(tau, 2 * n - k), n)
    return tab_to_part(tally_to_tab(unreorder_tally(tp)))


# --------------------------------------------------------------------------
# admissibility

def conjugate(tau, width: int):
    """The conjugate partition, padded/truncated to ``width`` parts."""
    tau = tuple(tau)
    return tuple(sum(1 for p in tau if p >= c) for c in range(1, width + 1))


def durfee(tau) -> int:
    """Size of the largest i with tau_i >= i."""
    return max([i for i in range(1, len(tau) + 1) if tau[i - 1] >= i],
               default=0)


def kn_admissible(tau, k: int, n: int) -> bool:
    """First admissibility family: tau_i - tau'_i <= 2n-2k on the Durfee range."""
    tau = tuple(tau)
    if not is_box_partition(tau, k, 2 * n - k):
        raise ValueError(f"not a partition in a {k} x {2 * n - k} box: {tau}")
    conj = conjugate(tau, 2 * n - k)
    return all(tau[i - 1] - conj[i - 1] <= 2 * n - 2 * k
               for i in range(1, durfee(tau) + 1))


def dec_admissible(tau, k: int, n: int) -> bool:
    """Second admissibility family, via the clipped conjugate.

    Strip the first n-k and last n-k columns of the conjugate diagram; the
    k remaining column heights must satisfy the self-conjugacy bound
    (clipped_i <= clipped'_i) on their own Durfee range.
    """
    tau = tuple(tau)
    if not is_box_partition(tau, k, 2 * n - k):
        raise ValueError(f"not a partition in a {k} x {2 * n - k} box: {tau}")
    conj = conjugate(tau, 2 * n - k)
    clipped = conj[n - k:n]
    cc = conjugate(clipped, k)
    return all(clipped[i - 1] <= cc[i - 1]
               for i in range(1, durfee(clipped) + 1))


def _prefix_pair_bound(bits, pairs) -> bool:
    # running sum over the given index pairs (1-based) stays <= prefix length
    total = 0
    for p, (a, b) in enumerate(pairs, start=1):
        total += bits[a - 1] + bits[b - 1]
        if total > p:
            return False
    return True


def kn_admissible_tally(tau, k: int, n: int) -> bool:
    """Tally form of the first family: partial sums t'_i + t'_{2n+1-i} <= p."""
    tp = to_tally(box_to_tab(tuple(tau), 2 * n - k), n)
    return _prefix_pair_bound(tp, [(i, 2 * n + 1 - i) for i in range(1, n + 1)])


def dec_admissible_tally(tau, k: int, n: int) -> bool:
    """Tally form of the second family: partial sums t'_{n+1-i} + t'_{n+i} <= p."""
    tp = to_tally(box_to_tab(tuple(tau), 2 * n - k), n)
    return _prefix_pair_bound(tp, [(n + 1 - i, n + i) for i in range(1, n + 1)])


def is_staircase_tally(t) -> bool:
    """Staircase test on the plain tally: partial sums t_{2i-1} + t_{2i} <= p."""
    t = tuple(t)
    n = len(t) // 2
    return _prefix_pair_bound(t, [(2 * i - 1, 2 * i) for i in range(1, n + 1)])


def is_ballot_tally(t) -> bool:
    """Ballot test on the plain tally: partial sums t_{2n+1-2i} + t_{2n+2-2i} <= p."""
    t = tuple(t)
    n = len(t) // 2
    return _prefix_pair_bound(
        t, [(2 * n + 1 - 2 * i, 2 * n + 2 - 2 * i) for i in range(1, n + 1)])


# --------------------------------------------------------------------------
# boards

class Board:
    """A checkered puzzle board of one of the three kinds.

    Checker colors are anchored at the northeastern corner square, which is
    red; red squares lie on "removing" diagonals indexed 1..n by
    col - row = 2i - k - 1, white squares on "adding" diagonals indexed
    1..n-1 by col - row = 2i - k.  On the full board the adding diagonals
    are displayed and colored under the relabeling i -> 2n - i.
    """

    __slots__ = ("kind", "k", "n", "width")

    def __init__(self, kind: str, k: int, n: int):
        if kind not in ("ballot", "staircase", "full"):
            raise ValueError(f"unknown board kind {kind!r}")
        if not 1 <= k <= n:
            raise ValueError("need 1 <= k <= n")
        self.kind = kind
        self.k = k
        self.n = n
        self.width = 2 * n - k

    def has_square(self, r: int, c: int) -> bool:
        if not (1 <= r <= self.k and 1 <= c <= self.width):
            return False
        if self.kind == "ballot":
            return c <= self.width - r + 1
        if self.kind == "staircase":
            return c >= self.k + 1 - r
        return True

    @property
    def singleton(self):
        return (1, self.width)

    def is_red(self, r: int, c: int) -> bool:
        return (r + c) % 2 == (1 + self.width) % 2

    def removing_index(self, r: int, c: int) -> int:
        i, rem = divmod(c - r + self.k + 1, 2)
        if rem or not self.is_red(r, c) or not 1 <= i <= self.n:
            raise ValueError(f"square {(r, c)} is on no removing diagonal")
        return i

    def adding_index(self, r: int, c: int) -> int:
        i, rem = divmod(c - r + self.k, 2)
        if rem or self.is_red(r, c) or not 1 <= i <= self.n - 1:
            raise ValueError(f"square {(r, c)} is on no adding diagonal")
        return i

    def adding_label(self, r: int, c: int) -> int:
        """Edge color contributed by a white square: relabeled on full boards."""
        i = self.adding_index(r, c)
        return 2 * self.n - i if self.kind == "full" else i

    def valid(self, tau) -> bool:
        tau = tuple(tau)
        if self.kind == "ballot":
            return is_ballot(tau, self.k, self.n)
        if self.kind == "staircase":
            return is_staircase(tau, self.k, self.n)
        return is_box_partition(tau, self.k, self.width)

    def partitions(self):
        return [tau for tau in enumerate_box_partitions(self.k, self.width)
                if self.valid(tau)]

    def render_ascii(self) -> str:
        """The board, one cell per square: R/W checkering plus diagonal label."""
        lines = []
        for r in range(1, self.k + 1):
            cells = []
            for c in range(1, self.width + 1):
                if not self.has_square(r, c):
                    cells.append("    ")
                elif self.is_red(r, c):
                    cells.append(f"R{self.removing_index(r, c):<3}")
                else:
                    cells.append(f"W{self.adding_label(r, c):<3}")
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)


class Move:
    """One legal directed move: tiles touched, edge color, and the outcome."""

    __slots__ = ("kind", "squares", "color", "source", "result")

    def __init__(self, kind, squares, color, source, result):
        self.kind = kind          # "R" (tile removed) or "A" (tile added)
        self.squares = tuple(sorted(squares))
        self.color = color
        self.source = tuple(source)
        self.result = tuple(result)

    def __repr__(self):
        verb = "remove" if self.kind == "R" else "add"
        return (f"Move({verb} {list(self.squares)} color {self.color}: "
                f"{self.source} -> {self.result})")


def legal_moves(board: Board, tau):
    """All directed moves out of a partition, in a fixed deterministic order.

    Removals go forward when their tiles sit red-west (horizontal),
    red-south (vertical), or are the red corner singleton; additions go
    forward when their tiles sit red-east (horizontal) or red-north
    (vertical).  The mirror-image placements are exactly the reversals of
    these and appear as forward moves of the partner partition instead.
    """
    tau = tuple(tau)
    if not board.valid(tau):
        raise ValueError(f"{tau} is not a {board.kind} partition here")
    k, width = board.k, board.width
    moves = []

    def parts_with(updates):
        out = list(tau)
        for r, delta in updates:
            out[r - 1] += delta
        return tuple(out)

    for r in range(1, k + 1):
        cur = tau[r - 1]
        # horizontal domino removal: the two rightmost boxes of row r; the
        # west square must be red (else this shape is an addition's mirror)
        if cur >= 2:
            result = parts_with([(r, -2)])
            if board.valid(result) and board.is_red(r, cur - 1):
                moves.append(Move("R", [(r, cur - 1), (r, cur)],
                                  board.removing_index(r, cur - 1), tau, result))
        # horizontal domino addition just past row r; west square white
        result = parts_with([(r, +2)])
        if board.valid(result) and not board.is_red(r, cur + 1):
            moves.append(Move("A", [(r, cur + 1), (r, cur + 2)],
                              board.adding_label(r, cur + 1), tau, result))
        if r < k and tau[r - 1] == tau[r]:
            # vertical domino removal off rows r, r+1; south square red
            if cur >= 1:
                result = parts_with([(r, -1), (r + 1, -1)])
                if board.valid(result) and board.is_red(r + 1, cur):
                    moves.append(Move("R", [(r, cur), (r + 1, cur)],
                                      board.removing_index(r + 1, cur), tau, result))
            # vertical domino addition onto rows r, r+1; north square red
            result = parts_with([(r, +1), (r + 1, +1)])
            if board.valid(result) and board.is_red(r, cur + 1):
                moves.append(Move("A", [(r, cur + 1), (r + 1, cur + 1)],
                                  board.adding_label(r + 1, cur + 1), tau, result))
    # the corner singleton, removal only
    if tau[0] == width:
        result = parts_with([(1, -1)])
        if board.valid(result):
            moves.append(Move("R", [board.singleton],
                              board.removing_index(1, width), tau, result))
    for mv in moves:
        if not all(board.has_square(r, c) for (r, c) in mv.squares):
            raise AssertionError(f"move uses off-board squares: {mv}")
    return moves


@lru_cache(maxsize=None)
def _digraph_and_moves(kind: str, k: int, n: int):
    board = Board(kind, k, n)
    verts = board.partitions()
    table = {}
    edges = []
    for tau in verts:
        for mv in legal_moves(board, tau):
            edges.append((mv.source, mv.result, mv.color))
            table[(mv.source, mv.result)] = mv
    return ColoredDigraph(verts, edges), table


def domino_digraph(kind: str, k: int, n: int) -> ColoredDigraph:
    """The directed move graph on all partitions of the board's kind."""
    return _digraph_and_moves(kind, k, n)[0]


def domino_moves(kind: str, k: int, n: int) -> dict:
    """Map (source, result) -> Move for every edge of the move graph."""
    return _digraph_and_moves(kind, k, n)[1]


# --------------------------------------------------------------------------
# lattices

@lru_cache(maxsize=None)
def a_lattice(k: int, m: int) -> DiamondLattice:
    """The distributive lattice of partitions in a k x m box.

    Covers add one box; the cover adding a box in row q, column t, wears
    color q - t + m.  Note the second parameter is the box width m (which
    equals 2n-k when the lattice is paired with a (k, n) board family).
    """
    if k < 1 or m < 1:
        raise ValueError("box dimensions must be positive")
    verts = enumerate_box_partitions(k, m)
    have = set(verts)
    edges = []
    for tau in verts:
        for q in range(1, k + 1):
            up = tau[:q - 1] + (tau[q - 1] + 1,) + tau[q:]
            if up in have:
                edges.append((tau, up, q - up[q - 1] + m))
    lat = DiamondLattice(
        ColoredDigraph(verts, edges), "distributive",
        coord_join=lambda a, b: tuple(map(max, a, b)),
        coord_meet=lambda a, b: tuple(map(min, a, b)))
    return attach_birkhoff_coords(lat)


def sigma(i: int, n: int) -> int:
    """Fold the color range 1..2n-1 onto 1..n: identity below n, 2n-i above."""
    if not 1 <= i <= 2 * n - 1:
        raise ValueError(f"color {i} outside 1..{2 * n - 1}")
    return i if i <= n else 2 * n - i


def recolor_sigma(lat: DiamondLattice) -> DiamondLattice:
    """Fold a box lattice's colors; the rank 2n is read off the color span."""
    top = max(lat.diagram.colors())
    if top % 2 == 0:
        raise ValueError("color span is even; no central rank to fold around")
    n = (top + 1) // 2
    g = lat.diagram.recolor(lambda c: sigma(c, n))
    return DiamondLattice(g, lat.kind, coord_join=lat.coord_join,
                          coord_meet=lat.coord_meet)


def _induced_lattice(k: int, n: int, admissible) -> DiamondLattice:
    base = recolor_sigma(a_lattice(k, 2 * n - k))
    keep = [v for v in base.vertices if admissible(v, k, n)]
    kept = set(keep)
    edges = [(u, v, c) for (u, v, c) in base.diagram.edges
             if u in kept and v in kept]
    try:
        lat = DiamondLattice(
            ColoredDigraph(keep, edges), "distributive",
            coord_join=lambda a, b: tuple(map(max, a, b)),
            coord_meet=lambda a, b: tuple(map(min, a, b)))
    except (LatticeError, ValueError) as err:
        raise StructureViolationError(
            f"induced subgraph is not a ranked lattice diagram: {err}") from None
    # The diagram's reachability order must agree with the inherited
    # component-wise order: that makes every inherited edge a cover and
    # every cover an inherited edge.
    for u in keep:
        for v in keep:
            if lat.le(u, v) != all(a <= b for a, b in zip(u, v)):
                raise StructureViolationError(
                    f"order mismatch between {u} and {v}")
    try:
        lat.check_lattice()
    except LatticeError as err:
        raise StructureViolationError(str(err)) from None
    if lat.length != k * (2 * n - k):
        raise StructureViolationError(
            f"length {lat.length}, expected {k * (2 * n - k)}")
    return attach_birkhoff_coords(lat)


@lru_cache(maxsize=None)
def kn_lattice(k: int, n: int) -> DiamondLattice:
    """The sublattice of the folded box lattice on the first admissible family."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    return _induced_lattice(k, n, kn_admissible)


@lru_cache(maxsize=None)
def dec_lattice(k: int, n: int) -> DiamondLattice:
    """The sublattice of the folded box lattice on the second admissible family."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    return _induced_lattice(k, n, dec_admissible)


# --------------------------------------------------------------------------
# solving

class DominoSolution:
    """An optimal play: partitions visited and the physical tile actions."""

    __slots__ = ("kind", "k", "n", "start", "target", "states", "actions",
                 "distance", "color_counts", "certificate")

    def __init__(self, kind, k, n, states, actions, color_counts, certificate):
        self.kind = kind
        self.k = k
        self.n = n
        self.states = tuple(states)
        self.start = self.states[0]
        self.target = self.states[-1]
        self.actions = tuple(actions)   # (verb, squares, color) per step
        self.distance = len(actions)
        self.color_counts = dict(color_counts)
        self.certificate = certificate

    def __repr__(self):
        return (f"DominoSolution({self.kind} {self.k},{self.n}: "
                f"{self.start} -> {self.target}, {self.distance} moves)")

    def serialize(self) -> str:
        def fmt(tau):
            return ",".join(str(p) for p in tau)

        lines = [f"distance={self.distance}"]
        for (a, (verb, squares, color), b) in zip(
                self.states, self.actions, self.states[1:]):
            at = " ".join(f"({r},{c})" for (r, c) in squares)
            lines.append(f"{fmt(a)} --{color}--> {fmt(b)}  [{verb} {at}]")
        return "\n".join(lines)


def solve_domino(kind: str, k: int, n: int, start, target,
                 via: str = "join") -> DominoSolution:
    """Optimal play between two partitions of a board's kind.

    Both endpoints are rewritten into the matching sublattice of the box
    lattice, a mountain or valley geodesic is built there, and each lattice
    step is translated back into a physical tile action (the reverse of a
    directed move when the geodesic runs against the arrow).
    """
    board = Board(kind, k, n)
    start, target = tuple(start), tuple(target)
    for tau in (start, target):
        if not board.valid(tau):
            raise ValueError(f"{tau} is not a {kind} partition for "
                             f"k={k}, n={n}")
    if kind == "ballot":
        lat = dec_lattice(k, n)
    elif kind == "staircase":
        lat = kn_lattice(k, n)
    else:
        lat = a_lattice(k, 2 * n - k)
    enc_s, enc_t = l_map(start, k, n), l_map(target, k, n)
    cert = shortest_path(lat, enc_s, enc_t, via=via)
    states = [l_inv(v, k, n) for v in cert.vertices]
    table = domino_moves(kind, k, n)
    actions = []
    for (a, b), (color, _) in zip(zip(states, states[1:]), cert.steps):
        if (a, b) in table:
            mv = table[(a, b)]
            verb = "remove" if mv.kind == "R" else "add"
        elif (b, a) in table:
            mv = table[(b, a)]
            verb = "add" if mv.kind == "R" else "remove"
        else:
            raise AssertionError(f"no move joins {a} and {b}")
        if mv.color != color:
            raise AssertionError("edge color disagrees between board and lattice")
        actions.append((verb, mv.squares, mv.color))
    sol = DominoSolution(kind, k, n, states, actions,
                         color_counts(lat, enc_s, enc_t), cert)
    replay_domino(board, sol)
    return sol


def replay_domino(board: Board, sol: DominoSolution) -> None:
    """Re-run a solution under the raw tile rules; raise if any step cheats."""
    cur = sol.start
    for step, ((verb, squares, _color), nxt) in enumerate(
            zip(sol.actions, sol.states[1:])):
        cells = {(r, c) for r in range(1, board.k + 1)
                 for c in range(1, cur[r - 1] + 1)}
        sq = set(squares)
        if len(sq) == 1:
            if squares != (board.singleton,):
                raise AssertionError(f"step {step}: singleton is not the corner")
        elif len(sq) == 2:
            (r1, c1), (r2, c2) = sorted(sq)
            if not ((r1 == r2 and c2 == c1 + 1) or (c1 == c2 and r2 == r1 + 1)):
                raise AssertionError(f"step {step}: tiles are not a domino")
        else:
            raise AssertionError(f"step {step}: bad tile count")
        if not all(board.has_square(r, c) for (r, c) in sq):
            raise AssertionError(f"step {step}: tile leaves the board")
        if verb == "remove":
            if not sq <= cells:
                raise AssertionError(f"step {step}: removing absent squares")
            after = cells - sq
        else:
            if sq & cells:
                raise AssertionError(f"step {step}: adding occupied squares")
            after = cells | sq
        shape = tuple(sum(1 for (r, c) in after if r == row)
                      for row in range(1, board.k + 1))
        if set((r, c) for r in range(1, board.k + 1)
               for c in range(1, shape[r - 1] + 1)) != after:
            raise AssertionError(f"step {step}: result is not left-justified")
        if not board.valid(shape) or shape != nxt:
            raise AssertionError(f"step {step}: illegal or mismatched result")
        cur = nxt
    if cur != sol.target:
        raise AssertionError("replay did not reach the target")
