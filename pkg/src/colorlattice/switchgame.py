"""The switch game on binary strings and the cushioned-tuple lattice behind it.

Positions of the game are 0/1 sequences of a fixed length n > 1.  A switch
may flip one bit, but only when its neighborhood permits: the leftmost bit
needs a 1 to its right, the rightmost bit toggles freely-ish (two one-sided
rules), and an interior bit needs specific patterns on both sides.  Each
legal flip is directed and carries the index of the flipped bit as its
color, giving a colored digraph on all 2^n positions.

Under a bijection with "zero-cushioned" weakly decreasing integer tuples,
this digraph is revealed to be the order diagram of a distributive lattice,
so the optimal-play machinery of `colorlattice.paths` applies verbatim:
distances come from ranks, and explicit optimal move sequences come from
mountain or valley certificates translated back into bit flips.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .core import ColoredDigraph, DiamondLattice, attach_birkhoff_coords
from .paths import PathCertificate, lattice_distance, shortest_path

__all__ = [
    "is_cushioned",
    "all_cushioned",
    "z_lattice",
    "switch_moves",
    "mixedmiddleswitch_digraph",
    "interval_family",
    "change_intervals",
    "b_map",
    "b_inv",
    "parse_bits",
    "format_bits",
    "parse_tuple",
    "format_tuple",
    "SwitchSolution",
    "solve_mixedmiddleswitch",
    "replay_switches",
]


def is_cushioned(x, n=None) -> bool:
    """Whether ``x`` is a valid cushioned tuple (of length ``n`` if given).

    Valid means: n >= x_1 >= ... >= x_n >= 0, strictly decreasing while the
    entries are nonzero.  Equivalently, the nonzero entries list a subset of
    {1, ..., n} in decreasing order and the zeros pad the tail.
    """
    x = tuple(x)
    if n is None:
        n = len(x)
    if len(x) != n or n < 2:
        return False
    if any(not isinstance(e, int) or isinstance(e, bool) for e in x):
        return False
    if not all(n >= e >= 0 for e in x):
        return False
    for i in range(n - 1):
        if x[i] != 0 and x[i] <= x[i + 1]:
            return False
        if x[i] == 0 and x[i + 1] != 0:
            return False
    return True


def all_cushioned(n: int):
    """All cushioned tuples of length n, sorted; there are exactly 2^n."""
    if n < 2:
        raise ValueError("the game is played at n >= 2")
    out = []
    for k in range(n + 1):
        for sub in combinations(range(1, n + 1), k):
            out.append(tuple(sorted(sub, reverse=True)) + (0,) * (n - k))
    out.sort()
    return out


@lru_cache(maxsize=None)
def z_lattice(n: int) -> DiamondLattice:
    """The distributive lattice of cushioned tuples under component-wise order.

    Covers raise exactly one coordinate by 1; the edge raising coordinate k
    to the new value t_k wears color n + 1 - t_k.  Joins and meets are
    component-wise max and min, and Birkhoff coordinates are attached so
    explicit optimal paths can be built.
    """
    verts = all_cushioned(n)
    have = set(verts)
    edges = []
    for x in verts:
        for k in range(n):
            y = x[:k] + (x[k] + 1,) + x[k + 1:]
            if y in have:
                edges.append((x, y, n + 1 - y[k]))
    lat = DiamondLattice(
        ColoredDigraph(verts, edges), "distributive",
        coord_join=lambda a, b: tuple(map(max, a, b)),
        coord_meet=lambda a, b: tuple(map(min, a, b)))
    return attach_birkhoff_coords(lat)


def switch_moves(s):
    """The legal flips from position s, as (index, result) pairs, 1-indexed.

    The five rules, writing s_i for the bit at 1-indexed position i:
      * interior i (1 < i < n): flip 0->1 when (s_{i-1}, s_i, s_{i+1}) = (0,0,1),
        flip 1->0 when it is (1,1,0);
      * i = 1: flip 0->1 when (s_1, s_2) = (0,1);
      * i = n: flip 0->1 when (s_{n-1}, s_n) = (0,0), 1->0 when it is (1,1).
    Each legal toggle of the (symmetric) game appears here in exactly one
    direction; the reversals are the same toggles played backwards.
    """
    s = tuple(s)
    n = len(s)
    if n < 2 or any(b not in (0, 1) for b in s):
        raise ValueError("positions are 0/1 tuples of length >= 2")

    def flipped(i):
        return s[:i - 1] + (1 - s[i - 1],) + s[i:]

    moves = []
    if (s[0], s[1]) == (0, 1):
        moves.append((1, flipped(1)))
    for i in range(2, n):
        window = (s[i - 2], s[i - 1], s[i])
        if window in ((0, 0, 1), (1, 1, 0)):
            moves.append((i, flipped(i)))
    if (s[n - 2], s[n - 1]) in ((0, 0), (1, 1)):
        moves.append((n, flipped(n)))
    return moves


def mixedmiddleswitch_digraph(n: int) -> ColoredDigraph:
    """The full game graph on all 2^n positions, edges colored by flip index."""
    if n < 2:
        raise ValueError("the game is played at n >= 2")
    verts = [int_to_bits(v, n) for v in range(2 ** n)]
    edges = []
    for s in verts:
        for i, t in switch_moves(s):
            edges.append((s, t, i))
    return ColoredDigraph(verts, edges)


def int_to_bits(value: int, n: int):
    """The length-n big-endian bit tuple of a nonnegative integer."""
    return tuple((value >> (n - 1 - j)) & 1 for j in range(n))


def interval_family(x):
    """The index intervals (I_0, ..., I_n) that a cushioned tuple carves out.

    With x_0 := n and x_{n+1} := 0, interval I_i is
    [n + 1 - x_i, n - x_{i+1}] — empty when that reads backwards.  The
    nonempty ones partition {1, ..., n}; the parity of i paints the bits.
    """
    x = tuple(x)
    n = len(x)
    if not is_cushioned(x, n):
        raise ValueError(f"not a cushioned tuple: {x}")
    padded = (n,) + x + (0,)
    fam = []
    for i in range(n + 1):
        lo, hi = n + 1 - padded[i], n - padded[i + 1]
        fam.append((lo, hi) if lo <= hi else None)
    return tuple(fam)


def change_intervals(y):
    """The run intervals (J_0, ..., J_n) of a bit sequence.

    j_1 < ... < j_k are the positions where the bit differs from its left
    neighbor (reading y_0 := 0); with j_0 := 1 and j_{k+1} := n + 1, the
    interval J_i is [j_i, j_{i+1} - 1] for i <= k and empty above.  Runs of
    equal bits, in other words, and run i has bit parity i mod 2.
    """
    y = tuple(y)
    n = len(y)
    if n < 2 or any(b not in (0, 1) for b in y):
        raise ValueError("expected a 0/1 tuple of length >= 2")
    changes = [j for j in range(1, n + 1) if (y[j - 2] if j > 1 else 0) != y[j - 1]]
    marks = [1] + changes + [n + 1]
    fam = []
    for i in range(n + 1):
        if i < len(marks) - 1:
            lo, hi = marks[i], marks[i + 1] - 1
            fam.append((lo, hi) if lo <= hi else None)
        else:
            fam.append(None)
    return tuple(fam)


def b_map(x):
    """Encode a cushioned tuple as a bit sequence.

    Bit j gets the parity of the interval of `interval_family(x)` containing
    j.  This is one direction of the color-preserving isomorphism between
    the cushioned-tuple lattice and the game graph.
    """
    x = tuple(x)
    n = len(x)
    y = [0] * n
    for i, iv in enumerate(interval_family(x)):
        if iv is None:
            continue
        for j in range(iv[0], iv[1] + 1):
            y[j - 1] = i % 2
    return tuple(y)


def b_inv(y):
    """Decode a bit sequence back into its cushioned tuple.

    The positions where the sequence changes value (reading a leading 0),
    listed increasingly as j_1 < ... < j_k, become x_i = n + 1 - j_i, padded
    with zeros.  Inverse to `b_map`.
    """
    y = tuple(y)
    n = len(y)
    if n < 2 or any(b not in (0, 1) for b in y):
        raise ValueError("expected a 0/1 tuple of length >= 2")
    changes = [j for j in range(1, n + 1) if (y[j - 2] if j > 1 else 0) != y[j - 1]]
    x = tuple(n + 1 - j for j in changes) + (0,) * (n - len(changes))
    return x


def parse_bits(text: str):
    """Parse a compact bit string like ``01010`` into a bit tuple."""
    text = text.strip()
    if not text or any(c not in "01" for c in text):
        raise ValueError(f"not a bit string: {text!r}")
    return tuple(int(c) for c in text)


def format_bits(y) -> str:
    return "".join(str(b) for b in y)


def parse_tuple(text: str):
    """Parse comma-separated integers like ``4,3,2,1,0`` into a tuple."""
    try:
        return tuple(int(part) for part in text.strip().split(","))
    except ValueError:
        raise ValueError(f"not a comma-separated integer tuple: {text!r}") from None


def format_tuple(x) -> str:
    return ",".join(str(e) for e in x)


class SwitchSolution:
    """An optimal play: positions visited and the flip indices between them."""

    __slots__ = ("start", "target", "distance", "positions", "flips", "certificate")

    def __init__(self, start, target, positions, flips, certificate):
        self.start = start
        self.target = target
        self.positions = tuple(positions)
        self.flips = tuple(flips)
        self.distance = len(flips)
        self.certificate = certificate

    def __repr__(self):
        return (f"SwitchSolution({format_bits(self.start)} -> "
                f"{format_bits(self.target)}, {self.distance} moves)")

    def serialize(self) -> str:
        lines = [f"distance={self.distance}"]
        for (a, i, b) in zip(self.positions, self.flips, self.positions[1:]):
            lines.append(f"{format_bits(a)} --{i}--> {format_bits(b)}")
        return "\n".join(lines)


def solve_mixedmiddleswitch(n: int, s, t, via: str = "join") -> SwitchSolution:
    """Optimal play from position s to position t, with proof of optimality.

    Decodes both positions into the cushioned-tuple lattice, builds a
    mountain (or valley) geodesic there, and re-encodes each step as a bit
    flip.  The reported distance equals the rank formula value; the flip
    sequence is replayable move by move under the game rules.
    """
    s, t = tuple(s), tuple(t)
    if len(s) != n or len(t) != n:
        raise ValueError(f"positions must have length {n}")
    lat = z_lattice(n)
    xs, xt = b_inv(s), b_inv(t)
    cert = shortest_path(lat, xs, xt, via=via)
    positions = [b_map(v) for v in cert.vertices]
    flips = []
    for a, b in zip(positions, positions[1:]):
        diff = [j for j in range(n) if a[j] != b[j]]
        if len(diff) != 1:
            raise AssertionError("geodesic step changed more than one bit")
        flips.append(diff[0] + 1)
    for (color, _), flip in zip(cert.steps, flips):
        if color != flip:
            raise AssertionError("edge color disagrees with flipped index")
    sol = SwitchSolution(s, t, positions, flips, cert)
    replay_switches(sol)
    return sol


def replay_switches(sol: SwitchSolution) -> None:
    """Re-run a solution under the raw game rules; raise if any move is illegal.

    The game rules are symmetric: a switch may be toggled either way whenever
    its neighborhood condition holds (an interior switch needs differing
    neighbors, switch 1 needs switch 2 on, switch n toggles freely).  The
    directed clauses of switch_moves orient each such toggle once.
    """
    pos = sol.start
    n = len(pos)
    for step, (i, nxt) in enumerate(zip(sol.flips, sol.positions[1:])):
        if i == 1:
            allowed = pos[1] == 1
        elif i == n:
            allowed = True
        else:
            allowed = pos[i - 2] != pos[i]
        if not allowed:
            raise AssertionError(f"move {step}: flip {i} illegal at {format_bits(pos)}")
        landed = pos[:i - 1] + (1 - pos[i - 1],) + pos[i:]
        if landed != nxt:
            raise AssertionError(f"move {step}: flip {i} lands on "
                                 f"{format_bits(landed)}, not {format_bits(nxt)}")
        pos = nxt
    if pos != sol.target:
        raise AssertionError("replay did not reach the target position")
    if sol.distance != len(sol.flips):
        raise AssertionError("reported distance disagrees with move count")
