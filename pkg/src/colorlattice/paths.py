"""Optimal move counts and explicit shortest paths on diamond-colored lattices.

The distance between two vertices of a topographically balanced lattice is
determined by ranks alone:

    dist(s, t) = 2*rank(s v t) - rank(s) - rank(t)
               = rank(s) + rank(t) - 2*rank(s ^ t)

Both evaluations are always computed and compared.  On distributive lattices
with order-ideal coordinates the per-color step counts of *every* geodesic
coincide, and mountain/valley certificates are constructed element by element
from the ideals.
"""

from __future__ import annotations

from collections import Counter, deque

from .core import (
    CapExceededError,
    DiamondLattice,
    LatticeError,
    canonical_key,
    render_vertex,
)

__all__ = [
    "PathCertificate",
    "lattice_distance",
    "color_count_min",
    "color_counts",
    "shortest_path",
    "gods_number",
    "all_shortest_paths",
]


class PathCertificate:
    """A replayable walk in a lattice diagram.

    ``steps`` is a tuple of (color, direction) pairs, direction +1 when the
    step follows a diagram edge upward and -1 when it traverses one downward.
    ``orientation`` is "mountain" (rise then fall, apex = join of the ends),
    "valley" (fall then rise, nadir = meet), or "mixed" for a geodesic that
    is neither; ``turning_point`` holds the apex or nadir when applicable.
    """

    __slots__ = ("vertices", "orientation", "turning_point", "steps")

    def __init__(self, vertices, orientation, turning_point, steps):
        self.vertices = tuple(vertices)
        self.orientation = orientation
        self.turning_point = turning_point
        self.steps = tuple(steps)
        if orientation not in ("mountain", "valley", "mixed"):
            raise ValueError(f"bad orientation {orientation!r}")
        if len(self.steps) != len(self.vertices) - 1:
            raise ValueError("step count does not match vertex count")

    @property
    def distance(self) -> int:
        return len(self.steps)

    def color_multiset(self) -> Counter:
        return Counter(c for (c, _) in self.steps)

    def validate(self, lat: DiamondLattice) -> None:
        """Check every step is a diagram edge and the profile matches the
        declared orientation; raises LatticeError on any defect."""
        g = lat.diagram
        for i in range(len(self.steps)):
            u, v = self.vertices[i], self.vertices[i + 1]
            color, direction = self.steps[i]
            if direction == +1:
                c = g.edge_color(u, v)
            else:
                c = g.edge_color(v, u)
            if c is None or c != color:
                raise LatticeError(
                    f"step {i}: {render_vertex(u)} to {render_vertex(v)} "
                    f"is not a color-{color} edge")
        ranks = [lat.rank[v] for v in self.vertices]
        if self.orientation == "mountain":
            peak = max(ranks)
            k = ranks.index(peak)
            if ranks[:k + 1] != sorted(ranks[:k + 1]) or \
               ranks[k:] != sorted(ranks[k:], reverse=True):
                raise LatticeError("mountain certificate does not rise then fall")
            if self.vertices[k] != self.turning_point:
                raise LatticeError("apex is not the declared turning point")
            if self.turning_point != lat.join(self.vertices[0], self.vertices[-1]):
                raise LatticeError("apex differs from the join of the endpoints")
        elif self.orientation == "valley":
            low = min(ranks)
            k = ranks.index(low)
            if ranks[:k + 1] != sorted(ranks[:k + 1], reverse=True) or \
               ranks[k:] != sorted(ranks[k:]):
                raise LatticeError("valley certificate does not fall then rise")
            if self.vertices[k] != self.turning_point:
                raise LatticeError("nadir is not the declared turning point")
            if self.turning_point != lat.meet(self.vertices[0], self.vertices[-1]):
                raise LatticeError("nadir differs from the meet of the endpoints")

    def serialize(self) -> str:
        """Line-oriented text form: a header, then one step per line."""
        head = f"distance={self.distance} orientation={self.orientation}"
        if self.turning_point is not None:
            word = "apex" if self.orientation == "mountain" else "nadir"
            head += f" {word}={render_vertex(self.turning_point)}"
        lines = [head]
        for i, (color, direction) in enumerate(self.steps):
            u = render_vertex(self.vertices[i])
            v = render_vertex(self.vertices[i + 1])
            arrow = f"--{color}-->" if direction == +1 else f"<--{color}--"
            lines.append(f"{u} {arrow} {v}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return (f"PathCertificate({self.orientation}, distance {self.distance}, "
                f"{render_vertex(self.vertices[0])} to {render_vertex(self.vertices[-1])})")


def lattice_distance(lat: DiamondLattice, s, t) -> int:
    """Minimal number of moves between s and t, by the rank formula.

    Evaluated through the join and through the meet; the two numbers are
    required to agree (they do on every topographically balanced lattice).
    """
    rs, rt = lat.rank[s], lat.rank[t]
    via_join = 2 * lat.rank[lat.join(s, t)] - rs - rt
    via_meet = rs + rt - 2 * lat.rank[lat.meet(s, t)]
    if via_join != via_meet:
        raise LatticeError(
            f"rank formulas disagree on ({render_vertex(s)}, {render_vertex(t)}): "
            f"{via_join} via join, {via_meet} via meet")
    return via_join


def color_count_min(lat: DiamondLattice, s, t, color: int) -> int:
    """Number of color-`color` steps that *every* geodesic from s to t uses.

    Requires ideal coordinates: counts the elements of the given color in
    (s u t) \\ s and in (s u t) \\ t; the meet-based evaluation (counting in
    s \\ (s n t) and t \\ (s n t)) is computed too and checked to agree.
    """
    if lat.ideal_coords is None:
        raise ValueError("per-color counts require a distributive lattice with ideal coordinates")
    cs, ct = lat.ideal_coords[s], lat.ideal_coords[t]
    union, inter = cs | ct, cs & ct
    col = lat.poset.color
    up = sum(1 for e in union - cs if col(e) == color) + \
        sum(1 for e in union - ct if col(e) == color)
    down = sum(1 for e in cs - inter if col(e) == color) + \
        sum(1 for e in ct - inter if col(e) == color)
    if up != down:
        raise LatticeError("join-based and meet-based color counts disagree")
    return up


def color_counts(lat: DiamondLattice, s, t) -> dict:
    """Per-color geodesic step counts for every color of the lattice."""
    return {c: color_count_min(lat, s, t, c) for c in lat.diagram.colors()}


def _ascend(lat, x_ideal, target_ideal, vertices, steps):
    """Extend a path upward from ideal x to a target ideal one element at a time."""
    p = lat.poset
    while x_ideal != target_ideal:
        gap = target_ideal - x_ideal
        u = min(p.minimal_of(gap), key=canonical_key)
        x_ideal = x_ideal | {u}
        vertices.append(lat.vertex_of_ideal(x_ideal))
        steps.append((p.color(u), +1))
    return x_ideal


def _descend(lat, x_ideal, target_ideal, vertices, steps):
    p = lat.poset
    while x_ideal != target_ideal:
        gap = x_ideal - target_ideal
        u = min(p.maximal_of(gap), key=canonical_key)
        x_ideal = x_ideal - {u}
        vertices.append(lat.vertex_of_ideal(x_ideal))
        steps.append((p.color(u), -1))
    return x_ideal


def shortest_path(lat: DiamondLattice, s, t, via: str = "join") -> PathCertificate:
    """An optimal mountain (via="join") or valley (via="meet") certificate.

    Mountain paths add, one at a time, a minimal missing element of the
    ideal of s v t until the apex is reached, then remove maximal elements
    not lying in t.  Ties are broken by the canonical element order, so the
    certificate is reproducible.
    """
    if lat.ideal_coords is None:
        raise ValueError("explicit path construction requires ideal coordinates")
    if via not in ("join", "meet"):
        raise ValueError("via must be 'join' or 'meet'")
    cs, ct = lat.ideal_coords[s], lat.ideal_coords[t]
    vertices = [s]
    steps = []
    if via == "join":
        apex = cs | ct
        x = _ascend(lat, cs, apex, vertices, steps)
        _descend(lat, x, ct, vertices, steps)
        cert = PathCertificate(vertices, "mountain", lat.vertex_of_ideal(apex), steps)
    else:
        nadir = cs & ct
        x = _descend(lat, cs, nadir, vertices, steps)
        _ascend(lat, x, ct, vertices, steps)
        cert = PathCertificate(vertices, "valley", lat.vertex_of_ideal(nadir), steps)
    expected = lattice_distance(lat, s, t)
    if cert.distance != expected:
        raise LatticeError(
            f"constructed path has {cert.distance} steps, distance is {expected}")
    return cert


def gods_number(lat: DiamondLattice, sweep_limit: int = 200) -> int:
    """The maximum optimal move count over all vertex pairs: the length of L.

    On lattices with at most ``sweep_limit`` vertices the claim is re-checked
    by an exhaustive pairwise sweep before being returned.
    """
    value = lat.length
    if len(lat) <= sweep_limit:
        worst = 0
        verts = lat.vertices
        for i in range(len(verts)):
            for j in range(i + 1, len(verts)):
                worst = max(worst, lattice_distance(lat, verts[i], verts[j]))
        if worst != value and len(lat) > 1:
            raise LatticeError(
                f"pairwise sweep found diameter {worst}, length is {value}")
    return value


def _classify(lat, vertices, steps):
    ranks = [lat.rank[v] for v in vertices]
    k_hi = ranks.index(max(ranks))
    if ranks[:k_hi + 1] == sorted(ranks[:k_hi + 1]) and \
       ranks[k_hi:] == sorted(ranks[k_hi:], reverse=True) and \
       vertices[k_hi] == lat.join(vertices[0], vertices[-1]):
        return PathCertificate(vertices, "mountain", vertices[k_hi], steps)
    k_lo = ranks.index(min(ranks))
    if ranks[:k_lo + 1] == sorted(ranks[:k_lo + 1], reverse=True) and \
       ranks[k_lo:] == sorted(ranks[k_lo:]) and \
       vertices[k_lo] == lat.meet(vertices[0], vertices[-1]):
        return PathCertificate(vertices, "valley", vertices[k_lo], steps)
    return PathCertificate(vertices, "mixed", None, steps)


def all_shortest_paths(lat: DiamondLattice, s, t, cap: int = 12):
    """Every geodesic between s and t in the undirected diagram.

    Purely graph-theoretic (no rank formulas): used as the oracle certifying
    that geodesics all share one per-color step multiset.  Refuses distances
    above ``cap`` to keep the enumeration finite in practice.
    """
    g = lat.diagram

    def levels(root):
        d = {root: 0}
        q = deque([root])
        while q:
            v = q.popleft()
            for (w, _, _) in g.undirected_neighbors(v):
                if w not in d:
                    d[w] = d[v] + 1
                    q.append(w)
        return d

    ds, dt = levels(s), levels(t)
    dist = dt[s]
    if dist > cap:
        raise CapExceededError(f"distance {dist} exceeds enumeration cap {cap}")
    paths = []

    def walk(v, vertices, steps):
        if v == t:
            paths.append(_classify(lat, list(vertices), list(steps)))
            return
        for (w, c, direction) in g.undirected_neighbors(v):
            if ds.get(w) == ds[v] + 1 and dt.get(w) == dt[v] - 1:
                vertices.append(w)
                steps.append((c, direction))
                walk(w, vertices, steps)
                vertices.pop()
                steps.pop()

    walk(s, [s], [])
    paths.sort(key=lambda p: tuple(canonical_key(v) for v in p.vertices))
    return paths
