"""Edge-colored digraphs, vertex-colored posets, and their order-ideal lattices.

Everything downstream (puzzle solvers, weight machinery, the concrete lattice
families) is built on three carriers defined here:

* :class:`ColoredDigraph` — a finite simple directed graph whose edges carry
  positive integer colors.  Order diagrams of all lattice families are stored
  in this form.
* :class:`VertexColoredPoset` — a finite poset given by its covering pairs,
  with a color attached to every element.
* :class:`DiamondLattice` — a ranked lattice wrapped around a colored order
  diagram, optionally equipped with order-ideal coordinates so that joins,
  meets and explicit geodesics can be computed set-theoretically.

All values are immutable after construction; every function here is pure.
"""

from __future__ import annotations

from collections import deque

__all__ = [
    "NotRankedError",
    "UnreachableError",
    "LatticeError",
    "CapExceededError",
    "ColoredDigraph",
    "VertexColoredPoset",
    "DiamondLattice",
    "canonical_key",
    "render_vertex",
    "rank_function",
    "is_diamond_colored",
    "is_topographically_balanced",
    "bfs_distance",
    "ideals_lattice",
    "join_irreducibles",
    "attach_birkhoff_coords",
    "to_dot",
]


class NotRankedError(ValueError):
    """The digraph admits no rank function raising every edge by exactly 1."""


class UnreachableError(ValueError):
    """Two vertices lie in different weak components."""


class LatticeError(ValueError):
    """A structure that was promised to be a lattice is not one."""


class CapExceededError(RuntimeError):
    """An enumeration or closure grew past its configured size cap."""


def canonical_key(v):
    """Total order on vertex payloads, used for every deterministic ordering.

    Handles the payload shapes that actually occur — integers, strings,
    tuples, and frozensets (order ideals) — recursively, tagging each value
    with a type marker so mixed payloads sort without raising.
    """
    if isinstance(v, (set, frozenset)):
        return ("set", tuple(sorted(canonical_key(x) for x in v)))
    if isinstance(v, tuple):
        return ("tup", tuple(canonical_key(x) for x in v))
    if isinstance(v, bool):
        return ("int", int(v))
    if isinstance(v, int):
        return ("int", v)
    return (type(v).__name__, str(v))


def render_vertex(v) -> str:
    """Compact, stable text form of a vertex payload (used by DOT and the CLI)."""
    if isinstance(v, (set, frozenset)):
        inner = ",".join(render_vertex(x) for x in sorted(v, key=canonical_key))
        return "{" + inner + "}"
    if isinstance(v, tuple):
        return ",".join(render_vertex(x) for x in v)
    return str(v)


class ColoredDigraph:
    """A finite simple digraph with positive-integer edge colors.

    Vertices are arbitrary hashable payloads (tuples of coordinates,
    frozensets of poset elements, ...).  Vertex and edge sequences are kept
    sorted under :func:`canonical_key`, so two structurally equal graphs
    compare equal and print identically.
    """

    __slots__ = ("_vertices", "_edges", "_out", "_in", "_vset")

    def __init__(self, vertices, edges):
        vs = sorted(vertices, key=canonical_key)
        vset = set(vs)
        if len(vs) != len(vset):
            raise ValueError("duplicate vertices")
        out = {v: [] for v in vs}
        inc = {v: [] for v in vs}
        seen_pairs = set()
        es = []
        for (u, v, c) in edges:
            if u not in vset or v not in vset:
                raise ValueError(f"edge endpoint not a vertex: {(u, v)}")
            if u == v:
                raise ValueError(f"loop at {u!r}")
            if (u, v) in seen_pairs:
                raise ValueError(f"parallel edge {u!r} -> {v!r}")
            if not isinstance(c, int) or c < 1:
                raise ValueError(f"edge color must be a positive integer, got {c!r}")
            seen_pairs.add((u, v))
            es.append((u, v, c))
        es.sort(key=lambda e: (canonical_key(e[0]), canonical_key(e[1])))
        for (u, v, c) in es:
            out[u].append((v, c))
            inc[v].append((u, c))
        self._vertices = tuple(vs)
        self._edges = tuple(es)
        self._out = {v: tuple(nbrs) for v, nbrs in out.items()}
        self._in = {v: tuple(nbrs) for v, nbrs in inc.items()}
        self._vset = frozenset(vset)

    @property
    def vertices(self):
        return self._vertices

    @property
    def edges(self):
        return self._edges

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, v):
        return v in self._vset

    def __eq__(self, other):
        if not isinstance(other, ColoredDigraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self):
        return hash((self._vertices, self._edges))

    def __repr__(self):
        return f"ColoredDigraph({len(self._vertices)} vertices, {len(self._edges)} edges)"

    def out_edges(self, v):
        """Pairs (target, color) of edges leaving ``v``."""
        return self._out[v]

    def in_edges(self, v):
        """Pairs (source, color) of edges entering ``v``."""
        return self._in[v]

    def edge_color(self, u, v):
        """Color of the edge u -> v, or None if absent."""
        for (w, c) in self._out[u]:
            if w == v:
                return c
        return None

    def colors(self):
        return sorted({c for (_, _, c) in self._edges})

    def sources(self):
        return [v for v in self._vertices if not self._in[v]]

    def sinks(self):
        return [v for v in self._vertices if not self._out[v]]

    def undirected_neighbors(self, v):
        """Neighbors along edges in either direction, with (neighbor, color, direction)."""
        res = [(w, c, +1) for (w, c) in self._out[v]]
        res += [(w, c, -1) for (w, c) in self._in[v]]
        return res

    def is_weakly_connected(self) -> bool:
        if not self._vertices:
            return True
        seen = {self._vertices[0]}
        stack = [self._vertices[0]]
        while stack:
            v = stack.pop()
            for (w, _, _) in self.undirected_neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self._vertices)

    def relabel(self, mapping) -> "ColoredDigraph":
        """Apply a vertex bijection, keeping edge colors."""
        return ColoredDigraph(
            [mapping[v] for v in self._vertices],
            [(mapping[u], mapping[v], c) for (u, v, c) in self._edges],
        )

    def recolor(self, color_map) -> "ColoredDigraph":
        """Apply a function to every edge color."""
        return ColoredDigraph(
            self._vertices, [(u, v, color_map(c)) for (u, v, c) in self._edges]
        )

    def color_subgraph(self, color) -> "ColoredDigraph":
        """Subgraph on all vertices keeping only edges of the given color."""
        return ColoredDigraph(
            self._vertices, [e for e in self._edges if e[2] == color]
        )


def rank_function(g: ColoredDigraph) -> dict:
    """Longest-path layering of an acyclic weakly connected digraph.

    Sources sit at rank 0; afterwards every edge is checked to raise rank by
    exactly one.  Raises :class:`NotRankedError` when the check fails (e.g.
    on an N-shaped diagram with chains of different lengths meeting), and
    ValueError on cyclic or disconnected input.
    """
    if len(g) == 0:
        return {}
    if not g.is_weakly_connected():
        raise ValueError("digraph is not weakly connected")
    indeg = {v: len(g.in_edges(v)) for v in g.vertices}
    queue = deque(v for v in g.vertices if indeg[v] == 0)
    rank = {v: 0 for v in queue}
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for (w, _) in g.out_edges(v):
            rank[w] = max(rank.get(w, 0), rank[v] + 1)
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if seen != len(g):
        raise ValueError("digraph contains a directed cycle")
    for (u, v, _) in g.edges:
        if rank[v] != rank[u] + 1:
            raise NotRankedError(
                f"edge {u!r} -> {v!r} spans ranks {rank[u]} -> {rank[v]}"
            )
    return rank


def is_diamond_colored(g: ColoredDigraph) -> bool:
    """Whether opposite edges of every cover-diamond agree in color.

    A diamond is a configuration v -> s, v -> t, s -> u, t -> u with s != t;
    the condition asks color(v->s) == color(t->u) and color(v->t) == color(s->u).
    """
    for v in g.vertices:
        outs = g.out_edges(v)
        for a in range(len(outs)):
            s, ks = outs[a]
            for b in range(len(outs)):
                if a == b:
                    continue
                t, kt = outs[b]
                for (u, cs) in g.out_edges(s):
                    ct = g.edge_color(t, u)
                    if ct is None:
                        continue
                    # opposite side of v->t is s->u; opposite of v->s is t->u
                    if cs != kt or ct != ks:
                        return False
    return True


def is_topographically_balanced(g: ColoredDigraph) -> bool:
    """Both diamond-completion conditions, each with a unique completion.

    Upward: whenever s and t both cover v, exactly one u covers both s and t.
    Downward: whenever u covers both s and t, exactly one v is covered by both.
    """
    for v in g.vertices:
        ups = [w for (w, _) in g.out_edges(v)]
        for a in range(len(ups)):
            for b in range(a + 1, len(ups)):
                s, t = ups[a], ups[b]
                common = {w for (w, _) in g.out_edges(s)} & {
                    w for (w, _) in g.out_edges(t)
                }
                if len(common) != 1:
                    return False
    for u in g.vertices:
        downs = [w for (w, _) in g.in_edges(u)]
        for a in range(len(downs)):
            for b in range(a + 1, len(downs)):
                s, t = downs[a], downs[b]
                common = {w for (w, _) in g.in_edges(s)} & {
                    w for (w, _) in g.in_edges(t)
                }
                if len(common) != 1:
                    return False
    return True


def bfs_distance(g: ColoredDigraph, s, t) -> int:
    """Shortest path length between s and t ignoring edge direction.

    This is the independent oracle against which the rank-formula distances
    are checked; it never consults ranks, joins or meets.
    """
    if s not in g or t not in g:
        raise ValueError("endpoint is not a vertex")
    if s == t:
        return 0
    dist = {s: 0}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for (w, _, _) in g.undirected_neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                if w == t:
                    return dist[w]
                queue.append(w)
    raise UnreachableError(f"{t!r} is not reachable from {s!r}")


class VertexColoredPoset:
    """A finite poset presented by its order diagram, with colored elements.

    ``covers`` are (lower, upper) pairs; they must be acyclic and transitively
    reduced (no cover pair may also be joined by a longer chain).
    """

    __slots__ = ("_elements", "_covers", "_color", "_up", "_down", "_upcov", "_lowcov")

    def __init__(self, elements, covers, color):
        els = sorted(elements, key=canonical_key)
        eset = set(els)
        if len(els) != len(eset):
            raise ValueError("duplicate elements")
        covs = sorted(set((a, b) for (a, b) in covers),
                      key=lambda p: (canonical_key(p[0]), canonical_key(p[1])))
        upcov = {e: [] for e in els}
        lowcov = {e: [] for e in els}
        for (a, b) in covs:
            if a not in eset or b not in eset:
                raise ValueError(f"cover endpoint not an element: {(a, b)}")
            if a == b:
                raise ValueError("reflexive cover")
            upcov[a].append(b)
            lowcov[b].append(a)
        col = {}
        for e in els:
            if e not in color:
                raise ValueError(f"element {e!r} has no color")
            c = color[e]
            if not isinstance(c, int) or c < 1:
                raise ValueError(f"color of {e!r} must be a positive integer")
            col[e] = c
        # strict up-sets by DFS; also detects cycles
        up = {}

        def upset(e, trail):
            if e in up:
                return up[e]
            if e in trail:
                raise ValueError("covers contain a cycle")
            trail.add(e)
            acc = set()
            for b in upcov[e]:
                acc.add(b)
                acc |= upset(b, trail)
            trail.discard(e)
            up[e] = acc
            return acc

        for e in els:
            upset(e, set())
        for (a, b) in covs:
            # transitive reduction: b must not be reachable from a in two or more steps
            for m in upcov[a]:
                if m != b and b in up[m]:
                    raise ValueError(f"cover {(a, b)} is implied by a longer chain")
        down = {e: set() for e in els}
        for e in els:
            for f in up[e]:
                down[f].add(e)
        self._elements = tuple(els)
        self._covers = tuple(covs)
        self._color = dict(col)
        self._up = {e: frozenset(s) for e, s in up.items()}
        self._down = {e: frozenset(s) for e, s in down.items()}
        self._upcov = {e: tuple(sorted(v, key=canonical_key)) for e, v in upcov.items()}
        self._lowcov = {e: tuple(sorted(v, key=canonical_key)) for e, v in lowcov.items()}

    @property
    def elements(self):
        return self._elements

    @property
    def covers(self):
        return self._covers

    def color(self, e) -> int:
        return self._color[e]

    def colors(self) -> dict:
        return dict(self._color)

    def __len__(self):
        return len(self._elements)

    def __eq__(self, other):
        if not isinstance(other, VertexColoredPoset):
            return NotImplemented
        return (self._elements == other._elements and self._covers == other._covers
                and self._color == other._color)

    def __repr__(self):
        return f"VertexColoredPoset({len(self._elements)} elements, {len(self._covers)} covers)"

    def lt(self, a, b) -> bool:
        return b in self._up[a]

    def le(self, a, b) -> bool:
        return a == b or b in self._up[a]

    def upper_covers(self, e):
        return self._upcov[e]

    def lower_covers(self, e):
        return self._lowcov[e]

    def strict_upset(self, e):
        return self._up[e]

    def strict_downset(self, e):
        return self._down[e]

    def minimal_of(self, subset):
        sub = set(subset)
        return sorted((e for e in sub if not (self._down[e] & sub)), key=canonical_key)

    def maximal_of(self, subset):
        sub = set(subset)
        return sorted((e for e in sub if not (self._up[e] & sub)), key=canonical_key)

    def is_ideal(self, members) -> bool:
        mem = set(members)
        return all(self._down[e] <= mem for e in mem)

    def ideals(self):
        """All order ideals (downward closed subsets), as frozensets."""
        start = frozenset()
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for m in self.minimal_of(set(self._elements) - x):
                y = x | {m}
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen, key=canonical_key)

    def isomorphic_to(self, other: "VertexColoredPoset") -> bool:
        """Color- and order-preserving bijection test (backtracking; small posets)."""
        if len(self) != len(other):
            return False
        if sorted(self._color.values()) != sorted(other._color.values()):
            return False

        def signature(p, e):
            return (p.color(e), len(p.upper_covers(e)), len(p.lower_covers(e)),
                    len(p.strict_upset(e)), len(p.strict_downset(e)))

        mine = sorted(self._elements, key=lambda e: (signature(self, e), canonical_key(e)))
        candidates = {e: [f for f in other._elements
                          if signature(other, f) == signature(self, e)]
                      for e in mine}

        def extend(i, mapping, used):
            if i == len(mine):
                return True
            e = mine[i]
            for f in candidates[e]:
                if f in used:
                    continue
                ok = True
                for e2, f2 in mapping.items():
                    if self.lt(e, e2) != other.lt(f, f2) or self.lt(e2, e) != other.lt(f2, f):
                        ok = False
                        break
                if ok:
                    mapping[e] = f
                    used.add(f)
                    if extend(i + 1, mapping, used):
                        return True
                    del mapping[e]
                    used.discard(f)
            return False

        return extend(0, {}, set())


class DiamondLattice:
    """A ranked lattice carried by a colored order diagram.

    The constructor checks that the diagram has a unique minimum and maximum
    and admits a rank function; `check_lattice` additionally certifies that
    every pair of vertices has a least upper and greatest lower bound.

    ``ideal_coords`` (optional) maps each vertex to a frozenset — its order
    ideal of join irreducibles — and ``poset`` is the vertex-colored poset
    those ideals live in.  When present, joins and meets are set union and
    intersection, and explicit geodesics can be constructed element by
    element.  ``coord_join`` / ``coord_meet`` allow families with tuple
    coordinates (component-wise max/min) to shortcut the order-theoretic
    search as well.
    """

    __slots__ = ("diagram", "rank", "length", "kind", "ideal_coords", "poset",
                 "coord_join", "coord_meet", "_index", "_upmask", "_downmask",
                 "_by_ideal")

    def __init__(self, diagram: ColoredDigraph, kind: str,
                 ideal_coords=None, poset=None,
                 coord_join=None, coord_meet=None):
        if kind not in ("modular", "distributive"):
            raise ValueError("kind must be 'modular' or 'distributive'")
        if len(diagram) == 0:
            raise LatticeError("empty diagram")
        self.diagram = diagram
        self.kind = kind
        self.rank = rank_function(diagram)
        self.length = max(self.rank.values())
        srcs, snks = diagram.sources(), diagram.sinks()
        if len(srcs) != 1 or len(snks) != 1:
            raise LatticeError(
                f"expected unique min and max, found {len(srcs)} sources, {len(snks)} sinks")
        self.ideal_coords = dict(ideal_coords) if ideal_coords is not None else None
        self.poset = poset
        self.coord_join = coord_join
        self.coord_meet = coord_meet
        if (self.ideal_coords is None) != (poset is None):
            raise ValueError("ideal_coords and poset must be supplied together")
        if self.ideal_coords is not None and kind != "distributive":
            raise ValueError("ideal coordinates require a distributive lattice")
        # reachability bitmasks for order tests and order-theoretic join/meet
        verts = diagram.vertices
        self._index = {v: i for i, v in enumerate(verts)}
        n = len(verts)
        up = [1 << i for i in range(n)]
        by_rank = sorted(range(n), key=lambda i: -self.rank[verts[i]])
        for i in by_rank:
            for (w, _) in diagram.out_edges(verts[i]):
                up[i] |= up[self._index[w]]
        down = [1 << i for i in range(n)]
        for i in sorted(range(n), key=lambda i: self.rank[verts[i]]):
            for (w, _) in diagram.in_edges(verts[i]):
                down[i] |= down[self._index[w]]
        self._upmask = up
        self._downmask = down
        self._by_ideal = (
            {ideal: v for v, ideal in self.ideal_coords.items()}
            if self.ideal_coords is not None else None)

    @property
    def vertices(self):
        return self.diagram.vertices

    def __len__(self):
        return len(self.diagram)

    def __repr__(self):
        return (f"DiamondLattice({len(self.diagram)} vertices, "
                f"length {self.length}, {self.kind})")

    @property
    def minimum(self):
        return self.diagram.sources()[0]

    @property
    def maximum(self):
        return self.diagram.sinks()[0]

    def le(self, s, t) -> bool:
        return bool(self._upmask[self._index[s]] & (1 << self._index[t]))

    def vertex_of_ideal(self, ideal):
        return self._by_ideal[ideal]

    def _bound(self, s, t, masks, pick_rank):
        common = masks[self._index[s]] & masks[self._index[t]]
        if not common:
            raise LatticeError(f"no common bound for {s!r}, {t!r}")
        verts = self.diagram.vertices
        best = None
        m = common
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            if best is None or pick_rank(self.rank[verts[i]], self.rank[verts[best]]):
                best = i
        # least/greatest bound must dominate every other common bound
        if masks[best] & common != common:
            raise LatticeError(f"bounds of {s!r}, {t!r} have no unique extremum")
        return verts[best]

    def join(self, s, t):
        """Least upper bound (ideal union / coordinate rule / order search)."""
        if s == t:
            return s
        if self.ideal_coords is not None:
            return self._by_ideal[self.ideal_coords[s] | self.ideal_coords[t]]
        if self.coord_join is not None:
            v = self.coord_join(s, t)
            if v not in self._index:
                raise LatticeError(f"coordinate join of {s!r}, {t!r} left the lattice")
            return v
        return self._bound(s, t, self._upmask, lambda a, b: a < b)

    def meet(self, s, t):
        """Greatest lower bound."""
        if s == t:
            return s
        if self.ideal_coords is not None:
            return self._by_ideal[self.ideal_coords[s] & self.ideal_coords[t]]
        if self.coord_meet is not None:
            v = self.coord_meet(s, t)
            if v not in self._index:
                raise LatticeError(f"coordinate meet of {s!r}, {t!r} left the lattice")
            return v
        return self._bound(s, t, self._downmask, lambda a, b: a > b)

    def order_join(self, s, t):
        """Join computed purely from the order, ignoring any coordinate rule."""
        return self._bound(s, t, self._upmask, lambda a, b: a < b)

    def order_meet(self, s, t):
        return self._bound(s, t, self._downmask, lambda a, b: a > b)

    def check_lattice(self) -> None:
        """Certify join and meet exist for every vertex pair (raises LatticeError)."""
        verts = self.diagram.vertices
        for a in range(len(verts)):
            for b in range(a + 1, len(verts)):
                j = self.order_join(verts[a], verts[b])
                m = self.order_meet(verts[a], verts[b])
                if self.ideal_coords is not None or self.coord_join is not None:
                    if j != self.join(verts[a], verts[b]):
                        raise LatticeError("coordinate join disagrees with order join")
                    if m != self.meet(verts[a], verts[b]):
                        raise LatticeError("coordinate meet disagrees with order meet")


def ideals_lattice(p: VertexColoredPoset) -> DiamondLattice:
    """The distributive lattice of order ideals of a vertex-colored poset.

    Vertices are the ideals themselves (frozensets); there is an edge
    x -> y of color c exactly when y \\ x is a single element of color c
    (necessarily maximal in y).
    """
    ideals = p.ideals()
    edges = []
    for x in ideals:
        for m in p.minimal_of(set(p.elements) - x):
            edges.append((x, x | {m}, p.color(m)))
    diagram = ColoredDigraph(ideals, edges)
    coords = {x: x for x in ideals}
    return DiamondLattice(diagram, "distributive", ideal_coords=coords, poset=p)


def join_irreducibles(lat: DiamondLattice) -> VertexColoredPoset:
    """The vertex-colored poset of join irreducibles of a distributive lattice.

    A join irreducible covers exactly one vertex; its color is the color of
    that unique incoming diagram edge.  The order is inherited from the
    lattice and transitively reduced.
    """
    if lat.kind != "distributive":
        raise ValueError("join irreducibles of the colored kind require a distributive lattice")
    g = lat.diagram
    irr = [v for v in g.vertices if len(g.in_edges(v)) == 1]
    color = {v: g.in_edges(v)[0][1] for v in irr}
    covers = []
    for a in irr:
        below = [b for b in irr if b != a and lat.le(b, a)]
        for b in below:
            if not any(lat.le(b, m) and lat.le(m, a) for m in below if m != b):
                covers.append((b, a))
    return VertexColoredPoset(irr, covers, color)


def attach_birkhoff_coords(lat: DiamondLattice) -> DiamondLattice:
    """Equip a distributive lattice with order-ideal coordinates.

    Each vertex is mapped to the set of join irreducibles below it; the
    resulting ideals are exactly the order ideals of `join_irreducibles(lat)`,
    so the returned lattice supports set-theoretic joins, meets and explicit
    path construction while keeping the original vertex payloads.
    """
    if lat.ideal_coords is not None:
        return lat
    p = join_irreducibles(lat)
    coords = {}
    for v in lat.vertices:
        coords[v] = frozenset(e for e in p.elements if lat.le(e, v))
    if len(set(coords.values())) != len(lat.vertices):
        raise LatticeError("irreducible coordinates are not injective; lattice not distributive?")
    return DiamondLattice(lat.diagram, "distributive", ideal_coords=coords, poset=p,
                          coord_join=lat.coord_join, coord_meet=lat.coord_meet)


def to_dot(g: ColoredDigraph, name: str = "G") -> str:
    """Deterministic DOT rendering: one node per vertex labeled with its
    canonical coordinates, edges labeled with their color."""
    lines = [f"digraph {name} {{"]
    lines.append('  rankdir=BT;')
    ids = {}
    for i, v in enumerate(g.vertices):
        ids[v] = f"n{i}"
        lines.append(f'  n{i} [label="{render_vertex(v)}"];')
    for (u, v, c) in g.edges:
        lines.append(f'  {ids[u]} -> {ids[v]} [label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
