"""Seeded random posets shared by the structural and property suites."""

import random

from colorlattice import VertexColoredPoset, ideals_lattice


def random_poset(rng, size=8, colors=3, edge_p=0.3):
    """A random vertex-colored poset on ``size`` labeled elements.

    Draws a random relation on the labels, closes it transitively, and keeps
    only the covering pairs, so the constructor's reduction check is happy.
    """
    order = {(i, j) for i in range(size) for j in range(i + 1, size)
             if rng.random() < edge_p}
    changed = True
    while changed:
        changed = False
        for (a, b) in list(order):
            for c in range(size):
                if (b, c) in order and (a, c) not in order:
                    order.add((a, c))
                    changed = True
    covers = [(a, b) for (a, b) in order
              if not any((a, m) in order and (m, b) in order for m in range(size))]
    color = {e: rng.randint(1, colors) for e in range(size)}
    return VertexColoredPoset(range(size), covers, color)


def random_lattice(seed, size=8):
    """The ideal lattice of a seeded random poset (deterministic per seed)."""
    return ideals_lattice(random_poset(random.Random(seed), size=size))
