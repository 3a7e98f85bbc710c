"""Shared test utilities: independent brute-force oracles and generators.

The oracles here deliberately avoid the library's pruned enumeration:
they scan the full integer bounding box and test every facet inequality,
so an agreement is a genuine cross-check.
"""

from fractions import Fraction
from itertools import product
import math
import random

import tslab
from tslab import catalog


def box_points(P):
    """Integer points of P by plain bounding-box scan (independent oracle)."""
    m = P.dim
    lows, highs = [], []
    for i in range(m):
        coords = [v[i] for v in P.vertices]
        lows.append(math.ceil(min(coords)))
        highs.append(math.floor(max(coords)))
    pts = []
    for cand in product(*[range(lo, hi + 1) for lo, hi in zip(lows, highs)]):
        if all(f.eval(cand) >= 0 for f in P.facets):
            pts.append(cand)
    return pts


def box_count(P):
    return len(box_points(P))


def box_sum(P):
    m = P.dim
    total = [0] * m
    for p in box_points(P):
        for i in range(m):
            total[i] += p[i]
    return tuple(Fraction(t) for t in total)


_SHEARS_2D = [
    [[1, 0], [0, 1]], [[1, 1], [0, 1]], [[1, 0], [1, 1]],
    [[0, 1], [1, 0]], [[1, -1], [0, 1]], [[0, -1], [1, 0]],
]


def random_unimodular(rng: random.Random, m: int, steps: int = 3):
    """Product of elementary shears/swaps; always determinant +-1."""
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    for _ in range(steps):
        i, j = rng.sample(range(m), 2) if m > 1 else (0, 0)
        op = rng.choice(("shear+", "shear-", "swap"))
        if m == 1:
            if op == "swap":
                U = [[-U[0][0]]]
            continue
        if op == "swap":
            U[i], U[j] = U[j], U[i]
        else:
            s = 1 if op == "shear+" else -1
            U[i] = [U[i][c] + s * U[j][c] for c in range(m)]
    return tuple(tuple(row) for row in U)


_BASES = {
    1: [[[0], [1]], [[0], [2]], [[-1], [1]]],
    2: [
        [[0, 0], [1, 0], [0, 1]],
        [[0, 0], [1, 0], [0, 1], [1, 1]],
        [[-1, 0], [0, -1], [2, -1], [-1, 2]],
    ],
    3: [
        [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0],
         [0, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, 1]],
    ],
}


def random_delzant(rng: random.Random, dim: int, coord_bound: int = 3):
    """Random Delzant polytope with vertex coordinates in [-bound, bound].

    Unimodular images and lattice translations of Delzant seeds stay
    Delzant, so the generator never needs a verification loop beyond the
    coordinate-range rejection.
    """
    while True:
        base = rng.choice(_BASES[dim])
        P = tslab.construct(vertices=base, dim=dim)
        U = random_unimodular(rng, dim)
        P = tslab.apply_unimodular(P, U)
        shift = tuple(rng.randint(-1, 1) for _ in range(dim))
        P = tslab.translate(P, shift)
        flat = [c for v in P.vertices for c in v]
        if all(-coord_bound <= c <= coord_bound for c in flat):
            assert tslab.is_delzant(P)
            return P


def fano_entries():
    """(name, Fan) for the toric Fano catalog entries."""
    out = []
    for entry in catalog.load_catalog():
        if entry.kind == "fan":
            fan = tslab.Fan(dim=entry.data["dim"],
                            rays=tuple(tuple(r) for r in entry.data["rays"]),
                            max_cones=tuple(tuple(c)
                                            for c in entry.data["max_cones"]))
            out.append((entry.name, fan))
    return out


def catalog_polytopes():
    """(name, LatticePolytope) for every catalog entry that yields one."""
    out = []
    for entry in catalog.load_catalog():
        if entry.kind == "fan":
            fan = tslab.Fan(dim=entry.data["dim"],
                            rays=tuple(tuple(r) for r in entry.data["rays"]),
                            max_cones=tuple(tuple(c)
                                            for c in entry.data["max_cones"]))
            out.append((entry.name, tslab.moment_polytope(fan)))
        elif entry.kind == "polytope":
            out.append((entry.name,
                        tslab.construct(vertices=entry.data["vertices"],
                                        dim=entry.data["dim"])))
    return out
