"""Shared fixtures: rotation systems transcribed from drawings, and
independent oracles used to cross-check the library's fast paths."""

from __future__ import annotations

import os
from fractions import Fraction

import pytest

from ebrmaps import rotation_system_to_flagmap

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "fixtures")

# Toroidal map on 11 vertices with even valencies and even face lengths but
# no alternate-edge-colouring.  See the comment in the fixture JSON for the
# vertex/edge key.
TORUS_ROTATIONS = [
    [0, 12, 11, 15],   # A
    [14, 13],          # B
    [2, 16, 1, 19],    # C
    [4, 24, 3, 36],    # D
    [6, 5],            # E
    [8, 26, 7, 38],    # F
    [10, 20, 9, 23],   # G
    [32, 18, 17, 28],  # H
    [22, 34, 30, 21],  # I
    [31, 29, 25, 27],  # J
    [39, 37, 33, 35],  # K
]
TORUS_PAIRING = [d for e in range(20) for d in (2 * e + 1, 2 * e)]

# Spherical map: nested squares joined by two pairs of parallel arcs, with an
# alternate-edge-colouring (even edge ids one colour, odd the other).
SPHERE_ROTATIONS = [
    [0, 7, 16, 18],    # P1
    [20, 2, 1, 22],    # P2
    [4, 3],            # P3
    [5, 6],            # P4
    [8, 19, 17, 15],   # Q1
    [10, 21, 23, 9],   # Q2
    [12, 11],          # Q3
    [13, 14],          # Q4
]
SPHERE_PAIRING = [d for e in range(12) for d in (2 * e + 1, 2 * e)]


def cube_rotation_system():
    """The cube with vertices as coordinate bit-triples, darts 3*v + axis."""
    rotations = []
    for v in range(8):
        parity = bin(v).count("1") % 2
        axes = (0, 1, 2) if parity == 0 else (0, 2, 1)
        rotations.append([3 * v + a for a in axes])
    pairing = [3 * ((d // 3) ^ (1 << (d % 3))) + d % 3 for d in range(24)]
    return rotations, pairing


@pytest.fixture(scope="session")
def torus_flagmap():
    return rotation_system_to_flagmap(TORUS_ROTATIONS, TORUS_PAIRING)


@pytest.fixture(scope="session")
def sphere_flagmap():
    return rotation_system_to_flagmap(SPHERE_ROTATIONS, SPHERE_PAIRING)


@pytest.fixture(scope="session")
def cube_flagmap():
    return rotation_system_to_flagmap(*cube_rotation_system())


# ---------------------------------------------------------------------------
# Independent oracles
# ---------------------------------------------------------------------------

def involutions_by_scan(group):
    """Brute-force scan: non-identity elements squaring to the identity."""
    out = []
    for p in group.elements:
        if not p.is_identity() and (p * p).is_identity():
            out.append(p)
    return out


def euler_formula(order: int, k: int, l: int) -> Fraction:
    """|H| (1/k - 1/2 + 1/l), evaluated exactly."""
    return order * (Fraction(1, k) - Fraction(1, 2) + Fraction(1, l))


def automorphism_by_full_table(group, src, dst):
    """Oracle for generator-map extension: build the word-translation map with
    a local BFS, then verify it on the full multiplication table.

    Returns the image list or None.  Unlike the library path, which checks
    only Cayley-graph edges, this verifies every product.
    """
    n = group.order
    src = [group.index(s) for s in src]
    dst = [group.index(d) for d in dst]
    images = [None] * n
    images[0] = 0
    frontier = [0]
    while frontier:
        new = []
        for a in frontier:
            for s, d in zip(src, dst):
                b = group.mul(a, s)
                fb = group.mul(images[a], d)
                if images[b] is None:
                    images[b] = fb
                    new.append(b)
                elif images[b] != fb:
                    return None
        frontier = new
    if None in images or len(set(images)) != n:
        return None
    for x in range(n):
        for y in range(n):
            if images[group.mul(x, y)] != group.mul(images[x], images[y]):
                return None
    return images


def orientable_by_even_subgroup(m) -> bool:
    """Oracle: the map is orientable iff the products of slot-element pairs
    generate a subgroup of index exactly 2."""
    group = m.group
    slots = [i for i in m.slot_indices if i is not None]
    products = [group.mul(a, b) for a in slots for b in slots]
    return 2 * group.subgroup_order(products) == group.order


def pairwise_class_count(group, quads):
    """Quadratic deduplication oracle: compare every quadruple against the
    representatives found so far by attempting a generator-map extension."""
    from ebrmaps import extend_generator_map

    reps = []
    for quad in quads:
        for rep in reps:
            if extend_generator_map(group, list(quad), list(rep)) is not None:
                break
        else:
            reps.append(quad)
    return len(reps)


def all_valid_quadruples(group, require_proper=False, require_distinct=False):
    """Direct, unoptimized generation of valid quadruples (soundness oracle)."""
    invs = group.involution_indices()
    order = group.order

    def commuting(x, y):
        return group.mul(x, y) == group.mul(y, x)

    quads = []
    for r0 in invs:
        for r2 in invs:
            if not commuting(r0, r2) or (require_proper and r0 == r2):
                continue
            for p0 in invs:
                for p2 in invs:
                    if not commuting(p0, p2) or (require_proper and p0 == p2):
                        continue
                    quad = (r0, r2, p0, p2)
                    if require_distinct and len(set(quad)) < 4:
                        continue
                    if group.subgroup_order(list(set(quad))) != order:
                        continue
                    quads.append(quad)
    return quads
