"""Independent oracles for the test suite.

Everything here recomputes expected values by a different route than the
library: brute force enumeration, float geometry, bitset linear algebra.
None of it imports the package, so a bug cannot hide on both sides.
"""

import itertools
import math


def gf2_rank(rows, n_cols):
    """Rank over GF(2) of bitmask rows, by Gaussian elimination."""
    work = list(rows)
    rank = 0
    row_idx = 0
    for col in range(n_cols):
        pivot = None
        for r in range(row_idx, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[row_idx], work[pivot] = work[pivot], work[row_idx]
        for r in range(len(work)):
            if r != row_idx and ((work[r] >> col) & 1):
                work[r] ^= work[row_idx]
        rank += 1
        row_idx += 1
        if row_idx == len(work):
            break
    return rank


def _q3_holds(rows):
    n = len(rows)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if rows[x][rows[y][z]] != rows[rows[x][y]][rows[x][z]]:
                    return False
    return True


def naive_quandle_tables(n):
    """Every quandle table of order n, by raw product enumeration.

    Tries all combinations of diagonal-fixing row permutations and keeps
    those passing the direct triple check.  Feasible only for n <= 4.
    """
    perms = list(itertools.permutations(range(n)))
    fixing = [[p for p in perms if p[x] == x] for x in range(n)]
    out = []
    for rows in itertools.product(*fixing):
        if _q3_holds(rows):
            out.append(rows)
    return out


def naive_quandle_classes(n):
    """Representatives of the isomorphism classes of order n, the slow way:
    group the raw tables by their full relabeling orbits."""
    tables = set(naive_quandle_tables(n))
    perms = list(itertools.permutations(range(n)))
    classes = []
    while tables:
        t = min(tables)
        orbit = set()
        for sigma in perms:
            inv = [0] * n
            for x, y in enumerate(sigma):
                inv[y] = x
            orbit.add(
                tuple(
                    tuple(sigma[t[inv[i]][inv[j]]] for j in range(n))
                    for i in range(n)
                )
            )
        classes.append(min(orbit))
        tables -= orbit
    return sorted(classes)


def geometric_dihedral_table(r):
    """Dihedral quandle table computed with actual circle reflections.

    Point k sits at angle 2*pi*k/r; the symmetry at x is the reflection
    of the plane across the line through x, applied with floats and read
    back by nearest vertex.
    """
    pts = [(math.cos(2 * math.pi * k / r), math.sin(2 * math.pi * k / r)) for k in range(r)]
    table = []
    for x in range(r):
        theta = 2 * math.pi * x / r
        c, s = math.cos(2 * theta), math.sin(2 * theta)
        row = []
        for y in range(r):
            px, py = pts[y]
            ix, iy = c * px + s * py, s * px - c * py
            best, best_d = None, None
            for k, (qx, qy) in enumerate(pts):
                d = (ix - qx) ** 2 + (iy - qy) ** 2
                if best_d is None or d < best_d:
                    best, best_d = k, d
            assert best_d < 1e-12, f"reflected point is not a vertex: {best_d}"
            row.append(best)
        table.append(row)
    return table


def random_edge_set(rng, n, p=0.5):
    return [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]


def petersen_edges():
    outer = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5, 7), (7, 9), (6, 9), (6, 8), (5, 8)]
    return outer + spokes + inner
