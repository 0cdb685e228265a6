"""Finite quandles as Cayley tables.

A quandle on points 0..n-1 is stored as an n x n table with
``table[x][y]`` the image of ``y`` under the point symmetry at ``x``.
The three axioms:

  Q1  table[x][x] == x
  Q2  every row is a permutation of the points
  Q3  table[x][table[y][z]] == table[table[x][y]][table[x][z]]

The transpose convention (operate on the left argument) is the same data
with rows and columns swapped; only this one is used here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import AxiomError, InputError, ResourceLimitError
from .permgroup import Permutation

DEFAULT_NODE_BUDGET = 10**7
ENUMERATION_CAP = 6


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of checking the three axioms on a candidate table.

    first_violation is a pair (axiom id, points involved): ("Q1", (x,)),
    ("Q2", (x, y1, y2)) for a row x repeating a value at columns y1, y2,
    or ("Q3", (x, y, z)).
    """

    q1_ok: bool
    q2_ok: bool
    q3_ok: bool
    first_violation: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.q1_ok and self.q2_ok and self.q3_ok


def _as_rows(table) -> tuple[tuple[int, ...], ...]:
    """Normalize and structurally validate a candidate table."""
    if isinstance(table, FiniteQuandle):
        return table.table
    try:
        rows = tuple(tuple(row) for row in table)
    except TypeError:
        raise InputError("table must be a sequence of rows") from None
    n = len(rows)
    if n == 0:
        raise InputError("table must have at least one row")
    for x, row in enumerate(rows):
        if len(row) != n:
            raise InputError(f"table is not square: row {x} has length {len(row)}")
        for y, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
                raise InputError(f"entry table[{x}][{y}] = {v!r} is out of range")
    return rows


def verify_axioms(table) -> AxiomReport:
    """Check Q1, Q2, Q3 on a candidate table.

    Malformed input (non-square, out-of-range entries) raises InputError;
    axiom failures are reported, not raised.
    """
    rows = _as_rows(table)
    n = len(rows)

    q1_witness = None
    for x in range(n):
        if rows[x][x] != x:
            q1_witness = ("Q1", (x,))
            break

    q2_witness = None
    for x in range(n):
        seen = {}
        for y, v in enumerate(rows[x]):
            if v in seen:
                q2_witness = ("Q2", (x, seen[v], y))
                break
            seen[v] = y
        if q2_witness:
            break

    q3_witness = None
    for x in range(n):
        rx = rows[x]
        for y in range(n):
            rxy = rows[rx[y]]
            ry = rows[y]
            for z in range(n):
                if rx[ry[z]] != rxy[rx[z]]:
                    q3_witness = ("Q3", (x, y, z))
                    break
            if q3_witness:
                break
        if q3_witness:
            break

    return AxiomReport(
        q1_ok=q1_witness is None,
        q2_ok=q2_witness is None,
        q3_ok=q3_witness is None,
        first_violation=q1_witness or q2_witness or q3_witness,
    )


class FiniteQuandle:
    """Immutable finite quandle; table[x][y] is the symmetry at x applied to y.

    Labels are display-only metadata and never enter any algorithm;
    equality and hashing use the table alone.
    """

    __slots__ = ("size", "table", "labels")

    def __init__(self, table, labels=None, *, unchecked=False):
        rows = _as_rows(table)
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != len(rows):
                raise InputError(
                    f"{len(labels)} labels for {len(rows)} points"
                )
        if not unchecked:
            report = verify_axioms(rows)
            if not report.ok:
                raise AxiomError(
                    f"table is not a quandle: first violation {report.first_violation}",
                    report,
                )
        self.size = len(rows)
        self.table = rows
        self.labels = labels

    def __eq__(self, other):
        return isinstance(other, FiniteQuandle) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteQuandle(size={self.size})"

    def row(self, x: int) -> tuple[int, ...]:
        return self.table[x]

    def apply(self, x: int, y: int) -> int:
        """Image of y under the symmetry at x."""
        return self.table[x][y]

    def symmetry(self, x: int) -> Permutation:
        return Permutation(self.table[x])

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)


@dataclass(frozen=True)
class PointMap:
    """A map between quandle point sets, as an image array."""

    domain_size: int
    codomain_size: int
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.domain_size:
            raise InputError(
                f"{len(self.images)} images for domain of size {self.domain_size}"
            )
        for x, y in enumerate(self.images):
            if not isinstance(y, int) or isinstance(y, bool) or not 0 <= y < self.codomain_size:
                raise InputError(f"image of {x} is {y!r}, out of range")

    @classmethod
    def identity(cls, n: int) -> "PointMap":
        return cls(n, n, tuple(range(n)))

    def __call__(self, x: int) -> int:
        return self.images[x]

    def is_bijective(self) -> bool:
        return self.domain_size == self.codomain_size and len(set(self.images)) == self.domain_size


def is_homomorphism(f: PointMap, q1: FiniteQuandle, q2: FiniteQuandle) -> bool:
    """True iff f(q1.table[x][y]) == q2.table[f(x)][f(y)] for all x, y."""
    if f.domain_size != q1.size or f.codomain_size != q2.size:
        raise InputError(
            f"map {f.domain_size}->{f.codomain_size} does not fit quandles "
            f"of sizes {q1.size}, {q2.size}"
        )
    t1, t2, im = q1.table, q2.table, f.images
    for x in range(q1.size):
        fx = im[x]
        for y in range(q1.size):
            if im[t1[x][y]] != t2[fx][im[y]]:
                return False
    return True


def _row_cycle_type(row: tuple[int, ...]) -> tuple[int, ...]:
    seen = [False] * len(row)
    lengths = []
    for x in range(len(row)):
        if seen[x]:
            continue
        length = 0
        y = x
        while not seen[y]:
            seen[y] = True
            y = row[y]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))


def iter_isomorphisms(q1: FiniteQuandle, q2: FiniteQuandle, *, node_budget: int = DEFAULT_NODE_BUDGET):
    """Yield every bijective homomorphism q1 -> q2 as an image tuple.

    Backtracking over point images, pruned by row cycle types and by
    forced assignments: once x and y have images, table[x][y] is forced.
    Exceeding node_budget raises ResourceLimitError rather than ending
    the search quietly.
    """
    n = q1.size
    if q2.size != n:
        return
    t1, t2 = q1.table, q2.table
    ct1 = [_row_cycle_type(r) for r in t1]
    ct2 = [_row_cycle_type(r) for r in t2]
    if sorted(ct1) != sorted(ct2):
        return
    cands = [tuple(y for y in range(n) if ct2[y] == ct1[x]) for x in range(n)]

    img = [-1] * n
    pre = [-1] * n
    nodes = 0

    def assign(x, y, trail):
        if img[x] >= 0:
            return img[x] == y
        if pre[y] >= 0 or ct1[x] != ct2[y]:
            return False
        img[x] = y
        pre[y] = x
        trail.append(x)
        return True

    def settle(trail):
        qi = 0
        while qi < len(trail):
            x = trail[qi]
            qi += 1
            y = img[x]
            for a in range(n):
                b = img[a]
                if b < 0:
                    continue
                if not assign(t1[x][a], t2[y][b], trail):
                    return False
                if not assign(t1[a][x], t2[b][y], trail):
                    return False
        return True

    def undo(trail):
        while trail:
            x = trail.pop()
            pre[img[x]] = -1
            img[x] = -1

    def dfs(k):
        nonlocal nodes
        while k < n and img[k] >= 0:
            k += 1
        if k == n:
            yield tuple(img)
            return
        for y in cands[k]:
            if pre[y] >= 0:
                continue
            nodes += 1
            if nodes > node_budget:
                raise ResourceLimitError(
                    f"isomorphism search exhausted its node budget ({node_budget})"
                )
            trail = []
            if assign(k, y, trail) and settle(trail):
                yield from dfs(k + 1)
            undo(trail)

    yield from dfs(0)


def find_isomorphism(q1: FiniteQuandle, q2: FiniteQuandle, *, node_budget: int = DEFAULT_NODE_BUDGET) -> PointMap | None:
    """A quandle isomorphism q1 -> q2, or None if there is none."""
    for images in iter_isomorphisms(q1, q2, node_budget=node_budget):
        return PointMap(q1.size, q2.size, images)
    return None


def _validate_subset(q: FiniteQuandle, subset) -> tuple[int, ...]:
    pts = sorted(set(subset))
    if not pts:
        raise InputError("subset must be nonempty")
    for p in pts:
        if not isinstance(p, int) or isinstance(p, bool) or not 0 <= p < q.size:
            raise InputError(f"point {p!r} is out of range")
    return tuple(pts)


def is_subquandle(q: FiniteQuandle, subset) -> bool:
    """True iff the subset is closed under every member symmetry and its inverse."""
    pts = _validate_subset(q, subset)
    inside = set(pts)
    for a in pts:
        row = q.table[a]
        inv = [0] * q.size
        for y, v in enumerate(row):
            inv[v] = y
        for x in pts:
            if row[x] not in inside or inv[x] not in inside:
                return False
    return True


def restrict(q: FiniteQuandle, subset) -> FiniteQuandle:
    """The induced quandle on a subquandle, reindexed to 0..k-1 in sorted order."""
    pts = _validate_subset(q, subset)
    if not is_subquandle(q, pts):
        raise InputError(f"subset {pts} is not a subquandle")
    index = {p: i for i, p in enumerate(pts)}
    table = [[index[q.table[a][b]] for b in pts] for a in pts]
    labels = [q.label(p) for p in pts] if q.labels else None
    return FiniteQuandle(table, labels)


def direct_product(q1: FiniteQuandle, q2: FiniteQuandle) -> FiniteQuandle:
    """Componentwise quandle on pairs; (x1, x2) sits at index x1 * q2.size + x2."""
    n1, n2 = q1.size, q2.size
    t1, t2 = q1.table, q2.table
    table = [
        [t1[x1][y1] * n2 + t2[x2][y2] for y1 in range(n1) for y2 in range(n2)]
        for x1 in range(n1)
        for x2 in range(n2)
    ]
    labels = None
    if q1.labels or q2.labels:
        labels = [
            f"({q1.label(x1)},{q2.label(x2)})"
            for x1 in range(n1)
            for x2 in range(n2)
        ]
    return FiniteQuandle(table, labels)


def canonical_table(q) -> tuple[tuple[int, ...], ...]:
    """Lexicographically smallest table over all relabelings of the points.

    Compares each relabeling lazily against the best so far and abandons
    it at the first losing entry.
    """
    rows = _as_rows(q)
    n = len(rows)
    best = None
    for sigma in itertools.permutations(range(n)):
        inv = [0] * n
        for x, y in enumerate(sigma):
            inv[y] = x
        if best is None:
            best = tuple(
                sigma[rows[inv[i]][inv[j]]] for i in range(n) for j in range(n)
            )
            continue
        verdict = 0
        idx = 0
        for i in range(n):
            ti = rows[inv[i]]
            for j in range(n):
                v = sigma[ti[inv[j]]]
                b = best[idx]
                if v != b:
                    verdict = 1 if v > b else -1
                    break
                idx += 1
            if verdict:
                break
        if verdict < 0:
            best = tuple(
                sigma[rows[inv[i]][inv[j]]] for i in range(n) for j in range(n)
            )
    return tuple(tuple(best[i * n : (i + 1) * n]) for i in range(n))


def enumerate_quandles(n: int) -> list[FiniteQuandle]:
    """All quandles on n points, one representative per isomorphism class.

    Rows are chosen by backtracking over diagonal-fixing permutations.
    Placing rows x and y forces the row at table[x][y] to be the
    conjugate row_x o row_y o row_x^-1, which prunes most of the tree
    and enforces Q3 exactly.  Each discovered table is expanded to its
    full relabeling orbit, so later hits are skipped in O(1); the class
    representative is the smallest table of the orbit.  Output is sorted.
    """
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= ENUMERATION_CAP:
        raise InputError(f"enumeration is capped at order {ENUMERATION_CAP}, got {n!r}")

    points = range(n)
    all_perms = list(itertools.permutations(points))
    inv_of = {}
    for p in all_perms:
        inv = [0] * n
        for x, y in enumerate(p):
            inv[y] = x
        inv_of[p] = tuple(inv)
    row_choices = [[p for p in all_perms if p[x] == x] for x in points]

    conj_cache = {}

    def conj(a, b):
        key = (a, b)
        r = conj_cache.get(key)
        if r is None:
            ai = inv_of[a]
            r = tuple(a[b[ai[i]]] for i in points)
            conj_cache[key] = r
        return r

    rows: list = [None] * n
    seen = set()
    reps = []

    def place(z, perm, trail):
        cur = rows[z]
        if cur is not None:
            return cur == perm
        rows[z] = perm
        trail.append(z)
        return True

    def settle(trail):
        qi = 0
        while qi < len(trail):
            x = trail[qi]
            qi += 1
            rx = rows[x]
            for y in points:
                ry = rows[y]
                if ry is None:
                    continue
                if not place(rx[y], conj(rx, ry), trail):
                    return False
                if not place(ry[x], conj(ry, rx), trail):
                    return False
        return True

    def emit():
        t = tuple(rows)
        if t in seen:
            return
        orbit = set()
        for sigma in all_perms:
            sinv = inv_of[sigma]
            orbit.add(
                tuple(
                    tuple(sigma[t[sinv[i]][sinv[j]]] for j in points)
                    for i in points
                )
            )
        seen.update(orbit)
        reps.append(min(orbit))

    def backtrack(k):
        while k < n and rows[k] is not None:
            k += 1
        if k == n:
            emit()
            return
        for p in row_choices[k]:
            trail = []
            if place(k, p, trail) and settle(trail):
                backtrack(k + 1)
            while trail:
                rows[trail.pop()] = None

    backtrack(0)
    reps.sort()
    return [FiniteQuandle(t) for t in reps]


def quandle_to_dict(q: FiniteQuandle) -> dict:
    d = {"size": q.size, "table": [list(r) for r in q.table]}
    if q.labels:
        d["labels"] = list(q.labels)
    return d


def quandle_from_dict(d, *, unchecked: bool = False) -> FiniteQuandle:
    """Parse quandle JSON; axiom failures are rejected unless unchecked is set."""
    if not isinstance(d, dict):
        raise InputError("quandle JSON must be an object")
    if "size" not in d or "table" not in d:
        raise InputError('quandle JSON needs "size" and "table"')
    size = d["size"]
    table = d["table"]
    if not isinstance(size, int) or isinstance(size, bool) or size < 1:
        raise InputError('"size" must be a positive integer')
    if not isinstance(table, list) or len(table) != size:
        raise InputError(f'"table" must be a list of {size} rows')
    labels = d.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != size):
        raise InputError(f'"labels" must be a list of {size} strings')
    return FiniteQuandle(table, labels, unchecked=unchecked)
