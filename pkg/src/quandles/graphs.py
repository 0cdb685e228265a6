"""Simple graphs: adjacency, automorphisms, vertex-transitivity, named families.

Vertices are 0..n-1; edges are unordered pairs with no loops.  Graphs
built from subset families carry the subsets as display labels, but every
algorithm works on indices only.
"""

from __future__ import annotations

import itertools

from .errors import InputError, ResourceLimitError
from .permgroup import PermGroup, Permutation

DEFAULT_VERTEX_CAP = 12


class SimpleGraph:
    """Undirected loop-free graph on vertices 0..n-1."""

    __slots__ = ("vertex_count", "edges", "labels")

    def __init__(self, vertex_count, edges=(), labels=None):
        if not isinstance(vertex_count, int) or isinstance(vertex_count, bool) or vertex_count < 0:
            raise InputError(f"vertex count must be a nonnegative integer, got {vertex_count!r}")
        normalized = set()
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise InputError(f"edge {e!r} is not a pair") from None
            for w in (u, v):
                if not isinstance(w, int) or isinstance(w, bool) or not 0 <= w < vertex_count:
                    raise InputError(f"edge endpoint {w!r} is out of range")
            if u == v:
                raise InputError(f"loop at vertex {u} is not allowed")
            pair = (u, v) if u < v else (v, u)
            if pair in normalized:
                raise InputError(f"duplicate edge {pair}")
            normalized.add(pair)
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != vertex_count:
                raise InputError(f"{len(labels)} labels for {vertex_count} vertices")
        self.vertex_count = vertex_count
        self.edges = frozenset(normalized)
        self.labels = labels

    def __eq__(self, other):
        return (
            isinstance(other, SimpleGraph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return f"SimpleGraph(vertices={self.vertex_count}, edges={len(self.edges)})"

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self, v: int, w: int) -> int:
        """1 iff v and w are joined by an edge; always 0 on the diagonal."""
        for x in (v, w):
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < self.vertex_count:
                raise InputError(f"vertex {x!r} is out of range")
        if v == w:
            return 0
        return 1 if ((min(v, w), max(v, w)) in self.edges) else 0

    def neighbors(self, v: int) -> tuple[int, ...]:
        out = [w for w in range(self.vertex_count) if w != v and self.adjacency(v, w)]
        return tuple(out)

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)


def _adjacency_masks(g: SimpleGraph) -> list[int]:
    masks = [0] * g.vertex_count
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _vertex_profiles(g: SimpleGraph) -> list[tuple]:
    degs = [g.degree(v) for v in range(g.vertex_count)]
    return [
        (degs[v], tuple(sorted(degs[w] for w in g.neighbors(v))))
        for v in range(g.vertex_count)
    ]


def graph_automorphisms(g: SimpleGraph, *, vertex_cap: int = DEFAULT_VERTEX_CAP) -> PermGroup:
    """The full automorphism group, materialized.

    Plain backtracking over vertex images with degree and
    neighbor-degree-multiset pruning; adequate for the small graphs in
    scope, no canonical-labeling machinery.
    """
    n = g.vertex_count
    if n > vertex_cap:
        raise ResourceLimitError(
            f"graph has {n} vertices, above the automorphism cap {vertex_cap}"
        )
    masks = _adjacency_masks(g)
    profiles = _vertex_profiles(g)
    cands = [
        [w for w in range(n) if profiles[w] == profiles[v]] for v in range(n)
    ]
    img = [-1] * n
    used = [False] * n
    found = []

    def dfs(v):
        if v == n:
            found.append(Permutation(tuple(img)))
            return
        mv = masks[v]
        for w in cands[v]:
            if used[w]:
                continue
            mw = masks[w]
            ok = True
            for u in range(v):
                if ((mv >> u) & 1) != ((mw >> img[u]) & 1):
                    ok = False
                    break
            if ok:
                img[v] = w
                used[w] = True
                dfs(v + 1)
                used[w] = False
                img[v] = -1

    dfs(0)
    return PermGroup(n, found, elements=found)


def is_vertex_transitive(g: SimpleGraph, *, vertex_cap: int = DEFAULT_VERTEX_CAP) -> bool:
    """True iff the automorphism group has a single vertex orbit."""
    if g.vertex_count < 1:
        raise InputError("vertex-transitivity needs at least one vertex")
    return graph_automorphisms(g, vertex_cap=vertex_cap).is_transitive()


def find_graph_isomorphism(g1: SimpleGraph, g2: SimpleGraph, *, vertex_cap: int = DEFAULT_VERTEX_CAP) -> Permutation | None:
    """A vertex bijection carrying edges exactly onto edges, or None."""
    n = g1.vertex_count
    if g2.vertex_count != n:
        return None
    if len(g1.edges) != len(g2.edges):
        return None
    if n > vertex_cap:
        raise ResourceLimitError(
            f"graphs have {n} vertices, above the isomorphism cap {vertex_cap}"
        )
    p1, p2 = _vertex_profiles(g1), _vertex_profiles(g2)
    if sorted(p1) != sorted(p2):
        return None
    m1, m2 = _adjacency_masks(g1), _adjacency_masks(g2)
    cands = [[w for w in range(n) if p2[w] == p1[v]] for v in range(n)]
    img = [-1] * n
    used = [False] * n

    def dfs(v):
        if v == n:
            return True
        mv = m1[v]
        for w in cands[v]:
            if used[w]:
                continue
            mw = m2[w]
            ok = True
            for u in range(v):
                if ((mv >> u) & 1) != ((mw >> img[u]) & 1):
                    ok = False
                    break
            if ok:
                img[v] = w
                used[w] = True
                if dfs(v + 1):
                    return True
                used[w] = False
                img[v] = -1
        return False

    if dfs(0):
        return Permutation(tuple(img))
    return None


def empty(n: int) -> SimpleGraph:
    """n vertices, no edges."""
    _require_positive(n)
    return SimpleGraph(n)


def complete(n: int) -> SimpleGraph:
    _require_positive(n)
    return SimpleGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> SimpleGraph:
    if not isinstance(n, int) or isinstance(n, bool) or n < 3:
        raise InputError(f"a cycle needs at least 3 vertices, got {n!r}")
    return SimpleGraph(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> SimpleGraph:
    _require_positive(n)
    return SimpleGraph(n, [(v, v + 1) for v in range(n - 1)])


def star(n: int) -> SimpleGraph:
    """n vertices total: hub 0 joined to every other vertex."""
    _require_positive(n)
    return SimpleGraph(n, [(0, v) for v in range(1, n)])


def johnson(n: int, k: int) -> SimpleGraph:
    """k-subsets of {1..n} in lexicographic order; edges where the
    intersection has k-1 elements."""
    subsets = _subset_vertices(n, k)
    edges = [
        (i, j)
        for i in range(len(subsets))
        for j in range(i + 1, len(subsets))
        if len(set(subsets[i]) & set(subsets[j])) == k - 1
    ]
    return SimpleGraph(len(subsets), edges, labels=[_subset_label(s) for s in subsets])


def parity_difference(n: int, k: int) -> SimpleGraph:
    """k-subsets of {1..n} in lexicographic order; edges where the
    difference v \\ w has odd size."""
    subsets = _subset_vertices(n, k)
    edges = [
        (i, j)
        for i in range(len(subsets))
        for j in range(i + 1, len(subsets))
        if len(set(subsets[i]) - set(subsets[j])) % 2 == 1
    ]
    return SimpleGraph(len(subsets), edges, labels=[_subset_label(s) for s in subsets])


def _require_positive(n):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError(f"vertex count must be a positive integer, got {n!r}")


def _subset_vertices(n, k):
    _require_positive(n)
    if not isinstance(k, int) or isinstance(k, bool) or not 1 <= k <= n:
        raise InputError(f"need 1 <= k <= n, got k={k!r}, n={n!r}")
    return list(itertools.combinations(range(1, n + 1), k))


def _subset_label(subset):
    return "{" + ",".join(str(i) for i in subset) + "}"


def graph_to_dict(g: SimpleGraph) -> dict:
    return {"vertices": g.vertex_count, "edges": [list(e) for e in g.edge_list()]}


def graph_from_dict(d) -> SimpleGraph:
    """Parse graph JSON: 0-based edges [u, v] with u < v, no loops, no duplicates."""
    if not isinstance(d, dict) or "vertices" not in d or "edges" not in d:
        raise InputError('graph JSON needs "vertices" and "edges"')
    n = d["vertices"]
    edges = d["edges"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InputError('"vertices" must be a nonnegative integer')
    if not isinstance(edges, list):
        raise InputError('"edges" must be a list of pairs')
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise InputError(f"edge {e!r} is not a pair [u, v]")
        u, v = e
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (u, v)):
            raise InputError(f"edge {e!r} has non-integer endpoints")
        if not u < v:
            raise InputError(f"edge {e!r} must be written with u < v")
    return SimpleGraph(n, [tuple(e) for e in edges])


def to_dot(g: SimpleGraph) -> str:
    """DOT text with every vertex listed (isolated ones included), edges sorted."""
    lines = ["graph {"]
    for v in range(g.vertex_count):
        if g.labels:
            lines.append(f'  {v} [label="{g.labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edge_list():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
