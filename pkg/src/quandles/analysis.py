"""Derived structure of a quandle: symmetry groups, components, property
predicates, graph reconstruction, and the small-order census."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .constructions import discrete_torus
from .core import (
    DEFAULT_NODE_BUDGET,
    FiniteQuandle,
    PointMap,
    enumerate_quandles,
    find_isomorphism,
    iter_isomorphisms,
)
from .errors import (
    BadComponentSizeError,
    InputError,
    NotCrossedError,
    ResourceLimitError,
    VerificationError,
)
from .graphs import SimpleGraph, is_vertex_transitive
from .permgroup import DEFAULT_ELEMENT_CAP, PermGroup, Permutation

DEFAULT_AUT_POINT_CAP = 16


def inner_group(q: FiniteQuandle) -> PermGroup:
    """Group generated by the point symmetries (the rows, deduplicated)."""
    return PermGroup(q.size, [Permutation(r) for r in dict.fromkeys(q.table)])


def even_inner_group(q: FiniteQuandle) -> PermGroup:
    """Group generated by all products of two point symmetries."""
    gens = dict.fromkeys(
        tuple(rx[ry[i]] for i in range(q.size))
        for rx in q.table
        for ry in q.table
    )
    return PermGroup(q.size, [Permutation(g) for g in gens])


def displacement_group(q: FiniteQuandle) -> PermGroup:
    """Group generated by products of a symmetry and an inverse symmetry."""
    n = q.size
    inverses = []
    for row in q.table:
        inv = [0] * n
        for y, v in enumerate(row):
            inv[v] = y
        inverses.append(tuple(inv))
    gens = dict.fromkeys(
        tuple(rx[ryi[i]] for i in range(n))
        for rx in q.table
        for ryi in inverses
    )
    return PermGroup(n, [Permutation(g) for g in gens])


def automorphism_group(
    q: FiniteQuandle,
    *,
    point_cap: int = DEFAULT_AUT_POINT_CAP,
    element_cap: int = DEFAULT_ELEMENT_CAP,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> PermGroup:
    """All table-preserving bijections, fully materialized by backtracking."""
    if q.size > point_cap:
        raise ResourceLimitError(
            f"quandle has {q.size} points, above the automorphism cap {point_cap}"
        )
    found = []
    for images in iter_isomorphisms(q, q, node_budget=node_budget):
        found.append(Permutation(images))
        if len(found) > element_cap:
            raise ResourceLimitError(
                f"automorphism group exceeded element cap {element_cap}"
            )
    return PermGroup(q.size, found, elements=found)


def connected_components(q: FiniteQuandle) -> tuple[tuple[int, ...], ...]:
    """Orbits of the inner group, blocks ordered by minimum point."""
    return inner_group(q).orbits()


def _crossed_witness(q: FiniteQuandle):
    t = q.table
    for x in range(q.size):
        for y in range(q.size):
            if t[x][y] == y and t[y][x] != x:
                return (x, y)
    return None


def _involutive_witness(q: FiniteQuandle):
    t = q.table
    for x in range(q.size):
        rx = t[x]
        for y in range(q.size):
            if rx[rx[y]] != y:
                return (x, y)
    return None


def _noncommuting_rows(q: FiniteQuandle):
    t = q.table
    n = q.size
    for x in range(n):
        rx = t[x]
        for y in range(x + 1, n):
            ry = t[y]
            if any(rx[ry[i]] != ry[rx[i]] for i in range(n)):
                return (x, y)
    return None


def _noncommuting_composites(generator_of):
    """First pair of labelled permutations that fail to commute.

    generator_of maps a composite tuple to the point pair that first
    produced it; returns a flat 4-tuple of points or None.
    """
    items = list(generator_of.items())
    n = len(items[0][0]) if items else 0
    for i in range(len(items)):
        gi, pi = items[i]
        for j in range(i + 1, len(items)):
            gj, pj = items[j]
            if any(gi[gj[x]] != gj[gi[x]] for x in range(n)):
                return pi + pj
    return None


@dataclass(frozen=True)
class PropertyReport:
    """All property flags of one quandle, with counterexample witnesses.

    homogeneous is None when the automorphism cap was exceeded; every
    other flag is always decided.  witnesses maps the name of each failed
    property to a tuple of points exhibiting the failure.
    """

    connected: bool
    homogeneous: bool | None
    flat: bool
    medial: bool
    crossed: bool
    involutive: bool
    abelian_inn: bool
    components: tuple[tuple[int, ...], ...]
    witnesses: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "connected": self.connected,
            "homogeneous": self.homogeneous,
            "flat": self.flat,
            "medial": self.medial,
            "crossed": self.crossed,
            "involutive": self.involutive,
            "abelian_inn": self.abelian_inn,
            "components": [list(c) for c in self.components],
            "witnesses": {k: list(v) for k, v in sorted(self.witnesses.items())},
        }


def property_report(
    q: FiniteQuandle,
    *,
    point_cap: int = DEFAULT_AUT_POINT_CAP,
    element_cap: int = DEFAULT_ELEMENT_CAP,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> PropertyReport:
    """Compute every property flag; homogeneity falls back to unknown (None)
    when the quandle is above the automorphism cap."""
    n = q.size
    t = q.table
    witnesses = {}

    components = connected_components(q)
    connected = len(components) == 1
    if not connected:
        witnesses["connected"] = (components[0][0], components[1][0])

    crossed_w = _crossed_witness(q)
    if crossed_w:
        witnesses["crossed"] = crossed_w
    involutive_w = _involutive_witness(q)
    if involutive_w:
        witnesses["involutive"] = involutive_w
    abelian_w = _noncommuting_rows(q)
    if abelian_w:
        witnesses["abelian_inn"] = abelian_w

    pair_products = {}
    displacement_products = {}
    inverses = []
    for row in t:
        inv = [0] * n
        for y, v in enumerate(row):
            inv[v] = y
        inverses.append(tuple(inv))
    for x in range(n):
        rx = t[x]
        for y in range(n):
            ry = t[y]
            prod = tuple(rx[ry[i]] for i in range(n))
            pair_products.setdefault(prod, (x, y))
            ryi = inverses[y]
            disp = tuple(rx[ryi[i]] for i in range(n))
            displacement_products.setdefault(disp, (x, y))
    flat_w = _noncommuting_composites(pair_products)
    if flat_w:
        witnesses["flat"] = flat_w
    medial_w = _noncommuting_composites(displacement_products)
    if medial_w:
        witnesses["medial"] = medial_w

    homogeneous: bool | None
    try:
        aut = automorphism_group(
            q, point_cap=point_cap, element_cap=element_cap, node_budget=node_budget
        )
        orbits = aut.orbits()
        homogeneous = len(orbits) == 1
        if not homogeneous:
            witnesses["homogeneous"] = (orbits[0][0], orbits[1][0])
    except ResourceLimitError:
        homogeneous = None

    return PropertyReport(
        connected=connected,
        homogeneous=homogeneous,
        flat=flat_w is None,
        medial=medial_w is None,
        crossed=crossed_w is None,
        involutive=involutive_w is None,
        abelian_inn=abelian_w is None,
        components=components,
        witnesses=witnesses,
    )


class GraphReconstruction(NamedTuple):
    graph: SimpleGraph
    relabeling: PointMap


def to_graph(q: FiniteQuandle) -> GraphReconstruction:
    """Rebuild a graph from a crossed quandle whose components are all pairs.

    Vertices are the components in order of minimum point; two distinct
    components are joined iff the symmetry at one moves the other.  The
    returned relabeling sends each point to its index in the rebuilt
    graph's quandle, and is an isomorphism onto from_graph(graph).
    """
    crossed_w = _crossed_witness(q)
    if crossed_w:
        raise NotCrossedError(crossed_w)
    components = connected_components(q)
    for comp in components:
        if len(comp) != 2:
            raise BadComponentSizeError(comp)
    t = q.table
    m = len(components)
    edges = []
    for i in range(m):
        pi = components[i][0]
        for j in range(i + 1, m):
            qj0, qj1 = components[j]
            if t[pi][qj0] == qj1:
                edges.append((i, j))
    labels = ["{" + f"{a},{b}" + "}" for a, b in components]
    graph = SimpleGraph(m, edges, labels=labels)
    images = [0] * q.size
    for v, (p0, p1) in enumerate(components):
        images[p0] = 2 * v
        images[p1] = 2 * v + 1
    return GraphReconstruction(graph, PointMap(q.size, q.size, tuple(images)))


@dataclass(frozen=True)
class Characterization:
    """Verdict on whether a quandle arises from a vertex-transitive graph.

    The quandle is of that form iff all three flags hold; when the
    components and crossing conditions hold the witness graph is included
    and its vertex-transitivity is checked against homogeneity, raising
    VerificationError on any mismatch.
    """

    components_size_two: bool
    crossed: bool
    homogeneous: bool | None
    graph: SimpleGraph | None = None
    relabeling: PointMap | None = None
    graph_vertex_transitive: bool | None = None

    @property
    def matches(self) -> bool:
        return bool(self.components_size_two and self.crossed and self.homogeneous)


def characterize(
    q: FiniteQuandle,
    *,
    point_cap: int = DEFAULT_AUT_POINT_CAP,
    element_cap: int = DEFAULT_ELEMENT_CAP,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Characterization:
    components = connected_components(q)
    size_two = all(len(c) == 2 for c in components)
    crossed = _crossed_witness(q) is None
    aut = automorphism_group(
        q, point_cap=point_cap, element_cap=element_cap, node_budget=node_budget
    )
    homogeneous = aut.is_transitive()
    graph = relabeling = vertex_transitive = None
    if size_two and crossed:
        graph, relabeling = to_graph(q)
        vertex_transitive = is_vertex_transitive(graph)
        if vertex_transitive != homogeneous:
            raise VerificationError(
                "graph vertex-transitivity disagrees with quandle homogeneity"
            )
    return Characterization(
        components_size_two=size_two,
        crossed=crossed,
        homogeneous=homogeneous,
        graph=graph,
        relabeling=relabeling,
        graph_vertex_transitive=vertex_transitive,
    )


@dataclass(frozen=True)
class GroupChain:
    """The four nested symmetry groups with their orders, inclusion-verified."""

    displacement: PermGroup
    even_inner: PermGroup
    inner: PermGroup
    aut: PermGroup
    orders: tuple[int, int, int, int]


def group_chain(
    q: FiniteQuandle,
    *,
    point_cap: int = DEFAULT_AUT_POINT_CAP,
    element_cap: int = DEFAULT_ELEMENT_CAP,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> GroupChain:
    """Materialize displacement, even-inner, inner and automorphism groups
    and verify the inclusions between consecutive ones."""
    dis = displacement_group(q)
    even = even_inner_group(q)
    inn = inner_group(q)
    aut = automorphism_group(
        q, point_cap=point_cap, element_cap=element_cap, node_budget=node_budget
    )
    chain = [
        ("displacement", dis, "even-inner", even),
        ("even-inner", even, "inner", inn),
        ("inner", inn, "automorphism", aut),
    ]
    orders = []
    for name_small, small, name_big, big in chain:
        small_set = set(small.closure(element_cap))
        big_set = set(big.closure(element_cap))
        if not small_set <= big_set:
            raise VerificationError(
                f"{name_small} group is not contained in the {name_big} group"
            )
        if len(big_set) % len(small_set) != 0:
            raise VerificationError(
                f"order of the {name_small} group does not divide that of the {name_big} group"
            )
        orders.append(len(small_set))
    orders.append(aut.order(element_cap))
    return GroupChain(dis, even, inn, aut, tuple(orders))


@dataclass(frozen=True)
class CensusSurvivor:
    quandle: FiniteQuandle
    torus_orders: tuple[int, ...]


@dataclass(frozen=True)
class OrderCensus:
    order: int
    class_count: int
    survivors: tuple[CensusSurvivor, ...]


def _odd_factorizations(n: int):
    """Nondecreasing tuples of odd factors >= 3 with product n; (1,) for n = 1."""
    if n == 1:
        yield (1,)
        return

    def rec(remaining, smallest):
        if remaining == 1:
            yield ()
            return
        f = smallest
        while f <= remaining:
            if remaining % f == 0:
                for rest in rec(remaining // f, f):
                    yield (f,) + rest
            f += 2
        return

    yield from rec(n, 3)


def _matching_torus(q: FiniteQuandle, node_budget: int) -> tuple[int, ...] | None:
    for orders in _odd_factorizations(q.size):
        torus = discrete_torus(orders)
        if find_isomorphism(q, torus, node_budget=node_budget) is not None:
            return orders
    return None


def flat_connected_census(
    max_order: int = 6, *, node_budget: int = DEFAULT_NODE_BUDGET
) -> list[OrderCensus]:
    """Enumerate all classes up to max_order and keep the flat connected ones.

    Every survivor must have odd order and be isomorphic to a direct
    product of odd dihedral quandles; a survivor without such a match
    raises VerificationError, so a clean return is itself the check.
    """
    if not isinstance(max_order, int) or isinstance(max_order, bool) or not 1 <= max_order <= 6:
        raise InputError(f"census order must be between 1 and 6, got {max_order!r}")
    out = []
    for n in range(1, max_order + 1):
        classes = enumerate_quandles(n)
        survivors = []
        for q in classes:
            if not inner_group(q).is_transitive():
                continue
            if not even_inner_group(q).is_abelian():
                continue
            if n % 2 == 0:
                raise VerificationError(
                    f"flat connected quandle of even order {n} found"
                )
            orders = _matching_torus(q, node_budget)
            if orders is None:
                raise VerificationError(
                    f"flat connected quandle of order {n} matches no odd torus"
                )
            survivors.append(CensusSurvivor(q, orders))
        out.append(OrderCensus(n, len(classes), tuple(survivors)))
    return out
