import itertools
import random

import pytest

from quandles import (
    AxiomError,
    FiniteQuandle,
    InputError,
    PointMap,
    ResourceLimitError,
    canonical_table,
    dihedral,
    direct_product,
    enumerate_quandles,
    find_isomorphism,
    from_graph,
    is_homomorphism,
    is_subquandle,
    quandle_from_dict,
    quandle_to_dict,
    restrict,
    trivial,
    verify_axioms,
)
from quandles import axis_quandle, graphs

from helpers import geometric_dihedral_table, naive_quandle_classes


# ---------------------------------------------------------------- axioms

def test_trivial_table_passes():
    report = verify_axioms([[0, 1, 2]] * 3)
    assert report.ok and report.first_violation is None


def test_broken_diagonal_fails_q1():
    report = verify_axioms([[1, 0, 2], [2, 1, 0], [1, 0, 2]])
    assert not report.q1_ok
    assert report.first_violation == ("Q1", (0,))


def test_dihedral3_matches_geometric_reflections():
    table = geometric_dihedral_table(3)
    assert table == [[0, 2, 1], [2, 1, 0], [1, 0, 2]]
    assert verify_axioms(table).ok


def test_q2_failure_reports_duplicate():
    report = verify_axioms([[0, 0, 2], [0, 1, 2], [0, 1, 2]])
    assert not report.q2_ok
    assert report.first_violation == ("Q2", (0, 0, 1))


def test_q3_failure_reports_triple():
    # two flips and an identity row satisfy Q1 and Q2 but break Q3
    report = verify_axioms([[0, 2, 1], [2, 1, 0], [0, 1, 2]])
    assert report.q1_ok and report.q2_ok and not report.q3_ok
    x, y, z = report.first_violation[1]
    t = [[0, 2, 1], [2, 1, 0], [0, 1, 2]]
    assert t[x][t[y][z]] != t[t[x][y]][t[x][z]]


def test_malformed_tables_raise_not_report():
    with pytest.raises(InputError):
        verify_axioms([[0, 1], [0, 1, 2]])
    with pytest.raises(InputError):
        verify_axioms([[0, 3], [1, 0]])
    with pytest.raises(InputError):
        verify_axioms([])
    with pytest.raises(AxiomError):
        FiniteQuandle([[1, 0], [0, 1]])
    # unchecked skips the axiom gate but not the shape gate
    q = FiniteQuandle([[1, 0], [0, 1]], unchecked=True)
    assert q.size == 2
    with pytest.raises(InputError):
        FiniteQuandle([[0, 2], [1, 0]], unchecked=True)


# ---------------------------------------------------------- homomorphisms

def test_identity_is_homomorphism():
    d3 = dihedral(3)
    assert is_homomorphism(PointMap.identity(3), d3, d3)


def test_constant_maps_into_trivial_are_homomorphisms():
    d3 = dihedral(3)
    t4 = trivial(4)
    for z in range(4):
        assert is_homomorphism(PointMap(3, 4, (z, z, z)), d3, t4)


def test_sign_change_map_from_complete_graph_quandle_to_axes():
    # (v_i, a) at index 2i+a goes to (-1)^a e_i, also at index 2i+a
    for n in range(1, 5):
        qg = from_graph(graphs.complete(n))
        ax = axis_quandle(n)
        f = PointMap(2 * n, 2 * n, tuple(2 * i + a for i in range(n) for a in (0, 1)))
        assert is_homomorphism(f, qg, ax)
        assert f.is_bijective()


def test_homomorphism_size_mismatch():
    with pytest.raises(InputError):
        is_homomorphism(PointMap(3, 3, (0, 1, 2)), dihedral(4), dihedral(4))


# ------------------------------------------------------------ isomorphism

def test_self_isomorphism_found():
    q = dihedral(5)
    f = find_isomorphism(q, q)
    assert f is not None and f.is_bijective()
    assert is_homomorphism(f, q, q)


def test_complete2_quandle_is_dihedral4():
    qk2 = from_graph(graphs.complete(2))
    f = find_isomorphism(qk2, dihedral(4))
    assert f is not None and f.is_bijective()
    assert is_homomorphism(f, qk2, dihedral(4))


def test_dihedral3_not_isomorphic_to_trivial3():
    d3, t3 = dihedral(3), trivial(3)
    assert find_isomorphism(d3, t3) is None
    # exhaustive check over all six bijections
    for images in itertools.permutations(range(3)):
        f = PointMap(3, 3, images)
        assert not is_homomorphism(f, d3, t3)


def test_isomorphism_is_symmetric():
    pairs = [
        (from_graph(graphs.complete(2)), dihedral(4)),
        (dihedral(3), trivial(3)),
        (axis_quandle(2), dihedral(4)),
        (dihedral(6), direct_product(dihedral(3), dihedral(2))),
    ]
    for a, b in pairs:
        assert (find_isomorphism(a, b) is None) == (find_isomorphism(b, a) is None)


def test_search_budget_is_an_error_not_a_no():
    q = trivial(5)
    with pytest.raises(ResourceLimitError):
        find_isomorphism(q, q, node_budget=3)


# ------------------------------------------------------------ subquandles

def test_singletons_are_subquandles():
    q = dihedral(5)
    for x in range(5):
        assert is_subquandle(q, {x})


def test_even_points_of_dihedral4():
    assert is_subquandle(dihedral(4), {0, 2})
    assert restrict(dihedral(4), {0, 2}) == trivial(2)


def test_adjacent_pair_of_dihedral3_is_not_closed():
    assert not is_subquandle(dihedral(3), {0, 1})


def test_empty_subset_is_an_error():
    with pytest.raises(InputError):
        is_subquandle(dihedral(3), set())
    with pytest.raises(InputError):
        restrict(dihedral(3), [])
    with pytest.raises(InputError):
        restrict(dihedral(3), [0, 1])


def test_restricted_subquandle_passes_axioms():
    q = from_graph(graphs.cycle(5))
    comp = (0, 1)
    assert is_subquandle(q, comp)
    assert verify_axioms(restrict(q, comp).table).ok


# ---------------------------------------------------------- direct product

def test_product_with_one_point_quandle():
    q = dihedral(5)
    assert direct_product(trivial(1), q).table == q.table


def test_product_sizes_multiply_and_projections_are_homomorphisms():
    q1, q2 = dihedral(3), dihedral(5)
    prod = direct_product(q1, q2)
    assert prod.size == 15
    p1 = PointMap(15, 3, tuple(i // 5 for i in range(15)))
    p2 = PointMap(15, 5, tuple(i % 5 for i in range(15)))
    assert is_homomorphism(p1, prod, q1)
    assert is_homomorphism(p2, prod, q2)


def test_product_of_dihedrals_passes_axioms():
    prod = direct_product(dihedral(3), dihedral(3))
    assert prod.size == 9
    assert verify_axioms(prod.table).ok


# ------------------------------------------------------------- enumeration

def test_enumeration_counts_small_orders():
    assert len(enumerate_quandles(1)) == 1
    assert len(enumerate_quandles(2)) == 1
    assert len(enumerate_quandles(3)) == 3
    assert len(enumerate_quandles(4)) == 7


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_matches_naive_oracle(n):
    ours = enumerate_quandles(n)
    oracle = naive_quandle_classes(n)
    assert len(ours) == len(oracle)
    # bijective matching: each oracle class hits exactly one of ours
    matches = []
    for table in oracle:
        hits = [
            i
            for i, q in enumerate(ours)
            if find_isomorphism(FiniteQuandle(table), q) is not None
        ]
        assert len(hits) == 1
        matches.append(hits[0])
    assert sorted(matches) == list(range(len(ours)))


def test_enumeration_output_is_canonical_and_valid():
    for n in (3, 4):
        for q in enumerate_quandles(n):
            assert verify_axioms(q.table).ok
            assert canonical_table(q) == q.table


def test_enumeration_reps_pairwise_nonisomorphic():
    qs = enumerate_quandles(4)
    for i in range(len(qs)):
        for j in range(i + 1, len(qs)):
            assert find_isomorphism(qs[i], qs[j]) is None


def test_enumeration_rejects_out_of_range():
    for bad in (0, 7, -1, "3"):
        with pytest.raises(InputError):
            enumerate_quandles(bad)


def test_known_members_appear_at_their_order():
    qs3 = enumerate_quandles(3)
    assert any(find_isomorphism(q, dihedral(3)) for q in qs3)
    assert any(find_isomorphism(q, trivial(3)) for q in qs3)
    qs4 = enumerate_quandles(4)
    assert any(find_isomorphism(q, dihedral(4)) for q in qs4)


# ---------------------------------------------------------------- JSON

def test_json_round_trip():
    q = dihedral(4)
    d = quandle_to_dict(q)
    assert quandle_from_dict(d) == q
    labeled = FiniteQuandle(q.table, labels=["a", "b", "c", "d"])
    back = quandle_from_dict(quandle_to_dict(labeled))
    assert back.labels == ("a", "b", "c", "d")


def test_json_rejects_non_quandles_unless_unchecked():
    bad = {"size": 2, "table": [[1, 0], [0, 1]]}
    with pytest.raises(AxiomError):
        quandle_from_dict(bad)
    assert quandle_from_dict(bad, unchecked=True).size == 2


def test_json_shape_errors():
    for d in (
        [],
        {"size": 2},
        {"size": "2", "table": [[0]]},
        {"size": 2, "table": [[0, 1]]},
        {"size": 1, "table": [[0]], "labels": ["a", "b"]},
    ):
        with pytest.raises(InputError):
            quandle_from_dict(d)


# ------------------------------------------------------------- properties

def test_random_relabelings_stay_isomorphic():
    rng = random.Random(7)
    base = from_graph(graphs.cycle(4))
    n = base.size
    for _ in range(5):
        sigma = list(range(n))
        rng.shuffle(sigma)
        inv = [0] * n
        for x, y in enumerate(sigma):
            inv[y] = x
        table = [
            [sigma[base.table[inv[i]][inv[j]]] for j in range(n)] for i in range(n)
        ]
        other = FiniteQuandle(table)
        f = find_isomorphism(base, other)
        assert f is not None
        assert is_homomorphism(f, base, other) and f.is_bijective()
        assert canonical_table(base) == canonical_table(other)
