import math

import pytest

import leafspan as ls


def test_graph6_round_trip():
    g = ls.parse_graph6("D?{")
    assert g.order == 5
    assert g.edge_count == 4
    assert ls.format_graph6(g) == "D?{"
    assert ls.format_graph6(ls.complete(2)) == "A_"
    with pytest.raises(ValueError):
        ls.parse_graph6("")


def test_constructors():
    h = ls.join(ls.complete(1), ls.disjoint_union(ls.complete(3), ls.complete(1)))
    assert h == ls.build_extremal(5, 1)
    assert h.edge_count == 7
    assert ls.min_degree(h) == 1
    assert not ls.is_connected(ls.disjoint_union(ls.complete(2), ls.complete(2)))
    assert ls.distances(ls.path(3))[0][2] == 2


def test_spectra():
    assert ls.spectral_radius(ls.complete(6), ls.MatrixKind.ADJACENCY) == pytest.approx(5.0, abs=1e-10)
    p3 = ls.spectral_radius(ls.path(3), ls.MatrixKind.DISTANCE)
    assert p3 == pytest.approx(1 + math.sqrt(3), abs=1e-10)
    rows = ls.build_matrix(ls.complete(3), ls.MatrixKind.SIGNLESS_LAPLACIAN)
    assert rows == [[2, 1, 1], [1, 2, 1], [1, 1, 2]]
    assert ls.matrix_spectral_radius(rows) == pytest.approx(4.0)


def test_extremal_polynomials():
    assert ls.char_poly(5, 1, ls.MatrixKind.ADJACENCY) == [1, -2, -4, 2]
    assert ls.char_poly(2, 1, ls.MatrixKind.DISTANCE) == [1, 0, -1]
    root = ls.largest_root([1, -2, -4, 2], 3.0)
    assert root == pytest.approx(3.0861, abs=1e-4)
    h = ls.build_extremal(9, 2)
    for kind in (ls.MatrixKind.ADJACENCY, ls.MatrixKind.DISTANCE_SIGNLESS_LAPLACIAN):
        assert ls.extremal_radius(9, 2, kind) == pytest.approx(ls.spectral_radius(h, kind), abs=1e-8)
    assert all(b["holds"] for b in ls.check_bounds(12, 1) if b["applicable"])


def test_structural_and_trees():
    star = ls.star(4)
    witness = ls.check_condition(star, 1, 1)
    assert witness["S"] == [0] and witness["i_count"] == 4
    assert ls.check_condition(ls.cycle(5)) is None
    found = ls.find_spanning_tree_leaf_distance(ls.cycle(5), 4)
    assert found["status"] == "found"
    assert found["tree"]["leaf_distance"] == 4
    assert ls.find_spanning_tree_leaf_degree(star, 1)["status"] == "none"
    assert ls.hamilton_path_extremal(6, 3)["leaf_distance"] == 5


def test_verdicts():
    assert ls.edge_bound(5, 1) == (7, 1)
    h = ls.build_extremal(8, 1)
    v = ls.evaluate(h, 1, "adjacency", oracle=True)
    assert v["guarantee"] and v["equality_case"] and v["oracle_confirmed"]
    assert not ls.evaluate(h, 1, "distance")["order_ok"]
    report = ls.lemma_suite(seed=3, trials=20)
    assert report["passed"]
