import math

import numpy as np
import pytest

from normsum import (
    DomainViolationError,
    KOutOfRangeError,
    MissingParamError,
    SplitMix64,
    adjacency_matrix,
    bound_value,
    check_bound,
    complete_graph,
    conference_eigenvalues,
    cycle_graph,
    empty_graph,
    equality_analysis,
    graph_from_edges,
    kyfan_extremal_matrix,
    opnorm_extremal_matrix,
    paley_graph,
    weyl_complement_check,
)


def random_unit_symmetric(rng, n):
    a = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            a[i, j] = a[j, i] = rng.next_double()
    return a


def test_bound_value_closed_forms():
    assert bound_value("main", 9) == 32
    assert bound_value("koolen_moulton", 4) == 6
    assert abs(bound_value("gutman_zhou", 9) - (9 * math.sqrt(2) + 8 * math.sqrt(8))) < 1e-12
    assert bound_value("shifted", 9) == 9 + 8 * 3
    assert abs(bound_value("kyfan", 8, m=8, k=5) - 24) < 1e-12
    assert abs(bound_value("opnorm", 2, m=2) - math.sqrt(8)) < 1e-12


def test_bound_value_validation():
    with pytest.raises(ValueError):
        bound_value("nope", 5)
    with pytest.raises(ValueError):
        bound_value("main", 0)
    with pytest.raises(MissingParamError):
        bound_value("kyfan", 5, k=2)
    with pytest.raises(MissingParamError):
        bound_value("kyfan", 5, m=5)
    with pytest.raises(MissingParamError):
        bound_value("opnorm", 5)
    with pytest.raises(KOutOfRangeError):
        bound_value("kyfan", 5, m=5, k=1)
    with pytest.raises(KOutOfRangeError):
        bound_value("kyfan", 5, m=3, k=4)


def test_check_main_on_conference_graphs():
    v = check_bound("main", paley_graph(9))
    assert v.holds and v.equality
    assert abs(v.lhs - 32) <= 1e-9 and v.rhs == 32
    v13 = check_bound("main", paley_graph(13))
    assert v13.equality and abs(v13.slack) <= 1e-6


def test_check_main_on_complete_graph():
    v = check_bound("main", complete_graph(9))
    assert abs(v.lhs - 16) <= 1e-9
    assert v.rhs == 32
    assert v.holds and not v.equality


def test_check_main_cycle5_hits_bound():
    # C5 is self-complementary and conference, so equality holds at n = 5 too
    v = check_bound("main", cycle_graph(5))
    assert v.equality


def test_check_main_domain_validation():
    with pytest.raises(DomainViolationError):
        check_bound("main", np.array([[0, 2.0], [2.0, 0]]))  # entries above 1
    with pytest.raises(DomainViolationError):
        check_bound("main", np.array([[0, -0.1], [-0.1, 0]]))
    with pytest.raises(DomainViolationError):
        check_bound("main", np.array([[0.5, 0], [0, 0]]))  # nonzero diagonal
    with pytest.raises(DomainViolationError):
        check_bound("main", np.array([[0, 1.0], [0.5, 0]]))  # asymmetric
    with pytest.raises(DomainViolationError):
        check_bound("main", np.ones((2, 3)))  # not square


def test_check_shifted_allows_asymmetry():
    a = np.array([[0, 0.3, 0.9], [0.8, 0, 0.1], [0.0, 0.4, 0]])
    v = check_bound("shifted", a)
    assert v.holds
    assert v.rhs == 3 + 2 * math.sqrt(3)


def test_check_shifted_random_matrices_hold():
    rng = SplitMix64(12)
    for _ in range(50):
        n = 2 + rng.next_below(11)
        a = random_unit_symmetric(rng, n)
        assert check_bound("shifted", a).holds
        assert check_bound("main", a).holds


def test_check_kyfan_on_extremal():
    v = check_bound("kyfan", kyfan_extremal_matrix(5, 1, 1), k=5)
    assert v.equality and abs(v.lhs - 24) < 1e-8
    with pytest.raises(KOutOfRangeError):
        check_bound("kyfan", np.ones((3, 3)) / 2, k=1)
    with pytest.raises(MissingParamError):
        check_bound("kyfan", np.ones((3, 3)) / 2)


def test_check_opnorm_on_extremal():
    v = check_bound("opnorm", opnorm_extremal_matrix(4, 6, "columns"))
    assert v.equality
    # generic matrices hold strictly
    rng = SplitMix64(8)
    for _ in range(30):
        m, n = 2 + rng.next_below(6), 2 + rng.next_below(6)
        a = np.array([[rng.next_double() for _ in range(n)] for _ in range(m)])
        v = check_bound("opnorm", a)
        assert v.holds


def test_check_kyfan_random_matrices_hold():
    rng = SplitMix64(21)
    for _ in range(40):
        m, n = 3 + rng.next_below(8), 3 + rng.next_below(8)
        a = np.array([[rng.next_double() for _ in range(n)] for _ in range(m)])
        for k in (2, 3):
            assert check_bound("kyfan", a, k=k).holds


def test_verdict_fields_consistent():
    v = check_bound("main", cycle_graph(6))
    assert v.slack == v.rhs - v.lhs
    assert v.holds == (v.slack >= -v.tol)
    assert v.equality == (v.holds and abs(v.slack) <= v.eq_tol)
    d = v.to_json()
    assert d["kind"] == "main" and d["holds"] is True


def test_equality_analysis_conference():
    for q in (9, 13):
        r = equality_analysis(adjacency_matrix(paley_graph(q)))
        assert r.is_zero_one and r.row_sums_ok and r.col_sums_ok
        assert r.flat_tail_ok and r.conference_spectrum_ok and r.overall


def test_equality_analysis_cycle7():
    r = equality_analysis(adjacency_matrix(cycle_graph(7)))
    assert not r.row_sums_ok  # degree 2, needs 3
    assert not r.overall


def test_equality_analysis_petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    g = graph_from_edges(10, outer + spokes + inner)
    assert not equality_analysis(adjacency_matrix(g)).overall


def test_equality_analysis_non_zero_one_entries():
    n = 5
    a = np.full((n, n), 0.5) - 0.5 * np.eye(n)
    r = equality_analysis(a)
    assert not r.is_zero_one
    # fractional rows still sum to (n-1)/2 here
    assert r.row_sums_ok and r.col_sums_ok
    assert not r.overall


def test_equality_implies_shifted_equality():
    for q in (9, 13):
        a = adjacency_matrix(paley_graph(q))
        r = equality_analysis(a, tol=1e-6)
        assert r.overall
        v = check_bound("shifted", a)
        assert abs(v.slack) <= 10 * 1e-6


def test_equality_analysis_domain():
    with pytest.raises(DomainViolationError):
        equality_analysis(np.ones((3, 3)))  # nonzero diagonal
    with pytest.raises(DomainViolationError):
        equality_analysis(np.ones((2, 3)) * 0.5)


def test_conference_eigenvalues_guard():
    with pytest.raises(ValueError):
        conference_eigenvalues(8)
    vals = conference_eigenvalues(9)
    assert vals[0] == 4 and len(vals) == 9


def test_weyl_empty_graph_margins_zero():
    r = weyl_complement_check(empty_graph(6))
    assert r.ok
    assert len(r.margins) == 5
    assert max(abs(m) for m in r.margins) <= 1e-12


def test_weyl_conference_margins_zero():
    r = weyl_complement_check(paley_graph(9))
    assert r.ok
    assert max(abs(m) for m in r.margins) <= 1e-9


def test_weyl_random_graphs():
    rng = SplitMix64(77)
    from normsum import Graph

    for _ in range(50):
        n = 4 + rng.next_below(9)
        g = Graph(n=n, bits=rng.next_bits(n * (n - 1) // 2))
        r = weyl_complement_check(g)
        assert r.ok
        assert all(m <= r.tol for m in r.margins)


def test_weyl_domain():
    with pytest.raises(DomainViolationError):
        weyl_complement_check(np.array([[0, 1.0], [0.5, 0]]))


def test_main_improves_on_gutman_zhou():
    for n in range(7, 101):
        assert bound_value("main", n) < bound_value("gutman_zhou", n)
