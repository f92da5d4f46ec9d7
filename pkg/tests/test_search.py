import math

import numpy as np
import pytest

from normsum import (
    BadConfigError,
    Graph,
    KOutOfRangeError,
    OrderTooLargeError,
    SearchConfig,
    SearchResult,
    adjacency_matrix,
    bound_value,
    complement,
    exhaustive_max,
    local_search_max,
    property_sweep,
    srg_params,
    trace_norm,
)


def pair_value(g, objective="trace_sum", k=None):
    a = adjacency_matrix(g)
    b = adjacency_matrix(complement(g))
    if objective == "trace_sum":
        return trace_norm(a) + trace_norm(b)
    sa = np.sort(np.abs(np.linalg.eigvalsh(a.array)))[::-1]
    sb = np.sort(np.abs(np.linalg.eigvalsh(b.array)))[::-1]
    return float(sa[:k].sum() + sb[:k].sum())


def test_exhaustive_n2():
    res = exhaustive_max(2)
    assert abs(res.best_value - 2.0) < 1e-12
    assert res.evaluations == 2
    assert len(res.witnesses) == 2  # both graphs on 2 vertices achieve it
    assert not res.truncated
    assert res.method == "exhaustive" and res.seed is None


def test_exhaustive_n3():
    res = exhaustive_max(3)
    assert abs(res.best_value - (2 + 2 * math.sqrt(2))) < 1e-9
    assert res.evaluations == 8
    assert len(res.witnesses) == 6


def test_exhaustive_n5_finds_conference():
    res = exhaustive_max(5)
    assert abs(res.best_value - bound_value("main", 5)) < 1e-9
    assert len(res.witnesses) == 12
    for g in res.witnesses:
        assert srg_params(g) == srg_params(res.witnesses[0])


def test_exhaustive_witnesses_reach_reported_value():
    res = exhaustive_max(4)
    assert res.witnesses == tuple(sorted(res.witnesses, key=lambda g: g.bits))
    for g in res.witnesses:
        assert abs(pair_value(g) - res.best_value) < 1e-9


def test_exhaustive_kyfan_matches_brute_force():
    res = exhaustive_max(4, "kyfan_sum", k=2)
    best = max(pair_value(Graph(n=4, bits=b), "kyfan_sum", 2) for b in range(64))
    assert abs(res.best_value - best) < 1e-9


def test_exhaustive_order_cap():
    with pytest.raises(OrderTooLargeError):
        exhaustive_max(9)
    with pytest.raises(ValueError):
        exhaustive_max(0)


def test_exhaustive_n8_warns():
    # the scale warning fires before enumeration, so a bad k aborts cheaply
    with pytest.warns(UserWarning):
        with pytest.raises(KOutOfRangeError):
            exhaustive_max(8, "kyfan_sum")


def test_exhaustive_objective_validation():
    with pytest.raises(ValueError):
        exhaustive_max(4, "det_sum")
    with pytest.raises(KOutOfRangeError):
        exhaustive_max(4, "kyfan_sum")
    with pytest.raises(KOutOfRangeError):
        exhaustive_max(4, "kyfan_sum", k=9)
    with pytest.raises(KOutOfRangeError):
        exhaustive_max(4, "kyfan_sum", k=0)


def test_exhaustive_thread_determinism():
    a = exhaustive_max(6, threads=1)
    b = exhaustive_max(6, threads=3)
    assert a.best_value == b.best_value
    assert a.witnesses == b.witnesses
    assert a.evaluations == b.evaluations == 1 << 15


def test_objective_complement_symmetric():
    g = Graph(n=6, bits=0b101100111010011)
    assert abs(pair_value(g) - pair_value(complement(g))) < 1e-12


def test_search_config_validation():
    with pytest.raises(BadConfigError):
        SearchConfig(restarts=0)
    with pytest.raises(BadConfigError):
        SearchConfig(max_steps=0)
    with pytest.raises(BadConfigError):
        SearchConfig(cooling=1.0)
    with pytest.raises(BadConfigError):
        SearchConfig(cooling=0.0)
    with pytest.raises(BadConfigError):
        SearchConfig(temperature_initial=-1.0)
    with pytest.raises(BadConfigError):
        SearchConfig(seed=-1)


def test_local_order_cap():
    with pytest.raises(OrderTooLargeError):
        local_search_max(65)


def test_local_trivial_order():
    res = local_search_max(1, cfg=SearchConfig(restarts=1, max_steps=1))
    assert res.best_value == 0.0
    assert res.witnesses == (Graph(n=1, bits=0),)


def test_local_recovers_small_optimum():
    cfg = SearchConfig(restarts=10, max_steps=500, seed=3)
    res = local_search_max(5, cfg=cfg)
    exact = exhaustive_max(5).best_value
    assert res.best_value <= exact + 1e-9
    assert abs(res.best_value - exact) < 1e-6


def test_local_witnesses_reach_reported_value():
    cfg = SearchConfig(restarts=4, max_steps=300, seed=11)
    res = local_search_max(7, cfg=cfg)
    assert res.witnesses
    assert res.method == "local" and res.seed == 11
    for g in res.witnesses:
        assert abs(pair_value(g) - res.best_value) < 1e-9


def test_local_seed_determinism():
    cfg = SearchConfig(restarts=3, max_steps=200, seed=9)
    a = local_search_max(8, cfg=cfg, threads=1)
    b = local_search_max(8, cfg=cfg, threads=4)
    c = local_search_max(8, cfg=cfg)
    assert a.best_value == b.best_value == c.best_value
    assert a.witnesses == b.witnesses == c.witnesses
    assert a.evaluations == b.evaluations == c.evaluations


def test_search_result_json():
    res = exhaustive_max(3)
    d = res.to_json()
    assert d["objective"] == "trace_sum"
    assert d["method"] == "exhaustive"
    assert d["n"] == 3 and d["truncated"] is False
    assert isinstance(d["witnesses"], list)
    assert all(isinstance(w, str) for w in d["witnesses"])
    assert isinstance(res, SearchResult)


def test_property_sweep_clean_and_deterministic():
    rep = property_sweep(25, 5, (4, 10), ["main", "shifted"])
    rep2 = property_sweep(25, 5, (4, 10), ["main", "shifted"])
    assert rep.to_json() == rep2.to_json()
    assert rep.total_violations == 0
    assert [t.kind for t in rep.results] == ["main", "shifted"]
    for t in rep.results:
        assert t.trials == 25 and t.passes == 25 and t.violations == 0
        assert math.isfinite(t.worst_slack)
        assert t.worst_witness is not None


def test_property_sweep_shared_samples():
    # main_matrix and shifted draw from the same stream, so the worst
    # witness for one is a matrix the other also saw
    rep = property_sweep(10, 7, (3, 6), ["main_matrix", "shifted"])
    w0 = rep.results[0].worst_witness
    w1 = rep.results[1].worst_witness
    assert set(w0) == set(w1) == {"matrix"}


def test_property_sweep_all_kinds():
    rep = property_sweep(
        10, 1, (3, 8), ["main", "main_matrix", "shifted", "kyfan", "opnorm", "weyl"]
    )
    assert rep.total_violations == 0
    assert len(rep.results) == 6


def test_property_sweep_validation():
    with pytest.raises(ValueError):
        property_sweep(5, 0, (3, 6), ["nope"])
    with pytest.raises(ValueError):
        property_sweep(0, 0, (3, 6), ["main"])
    with pytest.raises(ValueError):
        property_sweep(5, 0, (9, 4), ["main"])
    with pytest.raises(ValueError):
        property_sweep(5, 0, (1, 4), ["main"])
    with pytest.raises(ValueError):
        property_sweep(5, -1, (3, 6), ["main"])
