import json

import pytest

import hskernel as hk


def test_hgr_round_trip():
    h = hk.parse_hgr("p hs 3 2 2\n1 2\n2 3\n")
    assert h.n == 3 and h.d == 2 and h.m == 2
    assert h.edges == [[1, 2], [2, 3]]
    assert hk.parse_hgr(hk.write_hgr(h)) == h


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        hk.parse_hgr("p hs x\n")


def test_gen_random_is_deterministic():
    a = hk.gen_random(10, 20, 3, seed=7)
    b = hk.gen_random(10, 20, 3, seed=7)
    assert a == b
    assert a.m == 20 and all(len(e) == 3 for e in a.edges)


def test_kernelize_fk_known_trace():
    h = hk.Hypergraph()
    h.n, h.d, h.edges = 3, 1, [[1], [2], [3], [1]]
    out, stats = hk.kernelize_fk(h, k=1)
    assert out.edges == [[1], [2]]
    assert stats.stage == "fk"
    assert stats.edges_in == 4 and stats.edges_out == 2
    assert stats.k_used == 1


def test_kernelize_fk_greedy_default():
    h = hk.gen_random(8, 15, 2, seed=3)
    out, stats = hk.kernelize_fk(h)
    assert stats.k_used == hk.greedy_upper_bound(h)[0]
    assert len(out.edges) <= len(h.edges)


def test_kernelize_bev_known_trace():
    h = hk.Hypergraph()
    h.n, h.d, h.edges = 4, 2, [[1, 2], [1, 3], [1, 4]]
    out, stats = hk.kernelize_bev(h, k=1)
    assert out.edges == [[1, 2], [1, 3]]
    assert stats.stage == "bev"


def test_store_backends_agree():
    h = hk.gen_random(9, 25, 3, seed=11)
    outs = [hk.kernelize_fk(h, k=2, store=s)[0] for s in ("array", "hash", "tree")]
    assert outs[0] == outs[1] == outs[2]


def test_reduce_weihe():
    h = hk.Hypergraph()
    h.n, h.d, h.edges = 3, 3, [[1, 2], [1, 2, 3]]
    out, stats = hk.reduce_weihe(h)
    assert out.edges == [[1]]
    assert stats.stage == "weihe"
    assert stats.deleted_vertices >= 1
    assert stats.k_used is None


def test_bounds_and_verify():
    tri = hk.Hypergraph()
    tri.n, tri.d, tri.edges = 3, 2, [[1, 2], [1, 3], [2, 3]]
    k, vertices = hk.greedy_upper_bound(tri)
    assert k == len(vertices) == 2
    assert hk.exact_min_hitting_set(tri) == 2
    assert hk.exact_min_hitting_set(tri, budget=1) is None
    assert hk.verify_hitting_set(tri, vertices)
    assert not hk.verify_hitting_set(tri, [3])


def test_run_pipeline_and_stats_json():
    h = hk.gen_random(10, 30, 2, seed=5)
    out, stages = hk.run_pipeline(h, "shuffle:seed=1,fk:k=2,weihe", seed=0)
    assert [s.stage for s in stages] == ["shuffle", "fk", "weihe"]
    assert stages[1].parameters.startswith("k=2")
    assert out.m <= h.m
    parsed = json.loads(hk.stats_to_json(stages))
    assert len(parsed) == 3
    assert parsed[0]["stage"] == "shuffle"


def test_pipeline_error_is_value_error():
    h = hk.gen_random(5, 5, 2, seed=1)
    with pytest.raises(ValueError):
        hk.run_pipeline(h, "nope")


def test_cvd_to_hs3():
    h = hk.cvd_to_hs3("p graph 4 3\n1 2\n2 3\n3 4\n")
    assert h.d == 3 and h.n == 4
    assert h.edges == [[1, 2, 3], [2, 3, 4]]


def test_shuffle_edges_preserves_multiset():
    h = hk.gen_random(10, 40, 2, seed=9)
    s = hk.shuffle_edges(h, 4)
    assert sorted(s.edges) == sorted(h.edges)
    assert hk.shuffle_edges(h, 4) == s
