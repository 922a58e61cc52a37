import math
import pathlib

import numpy as np
import pytest

import algdist

CORPUS = pathlib.Path(__file__).resolve().parents[2] / "data" / "corpus"


def p3():
    return algdist.Graph(3, [(0, 1, 1.0), (1, 2, 1.0)])


def test_graph_basics():
    g = p3()
    assert g.num_vertices == 3
    assert g.num_edges == 2
    assert g.weighted_degrees() == [1.0, 2.0, 1.0]
    assert g.is_connected()
    assert g.is_bipartite()
    with pytest.raises(ValueError):
        algdist.Graph(2, [(0, 0, 1.0)])


def test_p3_closed_form():
    cfg = algdist.RelaxationConfig(sweeps=2, runs=1)
    x = algdist.relax_from(p3(), np.array([1.0, 0.0, 0.0]), cfg)
    assert x.shape == (1, 3)
    np.testing.assert_allclose(x[0], [0.375, 0.25, 0.125], atol=1e-15)
    d = algdist.edge_distances(p3(), x, 1.0)
    np.testing.assert_allclose(d["values"], [0.125, 0.125])
    assert algdist.normalized_distance(0.125, 0.5, 2) == pytest.approx(0.5)


def test_relax_defaults_and_determinism():
    g = algdist.Graph(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 2.0), (0, 2, 1.0)])
    a = algdist.relax(g, algdist.RelaxationConfig(seed=3))
    b = algdist.relax(g, algdist.RelaxationConfig(seed=3, workers=4))
    assert a.shape == (10, 4)
    assert np.array_equal(a, b)
    start = algdist.initial_vectors(4, 10, 3)
    assert np.all((start >= -0.5) & (start < 0.5))


def test_pencil_and_iteration_matrix():
    mu, v = algdist.pencil_eigen(p3())
    np.testing.assert_allclose(mu, [0.0, 1.0, 2.0], atol=1e-12)
    d = np.diag([1.0, 2.0, 1.0])
    np.testing.assert_allclose(v.T @ d @ v, np.eye(3), atol=1e-10)
    h = algdist.iteration_matrix(p3(), "jor", 0.5)
    np.testing.assert_allclose(h, [[0.5, 0.5, 0], [0.25, 0.5, 0.25], [0, 0.5, 0.5]])
    assert algdist.stability_root(0.5, 1) == pytest.approx(0.43908711514625026, abs=1e-10)


def test_matching():
    k3 = algdist.Graph(3, [(0, 1, 3.0), (0, 2, 2.0), (1, 2, 1.0)])
    w = [3.0, 2.0, 1.0]
    assert algdist.greedy_matching(k3, w)["weight_original"] == 3.0
    assert algdist.path_growing_matching(k3, w)["weight_original"] == 3.0
    assert algdist.brute_force_matching(k3, w)["weight_original"] == 3.0
    a, s = algdist.matching_preprocess(p3(), [0.25, 0.25])
    assert a == [4.0, 8.0, 4.0]
    assert s == [8.0, 8.0]


def test_hypergraph_pipeline():
    h = algdist.Hypergraph(3, [[0, 1], [1, 2]], [5.0, 1.0])
    assert algdist.evaluate_cut(h, [0, 0, 1]) == 1.0
    assert algdist.bipartite_expand(h).num_vertices == 5
    spreads = algdist.hyperedge_distances(h, algdist.RelaxationConfig(seed=1))
    assert len(spreads) == 2 and all(s >= 0 for s in spreads)
    part = algdist.fallback_bisect(h, imbalance=0.5)
    assert sorted(set(part)) == [0, 1]


def test_corpus_experiments():
    g = algdist.read_matrix_market(CORPUS / "grid2d_40x40.mtx")
    assert g.num_edges == 3120
    rep = algdist.matching_experiment(g, repetitions=3)
    assert len(rep["weight_ratios"]) == 3
    assert math.isfinite(rep["mean_weight_ratio"])
    h = algdist.read_hgr(CORPUS / "netlist_400_weighted.hgr")
    hrep = algdist.hpart_experiment(h, repetitions=2, imbalance=0.1)
    assert hrep["balance_violations"] == 0


def test_cli_in_process():
    code, out, _ = algdist.run_cli(["distance", str(CORPUS / "grid2d_40x40.mtx"), "--seed", "2"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# algdist distance input=grid2d_40x40.mtx omega=0.5 k=20 R=10 p=inf")
    assert lines[1] == "i,j,rho"
    assert len(lines) == 2 + 3120
    code, _, err = algdist.run_cli(["distance", "missing.mtx"])
    assert code != 0 and "missing.mtx" in err
