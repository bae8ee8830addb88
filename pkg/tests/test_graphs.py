"""Pairing-model sampling, girth reports, and file formats."""

import math
from fractions import Fraction

import pytest

from cubicmai import graphs
from cubicmai.graphs import (DEFAULT_SEED, Multigraph, enumerate_pairings,
                             estimate_survival, girth, girth_at_least,
                             girth_survival, project, read_edge_list,
                             read_pairing, sample_girth_conditioned,
                             sample_pairing, validate_cycle_witness,
                             write_edge_list, write_pairing)


def test_enumerate_pairings_double_factorial():
    # 3n = 6 points pair up in 5!! = 15 perfect matchings
    ps = list(enumerate_pairings(2))
    assert len(ps) == 15
    assert len(set(p.pairs for p in ps)) == 15
    for p in ps:
        p.validate()


def test_sampling_is_deterministic():
    a = sample_pairing(20, DEFAULT_SEED)
    b = sample_pairing(20, DEFAULT_SEED)
    c = sample_pairing(20, DEFAULT_SEED + 1)
    assert a.pairs == b.pairs
    assert a.pairs != c.pairs


def test_projection_is_cubic():
    g = project(sample_pairing(30, 5))
    assert g.n == 30
    assert g.degrees() == [3] * 30


def test_odd_n_rejected():
    with pytest.raises(ValueError):
        sample_pairing(7, 1)


def test_girth_witness_is_valid():
    for seed in range(20):
        g = project(sample_pairing(24, seed))
        rep = girth(g)
        assert validate_cycle_witness(g, rep)
        if math.isfinite(rep.girth):
            assert girth_at_least(g, int(rep.girth))
            assert not girth_at_least(g, int(rep.girth) + 1)


def test_girth_survival_closed_forms():
    assert girth_survival(3) == pytest.approx(math.exp(-2), rel=1e-12)
    assert girth_survival(4) == pytest.approx(math.exp(-10 / 3), rel=1e-12)
    assert girth_survival(5) == pytest.approx(math.exp(-2 - 4 / 3 - 2), rel=1e-12)


def test_estimate_survival_matches_limit_loosely():
    p, stderr = estimate_survival(400, 3, 400, seed=11)
    assert 0.0 <= p <= 1.0
    assert abs(p - math.exp(-2)) <= 5 * max(stderr, 1e-3)


def test_girth_conditioned_sampling():
    g, attempts = sample_girth_conditioned(30, 5, seed=3)
    assert attempts >= 1
    assert girth_at_least(g, 5)
    assert g.is_simple()


def test_rejection_cap():
    with pytest.raises(graphs.SamplingError):
        sample_girth_conditioned(10, 7, seed=1, max_attempts=2)


def test_edge_list_round_trip(tmp_path, petersen):
    path = tmp_path / "g.txt"
    write_edge_list(petersen, path)
    again = read_edge_list(path)
    assert again.n == petersen.n
    assert sorted(map(sorted, again.edges)) == sorted(map(sorted, petersen.edges))
    # 1-indexed on disk
    lines = path.read_text().splitlines()
    assert lines[0] == "10 15"
    assert all(int(t) >= 1 for line in lines[1:] for t in line.split())


def test_pairing_round_trip(tmp_path):
    p = sample_pairing(12, 9)
    path = tmp_path / "p.txt"
    write_pairing(p, path)
    q = read_pairing(path)
    assert q.n == p.n
    assert sorted(q.pairs) == sorted(p.pairs)


def test_edge_list_range_check(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3 1\n1 5\n")
    with pytest.raises(ValueError):
        read_edge_list(path)


def test_multigraph_classification():
    g = Multigraph.from_edges(3, [(0, 0), (1, 2), (1, 2)])
    assert g.loops() == [0]
    assert g.parallel_pairs() == [(1, 2)]
    assert not g.is_simple()
