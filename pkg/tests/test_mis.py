"""Exact independence, independent-set counting, and MAI decompositions."""

import itertools
import random

import mpmath
import pytest

from cubicmai.graphs import Multigraph, girth, girth_at_least, project, \
    sample_girth_conditioned, sample_pairing
from cubicmai.mis import (BudgetExceededError, alpha_exact,
                          audit_decomposition, build_aux_graph,
                          count_independent_sets, expand_aux_cycle, fib_bound,
                          mai_exact, mai_exhaustive, mai_multiplicity_check)


def path_graph(k: int) -> Multigraph:
    return Multigraph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Multigraph:
    return Multigraph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def brute_alpha(graph: Multigraph) -> int:
    adj = graph.adjacency_masks()
    loops = set(graph.loops())
    best = 0
    for mask in range(1 << graph.n):
        ok = True
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if v in loops or (adj[v] & mask):
                ok = False
                break
        if ok:
            best = max(best, bin(mask).count("1"))
    return best


def brute_count(graph: Multigraph) -> int:
    adj = graph.adjacency_masks()
    loops = set(graph.loops())
    total = 0
    for mask in range(1 << graph.n):
        ok = True
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if v in loops or (adj[v] & mask):
                ok = False
                break
        total += ok
    return total


def random_graph(rng: random.Random) -> Multigraph:
    n = rng.randint(1, 12)
    pairs = list(itertools.combinations(range(n), 2))
    edges = [e for e in pairs if rng.random() < rng.uniform(0.05, 0.6)]
    if rng.random() < 0.3 and n >= 2:   # occasional loop / parallel edge
        edges.append((rng.randrange(n), rng.randrange(n)))
        if edges[:-1]:
            edges.append(edges[0])
    return Multigraph.from_edges(n, edges)


def test_corpus_alpha_and_count_match_brute_force():
    rng = random.Random(20231113)
    for _ in range(50):
        g = random_graph(rng)
        aw = alpha_exact(g)
        assert aw.alpha == brute_alpha(g)
        # the returned witness is itself independent and of the right size
        assert len(aw.witness) == aw.alpha
        adj = g.adjacency_masks()
        for u in aw.witness:
            for v in aw.witness:
                assert not (adj[u] >> v) & 1
        assert count_independent_sets(g) == brute_count(g)


def test_petersen_alpha(petersen):
    assert alpha_exact(petersen).alpha == 4


def test_path_cycle_counts_match_fibonacci():
    fib = [0, 1]
    while len(fib) < 30:
        fib.append(fib[-1] + fib[-2])
    for k in range(1, 21):
        assert count_independent_sets(path_graph(k)) == fib[k + 2]
    for k in range(3, 21):
        # Lucas number L_k = F_{k-1} + F_{k+1}
        assert count_independent_sets(cycle_graph(k)) == fib[k - 1] + fib[k + 1]


def test_fib_bound_g8():
    fb = fib_bound(8)
    assert fb.s == 9
    with mpmath.workdps(40):
        assert abs(fb.value - float(mpmath.root(76, 9))) < 1e-14
    assert fb.value >= 1.618
    assert abs(fb.value - fb.closed_form()) < 1e-12


def test_budget_exceeded():
    g = project(sample_pairing(40, 1))
    with pytest.raises(BudgetExceededError):
        alpha_exact(g, budget=3)


def test_c6_mai_size():
    g = cycle_graph(6)
    aw = alpha_exact(g)
    assert aw.alpha == 3
    d = mai_exact(g, aw)
    assert len(d.A) == 3
    assert mai_exhaustive(g, aw.alpha) == 3


def test_mai_matches_exhaustive_oracle():
    hits = 0
    for n in (10, 12, 14, 16):
        for seed in range(4):
            g, _ = sample_girth_conditioned(n, 5, seed=seed * 101 + n)
            aw = alpha_exact(g)
            d = mai_exact(g, aw)
            assert len(d.A) == mai_exhaustive(g, aw.alpha)
            assert d.x == aw.alpha
            hits += 1
    assert hits == 16


def test_mai_rejects_bad_inputs():
    with pytest.raises(ValueError):
        g = Multigraph.from_edges(2, [(0, 1), (0, 1)])
        mai_exact(g, alpha_exact(g))
    g = cycle_graph(4)
    with pytest.raises(ValueError):
        mai_exact(g, alpha_exact(g))


def test_audit_zero_violations_on_samples():
    for seed in range(10):
        g, _ = sample_girth_conditioned(30, 5, seed=7000 + seed)
        aw = alpha_exact(g)
        d = mai_exact(g, aw)
        report = audit_decomposition(g, d)
        assert report.ok, report.to_json()
        js = report.to_json()
        assert {e["lemma_id"] for e in js} == {
            "M1_A_is_AI", "M2_contains_max_independent", "lemma4_B_is_AI",
            "eq6_t_minus_s", "lemma5_nonnegative", "lemma6_J_is_matching",
            "remark2_cut_identity"}


def test_audit_flags_a_broken_decomposition():
    from dataclasses import replace
    g, _ = sample_girth_conditioned(20, 5, seed=4)
    aw = alpha_exact(g)
    d = mai_exact(g, aw)
    bad = replace(d, i=d.i + 1)
    report = audit_decomposition(g, bad)
    assert not report.ok
    failed = [e.lemma_id for e in report.entries if not e.ok]
    assert "eq6_t_minus_s" in failed


def test_multiplicity_lower_bound():
    for seed in range(6):
        g, _ = sample_girth_conditioned(24, 5, seed=31 + seed)
        aw = alpha_exact(g)
        d = mai_exact(g, aw)
        aux_count, verified = mai_multiplicity_check(g, d)
        assert verified >= aux_count >= 1   # the empty set always counts


def test_aux_graph_max_degree_two():
    for seed in range(8):
        g, _ = sample_girth_conditioned(30, 5, seed=900 + seed)
        aw = alpha_exact(g)
        d = mai_exact(g, aw)
        aux = build_aux_graph(g, d)
        h = aux.as_multigraph()
        if h.n:
            assert max(h.degrees(), default=0) <= 2


def test_aux_cycle_expands_to_doubled_cycle():
    # C8 with alternating matching edges (y, z); consecutive matching edges
    # connect Z-Z, Y-Y, Z-Z, Y-Y around the cycle, so the 4-cycle of the
    # auxiliary graph must expand to the full 8-cycle.
    from cubicmai.mis import AuxGraph
    g = cycle_graph(8)
    aux = AuxGraph(j_edges=((0, 1), (3, 2), (4, 5), (7, 6)),
                   adjacency=((1, 3), (0, 2), (1, 3), (2, 0)))
    walk = expand_aux_cycle(aux, (0, 1, 2, 3), g)
    assert len(walk) == 8
    assert sorted(walk) == list(range(8))
    edge_set = set((min(u, v), max(u, v)) for u, v in g.edges)
    for idx in range(8):
        u, v = walk[idx], walk[(idx + 1) % 8]
        assert (min(u, v), max(u, v)) in edge_set
    # a cycle that does not correspond to any G-cycle is rejected
    bad = AuxGraph(j_edges=((0, 1), (4, 5)), adjacency=((1,), (0,)))
    with pytest.raises(AssertionError):
        expand_aux_cycle(bad, (0, 1), g)


def test_aux_graphs_of_samples_are_cycle_free_paths():
    # at these sizes the auxiliary graph is a disjoint union of paths;
    # its independent sets are what the multiplicity check enumerates
    import math as _math
    for seed in range(6):
        g, _ = sample_girth_conditioned(30, 5, seed=5000 + seed)
        aw = alpha_exact(g)
        d = mai_exact(g, aw)
        h = build_aux_graph(g, d).as_multigraph()
        if h.n:
            assert not _math.isfinite(girth(h).girth)
