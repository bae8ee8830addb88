"""Top-level acceptance checks, one pass/fail line per criterion."""

import math
import random
import time
from fractions import Fraction

from cubicmai import counting
from cubicmai.certify import (Constants, OmegaDomainError, case2_bound,
                              certify_all, table_row_m1, table_row_m3)
from cubicmai.graphs import (girth_at_least, project, sample_girth_conditioned,
                             sample_pairing, _child_seed)
from cubicmai.intervals import IntervalError
from cubicmai.mis import (alpha_exact, audit_decomposition,
                          count_independent_sets, fib_bound, mai_exact,
                          mai_multiplicity_check)


import pytest


@pytest.fixture
def verdict(capfd):
    """One visible pass/fail line per criterion, even under capture."""
    def _verdict(tag: str, description: str, ok: bool) -> None:
        with capfd.disabled():
            print(f"\n[{tag}] {description}: {'PASS' if ok else 'FAIL'}",
                  flush=True)
        assert ok, f"{tag} failed"
    return _verdict


def test_criterion_1_published_tables(verdict):
    start = time.time()
    consts = Constants()
    ok = True
    for k in list(range(35)) + list(range(36, 46)):
        row = table_row_m1(k, consts) if k <= 34 else table_row_m3(k, consts)
        ok &= all(e.passed for e in row.entries)
        ok &= row.columns[-1].hi < 20
    q35, case2 = case2_bound(consts)
    ok &= all(e.passed for e in case2)
    ok &= q35.hi < 5.5
    elapsed = time.time() - start
    ok &= elapsed < 10
    verdict("PRIMARY-1",
             f"45 published table rows + straddling cell ({elapsed:.1f}s)", ok)


def test_criterion_2_certificate_and_mutations(verdict):
    start = time.time()
    report = certify_all()
    certify_elapsed = time.time() - start
    ids = {e.claim_id: e for e in report.entries}
    ok = report.passed and certify_elapsed < 60
    # the second-derivative and first-derivative ranges of the inner root
    ok &= ids["claim1.xi1dd_lower"].passed and ids["claim1.xi1dd_upper"].passed
    ok &= ids["claim2.xi1d_at_0"].passed and ids["claim2.xi1d_at_end"].passed
    # the derivative bracket around the slice maximizer and the final bound
    ok &= ids["bracket.deriv_left_positive"].passed
    ok &= ids["bracket.deriv_right_negative"].passed
    ok &= ids["bracket.h1_at_left"].passed
    ok &= ids["bracket.final_bound"].passed
    assert report.final_bound == "0.999983"
    # perturbing any single proof constant by 1e-3 must flip a sub-claim
    deltas = {"a": 1, "weight": 1, "b_chi": 1, "b_zeta": 1, "b_const": 1,
              "chi_lo": -1, "chi_hi": -1}
    for name, sign in deltas.items():
        mutated = Constants().mutate(name, Fraction(sign, 1000))
        try:
            ok &= not certify_all(mutated).passed
        except (OmegaDomainError, IntervalError):
            pass  # inconsistent constants also count as a detected flip
    verdict("PRIMARY-2",
             f"interval certificate + mutation coverage "
             f"({certify_elapsed:.1f}s)", ok)


def test_criterion_3_corner_maxima(verdict):
    start = time.time()
    report = certify_all()
    prefixes = ("b1.", "b2.", "b3.", "b4.", "b5.", "b6.", "appendix2.")
    relevant = [e for e in report.entries
                if e.claim_id.startswith(prefixes)]
    ok = len(relevant) >= 8 and all(e.passed for e in relevant)
    elapsed = time.time() - start
    ok &= elapsed < 10
    verdict("PRIMARY-3",
             f"corner maxima and chi-derivative sign ({elapsed:.1f}s)", ok)


def test_criterion_4_combinatorics_oracles(petersen, verdict):
    import itertools

    def brute_alpha_count(graph):
        adj = graph.adjacency_masks()
        loops = set(graph.loops())
        best, total = 0, 0
        for mask in range(1 << graph.n):
            good = True
            m = mask
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                if v in loops or (adj[v] & mask):
                    good = False
                    break
            if good:
                total += 1
                best = max(best, bin(mask).count("1"))
        return best, total

    rng = random.Random(4547)
    ok = True
    for trial in range(50):
        n = rng.randint(1, 13)
        pairs = list(itertools.combinations(range(n), 2))
        edges = [e for e in pairs if rng.random() < rng.uniform(0.1, 0.6)]
        from cubicmai.graphs import Multigraph
        g = Multigraph.from_edges(n, edges)
        a, c = brute_alpha_count(g)
        ok &= alpha_exact(g).alpha == a
        ok &= count_independent_sets(g) == c
    ok &= alpha_exact(petersen).alpha == 4

    from cubicmai.graphs import Multigraph
    fib = [0, 1]
    while len(fib) < 25:
        fib.append(fib[-1] + fib[-2])
    for k in range(1, 21):
        pg = Multigraph.from_edges(k, [(i, i + 1) for i in range(k - 1)])
        ok &= count_independent_sets(pg) == fib[k + 2]
        if k >= 3:
            cg = Multigraph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])
            ok &= count_independent_sets(cg) == fib[k - 1] + fib[k + 1]

    fb = fib_bound(8)
    ok &= abs(fb.value - 76 ** (1 / 9)) < 1e-12
    ok &= fb.value >= 1.618
    verdict("PRIMARY-4", "exact-solver oracles on the small-graph corpus", ok)


def test_criterion_5_structural_lemma_audit(verdict):
    start = time.time()
    violations = 0
    for t in range(200):
        g, _ = sample_girth_conditioned(50, 5, seed=_child_seed(20231113, t))
        aw = alpha_exact(g)
        d = mai_exact(g, aw)
        if not audit_decomposition(g, d).ok:
            violations += 1
            continue
        aux_count, verified = mai_multiplicity_check(g, d)
        if verified < aux_count:
            violations += 1
    elapsed = time.time() - start
    ok = violations == 0 and elapsed < 300
    verdict("PRIMARY-5",
             f"200 girth-conditioned lemma audits at n=50 "
             f"({violations} violations, {elapsed:.0f}s)", ok)


def test_criterion_6_survival_statistics(verdict):
    n, trials, seed = 2000, 2000, 20231113
    hits3 = hits4 = 0
    for t in range(trials):
        g = project(sample_pairing(n, _child_seed(seed, t)))
        if girth_at_least(g, 3):
            hits3 += 1
            if girth_at_least(g, 4):
                hits4 += 1
    ok = True
    for hits, limit in ((hits3, math.exp(-2)), (hits4, math.exp(-10 / 3))):
        p = hits / trials
        se = math.sqrt(limit * (1 - limit) / trials)
        ok &= abs(p - limit) <= 3 * se
    verdict("PRIMARY-6",
             f"girth survival vs limiting fractions "
             f"(p3={hits3 / trials:.4f}, p4={hits4 / trials:.4f})", ok)


def test_criterion_7_counting_consistency(verdict):
    ok = True
    for n, x in ((200, 91), (400, 182)):
        exact = counting.log_of_fraction(counting.q_total(n, x, "exact"))
        approx = counting.q_total(n, x, "log").log_value
        ok &= abs(exact - approx) < 1e-8
        lhs, rhs = counting.ratio_vs_exponent(n, x)
        ok &= lhs <= rhs
    verdict("PRIMARY-7", "exact vs log-gamma counting and exponent bound", ok)
