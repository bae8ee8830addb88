"""Exact independence number, independent-set counting, MAI decompositions,
and the structural audits that accompany them.

A MAI set is a largest almost-independent set (max degree <= 1 in the
induced subgraph) that still contains a maximum independent set.  The
solver exploits the decomposition A = S + V(M): S an independent set, M a
set of pairwise non-adjacent "isolated" edges, with |S| + |M| equal to the
independence number forced at every level of the search.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import mpmath

from .graphs import Multigraph, girth_at_least

DEFAULT_BUDGET = 5_000_000


class BudgetExceededError(RuntimeError):
    """The exact solver hit its node budget; no approximate answer is given."""


@dataclass(frozen=True)
class AlphaWitness:
    alpha: int
    witness: FrozenSet[int]
    excluded_loop_vertices: FrozenSet[int] = frozenset()


@dataclass(frozen=True)
class FibBound:
    g: int
    s: int
    value: float

    def closed_form(self) -> float:
        """phi * (1 - phi^(-2s))^(1/s), the Binet rewriting of the bound."""
        with mpmath.workdps(40):
            phi = (1 + mpmath.sqrt(5)) / 2
            return float(phi * (1 - phi ** (-2 * self.s)) ** (mpmath.mpf(1) / self.s))


@dataclass(frozen=True)
class MaiDecomposition:
    n: int
    A: FrozenSet[int]
    B: FrozenSet[int]
    R: FrozenSet[Tuple[int, int]]    # matching inside A
    R_prime: FrozenSet[Tuple[int, int]]  # matching inside B
    Y: FrozenSet[int]                # matched vertices of A
    Z: FrozenSet[int]                # matched vertices of B
    J: FrozenSet[Tuple[int, int]]    # Y-Z edges, a matching when girth >= 5
    x: int
    i: int
    s: int
    t: int


@dataclass(frozen=True)
class AuditEntry:
    lemma_id: str
    ok: bool
    witness: Optional[dict] = None

    def to_json(self) -> dict:
        out = {"lemma_id": self.lemma_id, "pass": self.ok}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass(frozen=True)
class AuditReport:
    entries: Tuple[AuditEntry, ...]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def to_json(self) -> list:
        return [e.to_json() for e in self.entries]


# --------------------------------------------------------------------------
# Exact independence number
# --------------------------------------------------------------------------

def _loop_free_masks(graph: Multigraph) -> Tuple[List[int], int, FrozenSet[int]]:
    """Adjacency bitmasks with parallel edges collapsed; loop vertices are
    removed from the candidate mask since they can never be independent."""
    adj = graph.adjacency_masks()
    loops = frozenset(graph.loops())
    avail = 0
    for v in range(graph.n):
        if v not in loops:
            avail |= 1 << v
    return adj, avail, loops


class _Budget:
    __slots__ = ("left",)

    def __init__(self, budget: int):
        self.left = budget

    def tick(self, k: int = 1) -> None:
        self.left -= k
        if self.left < 0:
            raise BudgetExceededError("exact-solver node budget exceeded")


def _alpha_mask(adj: Sequence[int], avail: int, budget: _Budget) -> Tuple[int, int]:
    """Max independent set of the graph induced on the bitmask ``avail``.
    Returns (alpha, witness_mask); deterministic (lowest-index tie-breaks)."""
    best_size = -1
    best_mask = 0

    def rec(avail: int, cur_mask: int, cur: int) -> None:
        nonlocal best_size, best_mask
        budget.tick()
        if avail == 0:
            if cur > best_size:
                best_size, best_mask = cur, cur_mask
            return
        if cur + bin(avail).count("1") <= best_size:
            return
        m = avail
        pick, pick_deg = -1, -1
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            d = bin(adj[v] & avail).count("1")
            if d <= 1:
                # degree-0 include / degree-1 include-and-fold, both safe
                rec((avail & ~adj[v]) & ~(1 << v), cur_mask | (1 << v), cur + 1)
                return
            if d > pick_deg:
                pick_deg, pick = d, v
        rec((avail & ~adj[pick]) & ~(1 << pick), cur_mask | (1 << pick), cur + 1)
        rec(avail & ~(1 << pick), cur_mask, cur)

    rec(avail, 0, 0)
    return best_size, best_mask


def alpha_exact(graph: Multigraph, budget: int = DEFAULT_BUDGET) -> AlphaWitness:
    """Exact independence number with a witness set."""
    adj, avail, loops = _loop_free_masks(graph)
    size, mask = _alpha_mask(adj, avail, _Budget(budget))
    witness = frozenset(v for v in range(graph.n) if (mask >> v) & 1)
    return AlphaWitness(size, witness, loops)


def count_independent_sets(graph: Multigraph, budget: int = DEFAULT_BUDGET) -> int:
    """Exact number of independent sets, including the empty set."""
    adj, avail, _loops = _loop_free_masks(graph)
    b = _Budget(budget)
    cache: Dict[int, int] = {}

    def count(avail: int) -> int:
        if avail == 0:
            return 1
        got = cache.get(avail)
        if got is not None:
            return got
        b.tick()
        m = avail
        pick, pick_deg = -1, -1
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            d = bin(adj[v] & avail).count("1")
            if d > pick_deg:
                pick_deg, pick = d, v
        if pick_deg == 0:
            total = 2 ** bin(avail).count("1")
        else:
            total = count(avail & ~(1 << pick)) + count((avail & ~adj[pick]) & ~(1 << pick))
        cache[avail] = total
        return total

    return count(avail)


def fib_bound(g: int) -> FibBound:
    """The transfer bound (F_{s-1} + F_{s+1})^(1/s) with s = 2*floor(g/2)+1."""
    if g < 4:
        raise ValueError(f"g must be >= 4, got {g}")
    s = 2 * (g // 2) + 1
    fibs = [0, 1]
    while len(fibs) <= s + 1:
        fibs.append(fibs[-1] + fibs[-2])
    base = fibs[s - 1] + fibs[s + 1]
    with mpmath.workdps(40):
        value = float(mpmath.root(mpmath.mpf(base), s))
    return FibBound(g, s, value)


# --------------------------------------------------------------------------
# MAI search
# --------------------------------------------------------------------------

def _closed_nbr_masks(adj: Sequence[int]) -> List[int]:
    return [adj[v] | (1 << v) for v in range(len(adj))]


def _mai_search(graph: Multigraph, alpha: int, budget: _Budget
                ) -> Tuple[FrozenSet[Tuple[int, int]], FrozenSet[int]]:
    """Find M maximizing |M| over isolated-edge sets with
    alpha(G - N[V(M)]) = alpha - |M|, plus the matching independent part S.

    For any prefix M_j of a feasible M the invariant
    alpha(G - N[V(M_j)]) = alpha - j holds, which makes the exact-alpha
    recheck after every added edge a complete prune.
    """
    adj = graph.adjacency_masks()
    closed = _closed_nbr_masks(adj)
    edges = sorted(set((min(u, v), max(u, v)) for u, v in graph.edges if u != v))
    full = (1 << graph.n) - 1

    alpha_cache: Dict[int, int] = {}

    def sub_alpha(avail: int) -> int:
        got = alpha_cache.get(avail)
        if got is None:
            got, _ = _alpha_mask(adj, avail, budget)
            alpha_cache[avail] = got
        return got

    best: List[object] = [0, (), full]   # |M|, M, remaining mask

    def rec(avail: int, chosen: List[Tuple[int, int]], start: int) -> None:
        budget.tick()
        if len(chosen) > best[0]:
            best[0], best[1], best[2] = len(chosen), tuple(chosen), avail
        for idx in range(start, len(edges)):
            u, v = edges[idx]
            if not ((avail >> u) & 1 and (avail >> v) & 1):
                continue
            navail = avail & ~(closed[u] | closed[v])
            if sub_alpha(navail) == alpha - len(chosen) - 1:
                chosen.append((u, v))
                rec(navail, chosen, idx + 1)
                chosen.pop()

    rec(full, [], 0)
    _, s_mask = _alpha_mask(adj, best[2], budget)
    m_set = frozenset(best[1])
    s_set = frozenset(v for v in range(graph.n) if (s_mask >> v) & 1)
    return m_set, s_set


def _decompose(graph: Multigraph, A: FrozenSet[int]) -> MaiDecomposition:
    n = graph.n
    B = frozenset(range(n)) - A
    edge_set = set((min(u, v), max(u, v)) for u, v in graph.edges if u != v)
    R = frozenset(e for e in edge_set if e[0] in A and e[1] in A)
    R_prime = frozenset(e for e in edge_set if e[0] in B and e[1] in B)
    Y = frozenset(itertools.chain.from_iterable(R))
    Z = frozenset(itertools.chain.from_iterable(R_prime))
    J = frozenset(e for e in edge_set
                  if (e[0] in Y and e[1] in Z) or (e[0] in Z and e[1] in Y))
    x = len(A) - len(R)
    return MaiDecomposition(
        n=n, A=A, B=B, R=R, R_prime=R_prime, Y=Y, Z=Z, J=J,
        x=x, i=n // 2 - len(A), s=len(Y) // 2, t=len(Z) // 2)


def mai_exact(graph: Multigraph, aw: AlphaWitness,
              budget: int = DEFAULT_BUDGET) -> MaiDecomposition:
    """Exact MAI decomposition of a simple graph of girth >= 5."""
    if not graph.is_simple():
        raise ValueError("mai_exact requires a simple graph")
    if not girth_at_least(graph, 5):
        raise ValueError("mai_exact requires girth >= 5")
    b = _Budget(budget)
    m_set, s_set = _mai_search(graph, aw.alpha, b)
    A = s_set | frozenset(itertools.chain.from_iterable(m_set))
    d = _decompose(graph, A)
    if d.x != aw.alpha:
        raise AssertionError(
            f"MAI postcondition violated: |A|-|R| = {d.x} != alpha = {aw.alpha}")
    return d


def mai_exhaustive(graph: Multigraph, alpha: int) -> int:
    """Brute-force MAI size over all vertex subsets; oracle for n <= 16."""
    if graph.n > 20:
        raise ValueError("exhaustive oracle limited to small graphs")
    adj = graph.adjacency_masks()
    best = 0
    for mask in range(1 << graph.n):
        size = bin(mask).count("1")
        if size <= best:
            continue
        edges = 0
        ok = True
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            d = bin(adj[v] & mask).count("1")
            if d > 1:
                ok = False
                break
            edges += d
        if ok and size - edges // 2 == alpha:
            best = size
    return best


# --------------------------------------------------------------------------
# Lemma audits
# --------------------------------------------------------------------------

def _max_induced_degree(graph: Multigraph, S: FrozenSet[int]) -> Tuple[int, Optional[int]]:
    deg: Dict[int, int] = {v: 0 for v in S}
    for u, v in graph.edges:
        if u != v and u in S and v in S:
            deg[u] += 1
            deg[v] += 1
    if not deg:
        return 0, None
    worst = max(deg, key=lambda v: (deg[v], -v))
    return deg[worst], worst


def audit_decomposition(graph: Multigraph, d: MaiDecomposition) -> AuditReport:
    """One boolean per structural lemma; failures carry a counterexample."""
    entries: List[AuditEntry] = []

    def add(lemma_id: str, ok: bool, witness: Optional[dict] = None):
        entries.append(AuditEntry(lemma_id, ok, None if ok else witness))

    degA, vA = _max_induced_degree(graph, d.A)
    add("M1_A_is_AI", degA <= 1, {"vertex": vA, "degree": degA})
    add("M2_contains_max_independent",
        len(d.A) - len(d.R) == d.x, {"A": sorted(d.A), "R": sorted(d.R), "x": d.x})

    degB, vB = _max_induced_degree(graph, d.B)
    add("lemma4_B_is_AI", degB <= 1, {"vertex": vB, "degree": degB})

    add("eq6_t_minus_s", d.t - d.s == 3 * d.i, {"t": d.t, "s": d.s, "i": d.i})
    add("lemma5_nonnegative", d.i >= 0 and d.t >= d.s, {"i": d.i, "t": d.t, "s": d.s})

    bad = None
    for side, (src, dst) in (("Z_to_Y", (d.Z, d.Y)), ("Y_to_Z", (d.Y, d.Z))):
        for v in src:
            k = sum(1 for (a, b) in d.J if v in (a, b))
            if k > 1:
                bad = {"side": side, "vertex": v, "degree_to_other_side": k}
    add("lemma6_J_is_matching", bad is None, bad)

    cut = sum(1 for u, v in graph.edges
              if u != v and ((u in d.A) != (v in d.A)))
    expect = 2 * d.x + d.n // 2 - d.i
    add("remark2_cut_identity", cut == expect, {"cut": cut, "expected": expect})

    return AuditReport(tuple(entries))


# --------------------------------------------------------------------------
# Auxiliary graph H and MAI multiplicity
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class AuxGraph:
    """Graph on the Y-Z matching edges; max degree <= 2 when girth >= 5."""
    j_edges: Tuple[Tuple[int, int], ...]   # each oriented as (y, z)
    adjacency: Tuple[Tuple[int, ...], ...]  # indices into j_edges

    def as_multigraph(self) -> Multigraph:
        edges = set()
        for i, nbrs in enumerate(self.adjacency):
            for j in nbrs:
                edges.add((min(i, j), max(i, j)))
        return Multigraph.from_edges(len(self.j_edges), edges)


def build_aux_graph(graph: Multigraph, d: MaiDecomposition) -> AuxGraph:
    oriented = tuple(sorted((e[0], e[1]) if e[0] in d.Y else (e[1], e[0])
                            for e in d.J))
    edge_set = set((min(u, v), max(u, v)) for u, v in graph.edges if u != v)
    adj: List[List[int]] = [[] for _ in oriented]
    for a in range(len(oriented)):
        for b in range(a + 1, len(oriented)):
            ya, za = oriented[a]
            yb, zb = oriented[b]
            if (min(ya, yb), max(ya, yb)) in edge_set or \
               (min(za, zb), max(za, zb)) in edge_set:
                adj[a].append(b)
                adj[b].append(a)
    return AuxGraph(oriented, tuple(tuple(x) for x in adj))


def expand_aux_cycle(aux: AuxGraph, cycle: Sequence[int],
                     graph: Multigraph) -> List[int]:
    """Expand a cycle of H (indices into j_edges) into the corresponding
    cycle of doubled length in G."""
    edge_set = set((min(u, v), max(u, v)) for u, v in graph.edges if u != v)
    c = len(cycle)
    walk: List[int] = []
    # Determine, for each step, whether consecutive J-edges connect on the
    # Y side or the Z side; within one J-edge the walk crosses from one
    # side to the other, so sides must alternate around the cycle.
    enter_y = None
    for start_side in (True, False):
        walk = []
        side = start_side   # True: we arrive at the Y endpoint
        ok = True
        for idx in range(c):
            y, z = aux.j_edges[cycle[idx]]
            first, second = (y, z) if side else (z, y)
            walk.extend([first, second])
            ny, nz = aux.j_edges[cycle[(idx + 1) % c]]
            nxt = ny if not side else nz
            if (min(second, nxt), max(second, nxt)) not in edge_set:
                ok = False
                break
            side = not side
        if ok:
            break
    if not ok:
        raise AssertionError("aux-graph cycle does not expand to a G-cycle")
    return walk


def _independent_sets_of(graph: Multigraph):
    """Yield every independent set (as frozenset) of a small graph."""
    adj = graph.adjacency_masks()
    loops = set(graph.loops())
    verts = [v for v in range(graph.n) if v not in loops]

    def rec(i: int, cur_mask: int, cur: List[int]):
        if i == len(verts):
            yield frozenset(cur)
            return
        v = verts[i]
        yield from rec(i + 1, cur_mask, cur)
        if not (adj[v] & cur_mask):
            cur.append(v)
            yield from rec(i + 1, cur_mask | (1 << v), cur)
            cur.pop()

    yield from rec(0, 0, [])


def mai_multiplicity_check(graph: Multigraph, d: MaiDecomposition,
                           budget: int = DEFAULT_BUDGET) -> Tuple[int, int]:
    """Swap-construct distinct AI sets of size |A|, one per independent set
    of the auxiliary graph H; returns (I(H), number actually verified)."""
    aux = build_aux_graph(graph, d)
    h = aux.as_multigraph()
    count_lower = count_independent_sets(h, budget)
    found = 0
    seen: Set[FrozenSet[int]] = set()
    for j_sub in _independent_sets_of(h):
        y1 = frozenset(aux.j_edges[i][0] for i in j_sub)
        z1 = frozenset(aux.j_edges[i][1] for i in j_sub)
        a1 = (d.A - y1) | z1
        if a1 in seen:
            continue
        seen.add(a1)
        deg, _ = _max_induced_degree(graph, a1)
        if deg <= 1 and len(a1) == len(d.A):
            found += 1
    return count_lower, found
