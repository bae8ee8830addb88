"""Configuration-model pairings on 3n points, projection to cubic
multigraphs, exact girth, and girth-survival statistics.

Vertices are 0-based internally; the plain-text file formats are 1-based.
"""

from __future__ import annotations

import math
import random
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

Point = Tuple[int, int]          # (vertex, slot), slot in {0,1,2}
Edge = Tuple[int, int]

DEFAULT_SEED = 20231113


class SamplingError(RuntimeError):
    """Rejection-sampling attempt cap exceeded."""


def _check_even_n(n: int) -> None:
    if n <= 0 or n % 2 != 0:
        raise ValueError(f"n must be a positive even integer, got {n}")


@dataclass(frozen=True)
class Pairing:
    """A perfect matching on the 3n points {0..n-1} x {0,1,2}."""

    n: int
    pairs: Tuple[Tuple[Point, Point], ...]

    def validate(self) -> None:
        _check_even_n(self.n)
        if len(self.pairs) != 3 * self.n // 2:
            raise ValueError("pairing must have exactly 3n/2 pairs")
        seen = set()
        for p, q in self.pairs:
            for v, s in (p, q):
                if not (0 <= v < self.n and 0 <= s < 3):
                    raise ValueError(f"point {(v, s)} out of range")
            seen.add(p)
            seen.add(q)
        if len(seen) != 3 * self.n:
            raise ValueError("pairing does not cover every point exactly once")


@dataclass(frozen=True)
class Multigraph:
    """A multigraph given by an edge multiset; loops allowed."""

    n: int
    edges: Tuple[Edge, ...]

    @staticmethod
    def from_edges(n: int, edges) -> "Multigraph":
        return Multigraph(n, tuple((min(u, v), max(u, v)) for u, v in edges))

    def degrees(self) -> List[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1          # a loop contributes 2
        return deg

    def loops(self) -> List[int]:
        return [u for u, v in self.edges if u == v]

    def parallel_pairs(self) -> List[Edge]:
        c = Counter(e for e in self.edges if e[0] != e[1])
        return [e for e, k in c.items() if k >= 2]

    def is_simple(self) -> bool:
        return not self.loops() and not self.parallel_pairs()

    def simple_adjacency(self) -> List[List[int]]:
        adj: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in set(e for e in self.edges if e[0] != e[1]):
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def adjacency_masks(self) -> List[int]:
        adj = [0] * self.n
        for u, v in self.edges:
            if u != v:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return adj


@dataclass(frozen=True)
class GirthReport:
    girth: float                      # positive int, or math.inf for a forest
    shortest_cycle: Tuple[int, ...]   # witness; empty iff girth is infinite


# --------------------------------------------------------------------------
# Sampling
# --------------------------------------------------------------------------

def _child_seed(seed: int, k: int) -> int:
    return (seed * 0x9E3779B97F4A7C15 + k * 0xD1B54A32D192ED03 + 1) % 2**64


def sample_pairing(n: int, seed: int) -> Pairing:
    """Uniformly random perfect matching on the 3n points.

    Shuffles the point list and pairs consecutive entries; a uniform
    permutation induces the uniform distribution on all (3n-1)!! matchings.
    """
    _check_even_n(n)
    pts: List[Point] = [(v, s) for v in range(n) for s in range(3)]
    random.Random(seed).shuffle(pts)
    pairs = tuple((pts[2 * k], pts[2 * k + 1]) for k in range(3 * n // 2))
    return Pairing(n, pairs)


def enumerate_pairings(n: int) -> Iterator[Pairing]:
    """All (3n-1)!! pairings; intended for exhaustive tests at tiny n."""
    _check_even_n(n)
    pts: List[Point] = [(v, s) for v in range(n) for s in range(3)]

    def rec(remaining: Tuple[Point, ...], acc):
        if not remaining:
            yield Pairing(n, tuple(acc))
            return
        first, rest = remaining[0], remaining[1:]
        for i, other in enumerate(rest):
            acc.append((first, other))
            yield from rec(rest[:i] + rest[i + 1:], acc)
            acc.pop()

    yield from rec(tuple(pts), [])


def project(pairing: Pairing) -> Multigraph:
    """Project a pairing to a cubic multigraph by dropping the slot labels."""
    pairing.validate()
    return Multigraph.from_edges(pairing.n, ((p[0], q[0]) for p, q in pairing.pairs))


# --------------------------------------------------------------------------
# Girth
# --------------------------------------------------------------------------

def girth(graph: Multigraph) -> GirthReport:
    """Exact girth with a witness cycle (loop = 1, parallel pair = 2)."""
    loops = graph.loops()
    if loops:
        return GirthReport(1, (min(loops),))
    par = graph.parallel_pairs()
    if par:
        u, v = min(par)
        return GirthReport(2, (u, v))

    adj = graph.simple_adjacency()
    best_len: float = math.inf
    best_cycle: Tuple[int, ...] = ()

    for root in range(graph.n):
        dist = {root: 0}
        parent = {root: -1}
        dq = deque([root])
        while dq:
            u = dq.popleft()
            if 2 * dist[u] + 1 >= best_len:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    dq.append(w)
                elif w != parent[u]:
                    cyc = _reconstruct_cycle(u, w, parent, dist)
                    if cyc is not None and len(cyc) < best_len:
                        best_len = len(cyc)
                        best_cycle = tuple(cyc)
    if best_cycle:
        return GirthReport(int(best_len), best_cycle)
    return GirthReport(math.inf, ())


def _reconstruct_cycle(u: int, w: int, parent, dist) -> Optional[List[int]]:
    path_u, path_w = [u], [w]
    a, b = u, w
    while dist[a] > dist[b]:
        a = parent[a]
        path_u.append(a)
    while dist[b] > dist[a]:
        b = parent[b]
        path_w.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        path_u.append(a)
        path_w.append(b)
    # a == b is the meet point; drop it from one side
    cycle = path_u + list(reversed(path_w[:-1]))
    return cycle if len(cycle) == len(set(cycle)) else None


def girth_at_least(graph: Multigraph, g: int) -> bool:
    """Fast check girth(graph) >= g via depth-truncated BFS."""
    if g <= 1:
        return True
    if graph.loops():
        return False
    if g <= 2:
        return True
    if graph.parallel_pairs():
        return False
    if g <= 3:
        return True
    adj = graph.simple_adjacency()
    for root in range(graph.n):
        dist = {root: 0}
        parent = {root: -1}
        dq = deque([root])
        while dq:
            u = dq.popleft()
            if 2 * dist[u] + 1 >= g:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    dq.append(w)
                elif w != parent[u] and dist[u] + dist[w] + 1 < g:
                    return False
    return True


def validate_cycle_witness(graph: Multigraph, report: GirthReport) -> bool:
    """Check that a girth witness is a closed walk of matching length."""
    cyc = report.shortest_cycle
    if report.girth == math.inf:
        return not cyc
    if len(cyc) != report.girth or len(set(cyc)) != len(cyc):
        return False
    counter = Counter(graph.edges)
    if report.girth == 1:
        return counter[(cyc[0], cyc[0])] >= 1
    if report.girth == 2:
        u, v = sorted(cyc)
        return counter[(u, v)] >= 2
    for i, u in enumerate(cyc):
        v = cyc[(i + 1) % len(cyc)]
        if counter[(min(u, v), max(u, v))] < 1:
            return False
    return True


# --------------------------------------------------------------------------
# Survival statistics
# --------------------------------------------------------------------------

def girth_survival(g: int) -> float:
    """Limiting fraction of pairings whose projection has girth >= g:
    exp(-sum_{k=1}^{g-1} 2^(k-1)/k), evaluated with an exact rational sum."""
    if g < 3:
        raise ValueError(f"g must be >= 3, got {g}")
    s = sum(Fraction(2 ** (k - 1), k) for k in range(1, g))
    return math.exp(-float(s))


def estimate_survival(n: int, g: int, trials: int, seed: int) -> Tuple[float, float]:
    """Monte Carlo estimate of P(projected girth >= g) with binomial stderr."""
    _check_even_n(n)
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    hits = 0
    for t in range(trials):
        graph = project(sample_pairing(n, _child_seed(seed, t)))
        if girth_at_least(graph, g):
            hits += 1
    p = hits / trials
    stderr = math.sqrt(p * (1.0 - p) / trials)
    return p, stderr


def sample_girth_conditioned(n: int, g: int, seed: int,
                             max_attempts: int = 1_000_000) -> Tuple[Multigraph, int]:
    """Rejection-sample a projected multigraph with girth >= g.

    Returns the graph and the number of attempts used.  The limiting
    acceptance rate is girth_survival(g) > 0 for fixed g, so the cap is a
    safety valve, not a tuning knob.
    """
    _check_even_n(n)
    for attempt in range(max_attempts):
        graph = project(sample_pairing(n, _child_seed(seed, attempt)))
        if girth_at_least(graph, g):
            return graph, attempt + 1
    raise SamplingError(
        f"no girth>={g} sample at n={n} within {max_attempts} attempts")


# --------------------------------------------------------------------------
# File formats (1-indexed on disk)
# --------------------------------------------------------------------------

def write_edge_list(graph: Multigraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"{graph.n} {len(graph.edges)}\n")
        for u, v in graph.edges:
            fh.write(f"{u + 1} {v + 1}\n")


def read_edge_list(path) -> Multigraph:
    with open(path) as fh:
        header = fh.readline().split()
        n, m = int(header[0]), int(header[1])
        edges = []
        for _ in range(m):
            u, v = map(int, fh.readline().split())
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            edges.append((u - 1, v - 1))
    return Multigraph.from_edges(n, edges)


def write_pairing(pairing: Pairing, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"{pairing.n}\n")
        for (u, a), (v, b) in pairing.pairs:
            fh.write(f"{u + 1} {a + 1} {v + 1} {b + 1}\n")


def read_pairing(path) -> Pairing:
    with open(path) as fh:
        n = int(fh.readline())
        pairs = []
        for _ in range(3 * n // 2):
            u, a, v, b = map(int, fh.readline().split())
            pairs.append(((u - 1, a - 1), (v - 1, b - 1)))
    pairing = Pairing(n, tuple(pairs))
    pairing.validate()
    return pairing
