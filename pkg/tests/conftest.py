"""Shared test helpers: seeded random graphs and independent oracles.

Oracles here are deliberately written against the naive definitions
(subset filters, union-find, permutation expansion) so they share no code
with the implementations they check.
"""

from __future__ import annotations

import itertools
import random
from pathlib import Path

import pytest

from simplex_spectra.graphs import Graph

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_path(name: str) -> str:
    return str(FIXTURES / name)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(i, j) for i, j in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if g.is_connected():
            return g


def random_interval_graph(rng: random.Random, n: int) -> Graph:
    """Interval graphs are chordal."""
    intervals = []
    for _ in range(n):
        a = rng.uniform(0, 10)
        b = a + rng.uniform(0, 4)
        intervals.append((a, b))
    edges = [(i, j) for i, j in itertools.combinations(range(n), 2)
             if intervals[i][0] <= intervals[j][1] and intervals[j][0] <= intervals[i][1]]
    return Graph(n, edges)


def random_triangle_free_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Random bipartite graph on a random split."""
    split = rng.randint(1, n - 1)
    edges = [(i, j) for i in range(split) for j in range(split, n) if rng.random() < p]
    return Graph(n, edges)


def brute_force_cliques(g: Graph, max_dim: int) -> list[list[tuple[int, ...]]]:
    """Subset-filter clique enumeration, usable for small n only."""
    out = []
    for size in range(1, max_dim + 2):
        level = [c for c in itertools.combinations(range(g.n), size)
                 if all(g.has_edge(u, v) for u, v in itertools.combinations(c, 2))]
        out.append(level)
    return out


def circuit_rank(g: Graph) -> int:
    """Edges minus vertices plus components, by union-find."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    rank = 0
    for u, v in g.edges():
        ru, rv = find(u), find(v)
        if ru == rv:
            rank += 1
        else:
            parent[ru] = rv
    return rank


def charpoly_by_permanent_expansion(rows: list[list[int]], p: int) -> list[int]:
    """det(xI - M) mod p via the Leibniz formula; order <= 7 only."""
    n = len(rows)
    assert n <= 7
    coeffs = [0] * (n + 1)
    for perm in itertools.permutations(range(n)):
        sign = _perm_sign(perm)
        # product over i of (x*[i==perm(i)] - M[i][perm(i)])
        poly = [1]
        for i in range(n):
            entry = [(-rows[i][perm[i]]) % p] + ([1] if perm[i] == i else [])
            poly = _poly_mul(poly, entry, p)
        for k, c in enumerate(poly):
            coeffs[k] = (coeffs[k] + sign * c) % p
    return coeffs


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exhaustive backtracking isomorphism test with degree pruning."""
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return False
    if sorted(g1.degree(v) for v in range(g1.n)) != sorted(g2.degree(v) for v in range(g2.n)):
        return False
    n = g1.n
    order = sorted(range(n), key=lambda v: -g1.degree(v))
    image = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used[w] or g1.degree(v) != g2.degree(w):
                continue
            ok = True
            for u in order[:k]:
                if g1.has_edge(v, u) != g2.has_edge(w, image[u]):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if extend(k + 1):
                    return True
                used[w] = False
                image[v] = -1
        return False

    return extend(0)


def simple_cycles(g: Graph, max_len: int, limit: int = 100) -> list[tuple[int, ...]]:
    """Bounded DFS over simple cycles (not necessarily induced), each
    reported once per orientation with its smallest vertex first."""
    out = []
    for s in range(g.n):
        stack = [(s,)]
        while stack:
            path = stack.pop()
            for w in sorted(g.neighbors(path[-1])):
                if w <= s or w in path:
                    continue
                new = path + (w,)
                if len(new) >= 3 and g.has_edge(w, s):
                    out.append(new)
                    if len(out) >= limit:
                        return out
                if len(new) < max_len:
                    stack.append(new)
    return out


def random_wheel_instances(rng: random.Random, count: int):
    """Random (graph, 4-cycle, hub) triples; the cycle is canonical (its
    smallest vertex first, second smaller than last)."""
    found = []
    while len(found) < count:
        g = random_graph(rng, rng.randint(5, 9), 0.55)
        quads = []
        for quad in itertools.permutations(range(g.n), 4):
            a, b, c, d = quad
            if a != min(quad) or b > d:
                continue
            if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
                    and g.has_edge(d, a)):
                continue
            hubs = [e for e in range(g.n) if e not in quad
                    and all(g.has_edge(e, v) for v in quad)]
            if hubs:
                quads.append((quad, rng.choice(hubs)))
        if quads:
            found.append((g,) + rng.choice(quads))
    return found


def wheel_case_tag(quad, e) -> tuple[int, int]:
    """(cycle-order class of c against b < d, rank of the hub among all
    five vertices): 3 x 5 = 15 possible configurations."""
    a, b, c, d = quad
    c_rank = 0 if c < b else (1 if c < d else 2)
    e_rank = sorted((a, b, c, d, e)).index(e)
    return (c_rank, e_rank)


def explicit_wheel_instances():
    """One 5-vertex wheel for each of the 15 ordering configurations."""
    out = []
    for c_class in range(3):
        for e_rank in range(5):
            e = e_rank
            rest = [v for v in range(5) if v != e]
            r0, r1, r2, r3 = rest
            if c_class == 0:
                quad = (r0, r2, r1, r3)
            elif c_class == 1:
                quad = (r0, r1, r2, r3)
            else:
                quad = (r0, r1, r3, r2)
            a, b, c, d = quad
            g = Graph(5, [(a, b), (b, c), (c, d), (d, a),
                          (e, a), (e, b), (e, c), (e, d)])
            assert wheel_case_tag(quad, e) == (c_class, e_rank)
            out.append((g, quad, e))
    return out


@pytest.fixture
def diamond_graph() -> Graph:
    """Complete graph on 4 vertices minus one edge, the running example:
    vertices 0..3, edge {0,3} missing, triangles {0,1,2} and {1,2,3}."""
    return Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
