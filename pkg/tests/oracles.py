"""Naive reference implementations used to cross-check the fast paths.

Everything here works from explicit edge lists and subset scans and stays
deliberately independent of the package's bitmask machinery.
"""

from __future__ import annotations

import random
from itertools import combinations

from mislab import Graph, Hypergraph


def naive_mis_profile(g: Graph) -> dict[int, int]:
    """MIS count by size via a full subset scan."""
    n = g.n
    edges = {frozenset(e) for e in g.edges()}
    verts = list(range(n))
    out: dict[int, int] = {}
    for size in range(n + 1):
        for sub in combinations(verts, size):
            s = set(sub)
            if any(frozenset(p) in edges for p in combinations(sub, 2)):
                continue
            maximal = True
            for w in verts:
                if w in s:
                    continue
                if not any(frozenset((w, u)) in edges for u in s):
                    maximal = False
                    break
            if maximal:
                out[size] = out.get(size, 0) + 1
    return out


def naive_count_k_mis(g: Graph, k: int) -> int:
    return naive_mis_profile(g).get(k, 0)


def naive_has_clique(g: Graph, t: int) -> bool:
    if t == 1:
        return g.n >= 1
    edges = {frozenset(e) for e in g.edges()}
    return any(
        all(frozenset(p) in edges for p in combinations(sub, 2))
        for sub in combinations(range(g.n), t)
    )


def naive_hyper_count_k_mis(h: Hypergraph, k: int) -> int:
    edge_sets = [set(e) for e in h.edges]
    verts = list(range(h.n))
    count = 0
    for sub in combinations(verts, k):
        s = set(sub)
        if any(e <= s for e in edge_sets):
            continue
        maximal = True
        for w in verts:
            if w in s:
                continue
            grown = s | {w}
            if not any(e <= grown for e in edge_sets):
                maximal = False
                break
        if maximal:
            count += 1
    return count


def hyper_contains_complete(h: Hypergraph, t: int, r: int) -> bool:
    """True iff some t vertices carry every one of their r-subsets as an edge."""
    edges = {frozenset(e) for e in h.edges}
    return any(
        all(frozenset(sub) in edges for sub in combinations(group, r))
        for group in combinations(range(h.n), t)
    )


def has_3term_ap(values: set[int]) -> bool:
    vs = sorted(values)
    for i, x in enumerate(vs):
        for y in vs[i + 1 :]:
            if 2 * y - x in values and 2 * y - x != y:
                return True
    return False


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def _triangles(edges: set[tuple[int, int]], n: int) -> list[tuple[int, int, int]]:
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return [
        (a, b, c)
        for a in range(n)
        for b in adj[a]
        if b > a
        for c in adj[a] & adj[b]
        if c > b
    ]


def random_triangle_free(rng: random.Random, n: int, p: float) -> Graph:
    """Random graph with an edge deleted from each triangle until none remain."""
    edges = {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    while True:
        tris = _triangles(edges, n)
        if not tris:
            break
        a, b, c = tris[rng.randrange(len(tris))]
        pick = rng.choice([(a, b), (a, c), (b, c)])
        edges.discard(pick)
    return Graph.from_edges(n, sorted(edges))


def random_tripartite_triangle_free(
    rng: random.Random, n: int, p: float
) -> tuple[Graph, list[list[int]]]:
    """Random triangle-free graph with a designated 3-part vertex partition."""
    assignment = [rng.randrange(3) for _ in range(n)]
    # every part nonempty
    for i in range(3):
        if i not in assignment:
            assignment[rng.randrange(n)] = i
    for i in range(3):
        if i not in assignment:
            return random_tripartite_triangle_free(rng, n, p)
    edges = {
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if assignment[u] != assignment[v] and rng.random() < p
    }
    while True:
        tris = _triangles(edges, n)
        if not tris:
            break
        a, b, c = tris[rng.randrange(len(tris))]
        pick = rng.choice([(a, b), (a, c), (b, c)])
        edges.discard(pick)
    parts = [[v for v in range(n) if assignment[v] == i] for i in range(3)]
    return Graph.from_edges(n, sorted(edges)), parts


def random_hypergraph3(rng: random.Random, n: int, p: float) -> Hypergraph:
    edges = [tr for tr in combinations(range(n), 3) if rng.random() < p]
    return Hypergraph(n, tuple(edges))
