from __future__ import annotations

import random
from itertools import combinations

from regmis.graph import Graph, is_independent_set


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def random_graph_max_degree(rng: random.Random, n: int, dmax: int, p: float = 0.5) -> Graph:
    """Random graph whose maximum degree never exceeds dmax."""
    candidates = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(candidates)
    deg = [0] * n
    edges = []
    for u, v in candidates:
        if deg[u] < dmax and deg[v] < dmax and rng.random() < p:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph.from_edges(n, edges)


def alpha_by_enumeration(g: Graph) -> int:
    """Dead-simple independent oracle: try subsets largest first."""
    for size in range(g.n, -1, -1):
        for comb in combinations(range(g.n), size):
            if is_independent_set(g, comb):
                return size
    return 0


def all_maximum_independent_sets(g: Graph) -> list[frozenset[int]]:
    """Every maximum independent set, by full subset enumeration."""
    best = -1
    out: list[frozenset[int]] = []
    for mask in range(1 << g.n):
        s = [v for v in range(g.n) if mask >> v & 1]
        if not is_independent_set(g, s):
            continue
        if len(s) > best:
            best = len(s)
            out = [frozenset(s)]
        elif len(s) == best:
            out.append(frozenset(s))
    return out
