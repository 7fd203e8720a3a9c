"""Immutable undirected simple graph with dense 0-based vertex ids."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple


class GraphError(ValueError):
    """Raised on malformed graph input (bad ids, bad format, bad arguments)."""


class InfeasibleError(GraphError):
    """Raised when a well-formed request cannot be satisfied, e.g. a target
    degree below the input's maximum degree."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph.

    ``adjacency[v]`` is the strictly increasing tuple of neighbors of ``v``.
    Instances are immutable and safe to share between threads; all
    transformations return new graphs.
    """

    n: int
    adjacency: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency length does not match vertex count")

    @staticmethod
    def from_edges(n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build a graph from an edge iterable; duplicates are collapsed."""
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return Graph(n, tuple(tuple(sorted(s)) for s in adj))

    # -- queries ---------------------------------------------------------

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self.adjacency[u]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, lexicographic order."""
        for u in range(self.n):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    # -- derived graphs --------------------------------------------------

    def induced_prefix(self, k: int) -> "Graph":
        """Induced subgraph on vertices 0..k-1 (ids preserved)."""
        if not (0 <= k <= self.n):
            raise GraphError(f"prefix size {k} out of range for n={self.n}")
        return Graph(
            k,
            tuple(tuple(w for w in self.adjacency[v] if w < k) for v in range(k)),
        )

    def content_hash(self) -> str:
        """SHA-256 of the canonical (n, sorted edge list) encoding."""
        h = hashlib.sha256()
        h.update(f"n={self.n}\n".encode())
        for u, v in self.edges():
            h.update(f"{u} {v}\n".encode())
        return h.hexdigest()


def is_independent_set(g: Graph, members: Iterable[int]) -> bool:
    """True iff no edge of ``g`` has both endpoints in ``members``."""
    s = set(members)
    for v in s:
        g._check_vertex(v)
    return all(not (s & set(g.adjacency[v])) for v in s)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; ``g2``'s vertex ids are shifted up by ``g1.n``."""
    shifted = tuple(tuple(w + g1.n for w in a) for a in g2.adjacency)
    return Graph(g1.n + g2.n, g1.adjacency + shifted)


def triangle_count(g: Graph) -> int:
    """Number of vertex triples inducing a triangle."""
    return sum(1 for _ in triangles(g))


def triangles(g: Graph) -> Iterator[Tuple[int, int, int]]:
    """Yield every triangle (u, v, w) with u < v < w."""
    nbr = [set(a) for a in g.adjacency]
    for u, v in g.edges():
        for w in nbr[u] & nbr[v]:
            if w > v:
                yield (u, v, w)


# -- small named graphs used throughout the pipelines and tests ----------


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and ``leaves`` leaves (total leaves + 1 vertices)."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
