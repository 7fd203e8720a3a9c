"""Exact solvers: brute-force MIS, branch-and-bound MIS with reduction
rules, minimum vertex cover via complementation, and small-clique search.

Both MIS solvers are exact.  When a budget runs out they raise
:class:`ResourceLimitError` carrying the best lower bound found so far;
they never return an inexact value labeled exact.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional, Set, Tuple

from .graph import Graph, GraphError, is_independent_set


class ResourceLimitError(RuntimeError):
    """A solver budget (vertex cap, node count, wall clock) was exhausted."""

    def __init__(self, message: str, best_so_far: int = 0):
        super().__init__(message)
        self.best_so_far = best_so_far  # valid lower bound, not exact


@dataclass(frozen=True)
class SolverLimits:
    max_brute_n: int = 26
    node_budget: Optional[int] = None
    time_budget: Optional[float] = None  # seconds

    def __post_init__(self) -> None:
        if self.max_brute_n <= 0:
            raise GraphError("max_brute_n must be positive")
        if self.node_budget is not None and self.node_budget <= 0:
            raise GraphError("node_budget must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise GraphError("time_budget must be positive")


@dataclass(frozen=True)
class SolveResult:
    alpha: int
    witness: FrozenSet[int]
    nodes_explored: int
    method: str  # "brute-force" | "branch-bound"


# ---------------------------------------------------------------------------
# brute force


def mis_bruteforce(g: Graph, limits: Optional[SolverLimits] = None) -> SolveResult:
    """Exact MIS by include/exclude enumeration in fixed id order.

    Prunes only on the trivial remaining-vertex bound; deliberately shares
    no machinery with the branch-and-bound solver so the two can
    cross-check each other.
    """
    limits = limits or SolverLimits()
    if g.n > limits.max_brute_n:
        raise ResourceLimitError(
            f"brute force capped at {limits.max_brute_n} vertices, got {g.n}"
        )
    nbr_mask = [0] * g.n
    for u in range(g.n):
        for v in g.adjacency[u]:
            nbr_mask[u] |= 1 << v

    best = 0
    best_mask = 0
    nodes = 0

    def rec(idx: int, chosen: int, count: int, blocked: int) -> None:
        nonlocal best, best_mask, nodes
        nodes += 1
        if count + (g.n - idx) <= best:
            return
        if idx == g.n:
            if count > best:
                best, best_mask = count, chosen
            return
        if not blocked & (1 << idx):
            rec(idx + 1, chosen | (1 << idx), count + 1, blocked | nbr_mask[idx])
        rec(idx + 1, chosen, count, blocked)

    rec(0, 0, 0, 0)
    witness = frozenset(v for v in range(g.n) if best_mask & (1 << v))
    return SolveResult(best, witness, nodes, "brute-force")


# ---------------------------------------------------------------------------
# branch and bound on a weighted kernel
#
# Reduction rules (twin collapse, degree-2 folding) merge vertices, so the
# kernel is a weighted graph where each surviving vertex carries the set of
# original vertices to include when it is chosen ("inset") and when it is
# rejected ("outset").


@dataclass
class _KVertex:
    weight: int
    inset: FrozenSet[int]
    outset: FrozenSet[int]


@dataclass
class _State:
    adj: Dict[int, Set[int]]
    verts: Dict[int, _KVertex]
    base: int = 0
    taken: Set[int] = field(default_factory=set)
    next_id: int = 0

    @staticmethod
    def from_graph(g: Graph) -> "_State":
        return _State(
            adj={v: set(g.adjacency[v]) for v in range(g.n)},
            verts={v: _KVertex(1, frozenset((v,)), frozenset()) for v in range(g.n)},
            next_id=g.n,
        )

    def copy(self) -> "_State":
        return _State(
            adj={v: set(s) for v, s in self.adj.items()},
            verts=dict(self.verts),
            base=self.base,
            taken=set(self.taken),
            next_id=self.next_id,
        )

    def _drop(self, v: int) -> None:
        for u in self.adj[v]:
            self.adj[u].discard(v)
        del self.adj[v]


def _take(state: _State, v: int) -> None:
    """Include v, rejecting N(v)."""
    state.base += state.verts[v].weight
    state.taken |= state.verts[v].inset
    for u in list(state.adj[v]):
        state.taken |= state.verts[u].outset
        state._drop(u)
        del state.verts[u]
    state._drop(v)
    del state.verts[v]


def _reject(state: _State, v: int) -> None:
    state.taken |= state.verts[v].outset
    state._drop(v)
    del state.verts[v]


def _apply_reductions(state: _State, rules: Tuple[str, ...]) -> None:
    """Exhaust the reduction rules; mutates state."""
    changed = True
    while changed:
        changed = False
        for v in sorted(state.adj):
            if v not in state.adj:
                continue
            deg = len(state.adj[v])
            wv = state.verts[v].weight

            if "isolated" in rules and deg == 0:
                _take(state, v)
                changed = True
                continue

            if "degree1" in rules and deg == 1:
                u = next(iter(state.adj[v]))
                if wv >= state.verts[u].weight:
                    _take(state, v)
                    changed = True
                    continue

            if "fold" in rules and deg == 2:
                u, w = sorted(state.adj[v])
                wu, ww = state.verts[u].weight, state.verts[w].weight
                if w in state.adj[u]:
                    # N[v] is a triangle: taking v is never worse
                    if wv >= max(wu, ww):
                        _take(state, v)
                        changed = True
                        continue
                elif wv >= wu + ww:
                    _take(state, v)
                    changed = True
                    continue
                elif wv >= max(wu, ww):
                    _fold(state, v, u, w)
                    changed = True
                    continue

            if "twin" in rules:
                if _collapse_twin(state, v):
                    changed = True
                    continue

            if "dominance" in rules:
                if _drop_dominated(state, v):
                    changed = True
                    continue


def _fold(state: _State, v: int, u: int, w: int) -> None:
    """Degree-2 fold: v with non-adjacent neighbors u, w collapses into one
    vertex; choosing it later means {u, w}, rejecting it means {v}."""
    kv, ku, kw = state.verts[v], state.verts[u], state.verts[w]
    fid = state.next_id
    state.next_id += 1
    new_nbrs = (state.adj[u] | state.adj[w]) - {u, v, w}
    state.verts[fid] = _KVertex(
        ku.weight + kw.weight - kv.weight,
        ku.inset | kw.inset | kv.outset,
        ku.outset | kw.outset | kv.inset,
    )
    state.base += kv.weight
    for x in (v, u, w):
        state._drop(x)
        del state.verts[x]
    state.adj[fid] = set(new_nbrs)
    for x in new_nbrs:
        state.adj[x].add(fid)


def _collapse_twin(state: _State, v: int) -> bool:
    """Merge v into a non-adjacent vertex with the same open neighborhood."""
    nv = state.adj[v]
    if not nv:
        return False
    probe = min(nv, key=lambda x: len(state.adj[x]))
    for u in state.adj[probe]:
        if u >= v or u in nv:
            continue
        if state.adj[u] == nv:
            ku, kv = state.verts[u], state.verts[v]
            state.verts[u] = _KVertex(
                ku.weight + kv.weight, ku.inset | kv.inset, ku.outset | kv.outset
            )
            state._drop(v)
            del state.verts[v]
            return True
    return False


def _drop_dominated(state: _State, v: int) -> bool:
    """If some neighbor u has N[u] ⊆ N[v] and weight(v) ≤ weight(u), v can
    be rejected: any solution using v swaps to u at no loss."""
    nv_closed = state.adj[v] | {v}
    for u in state.adj[v]:
        if state.verts[v].weight <= state.verts[u].weight and (
            state.adj[u] | {u}
        ) <= nv_closed:
            _reject(state, v)
            return True
    return False


_ALL_RULES = ("isolated", "degree1", "fold", "twin", "dominance")


def _clique_cover_bound(state: _State) -> int:
    """Greedy clique cover: the solution can take at most the heaviest
    vertex of each clique."""
    cliques: list[Tuple[Set[int], int]] = []  # (members, max weight)
    for v in sorted(state.adj, key=lambda x: -len(state.adj[x])):
        nv = state.adj[v]
        for idx, (members, wmax) in enumerate(cliques):
            if members <= nv:
                members.add(v)
                cliques[idx] = (members, max(wmax, state.verts[v].weight))
                break
        else:
            cliques.append(({v}, state.verts[v].weight))
    return sum(wmax for _, wmax in cliques)


def mis_branch_bound(g: Graph, limits: Optional[SolverLimits] = None) -> SolveResult:
    """Exact MIS by branch and bound with kernelization.

    Rules applied to exhaustion at every node: isolated take, pendant take,
    degree-2 folding, twin collapse, neighborhood dominance.  Branches on a
    maximum-degree vertex (smallest id on ties) with a greedy clique-cover
    upper bound.
    """
    limits = limits or SolverLimits()
    deadline = (
        time.monotonic() + limits.time_budget if limits.time_budget else None
    )
    nodes = 0
    best_value = -1
    best_witness: Set[int] = set()

    def visit(state: _State) -> None:
        nonlocal nodes, best_value, best_witness
        nodes += 1
        if limits.node_budget is not None and nodes > limits.node_budget:
            raise ResourceLimitError("node budget exhausted", max(best_value, 0))
        if deadline is not None and time.monotonic() > deadline:
            raise ResourceLimitError("time budget exhausted", max(best_value, 0))

        _apply_reductions(state, _ALL_RULES)
        if not state.adj:
            if state.base > best_value:
                best_value = state.base
                best_witness = set(state.taken)
            return
        if state.base + _clique_cover_bound(state) <= best_value:
            return

        v = max(sorted(state.adj), key=lambda x: len(state.adj[x]))
        branch = state.copy()
        _take(branch, v)
        visit(branch)
        _reject(state, v)
        visit(state)

    visit(_State.from_graph(g))
    return SolveResult(best_value, frozenset(best_witness), nodes, "branch-bound")


def twin_kernel_order(g: Graph) -> int:
    """Vertex count after exhausting twin collapse alone (no branching)."""
    state = _State.from_graph(g)
    _apply_reductions(state, ("twin",))
    return len(state.adj)


# ---------------------------------------------------------------------------
# derived problems


def solve_mis(
    g: Graph, limits: Optional[SolverLimits] = None, method: str = "auto"
) -> SolveResult:
    limits = limits or SolverLimits()
    if method == "brute":
        return mis_bruteforce(g, limits)
    if method == "bb":
        return mis_branch_bound(g, limits)
    if method == "auto":
        if g.n <= min(limits.max_brute_n, 20):
            return mis_bruteforce(g, limits)
        return mis_branch_bound(g, limits)
    raise GraphError(f"unknown solve method {method!r}")


def min_vertex_cover(
    g: Graph, limits: Optional[SolverLimits] = None, method: str = "auto"
) -> Tuple[int, FrozenSet[int]]:
    """Minimum vertex cover via the complement of a maximum independent set."""
    result = solve_mis(g, limits, method)
    cover = frozenset(range(g.n)) - result.witness
    return g.n - result.alpha, cover


def has_clique_k(g: Graph, k: int) -> Tuple[bool, Optional[Tuple[int, ...]]]:
    """Does g contain a clique on k vertices, for k in 3..5?"""
    if not 3 <= k <= 5:
        raise GraphError(f"clique order {k} outside supported range [3, 5]")
    nbr = [set(a) for a in g.adjacency]

    def extend(clique: Tuple[int, ...], candidates: Set[int]) -> Optional[Tuple[int, ...]]:
        if len(clique) == k:
            return clique
        for v in sorted(candidates):
            found = extend(clique + (v,), {u for u in candidates if u > v and u in nbr[v]})
            if found:
                return found
        return None

    for u, v in g.edges():
        witness = extend((u, v), {w for w in nbr[u] & nbr[v] if w > v})
        if witness:
            return True, witness
    return False, None


def check_result(g: Graph, result: SolveResult) -> None:
    """Assert the witness is independent and matches the reported size."""
    if len(result.witness) != result.alpha:
        raise AssertionError("witness size disagrees with alpha")
    if not is_independent_set(g, result.witness):
        raise AssertionError("witness is not independent")
