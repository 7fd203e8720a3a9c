import random

import pytest
from hypothesis import given, settings, strategies as st

from regmis.gadgets import build_general_gadget, build_icosa_gadget
from regmis.graph import (
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    is_independent_set,
    path_graph,
)
from regmis.solvers import (
    ResourceLimitError,
    SolverLimits,
    check_result,
    has_clique_k,
    min_vertex_cover,
    mis_branch_bound,
    mis_bruteforce,
    solve_mis,
    twin_kernel_order,
)

from conftest import alpha_by_enumeration, random_graph

PETERSEN = Graph.from_edges(
    10,
    [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
     (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
     (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
)


class TestBruteForce:
    def test_small_examples(self):
        assert mis_bruteforce(cycle_graph(5)).alpha == 2
        assert mis_bruteforce(complete_graph(6)).alpha == 1
        assert mis_bruteforce(Graph.from_edges(0, [])).alpha == 0

    def test_icosa_gadget(self):
        g, layout = build_icosa_gadget()
        result = mis_bruteforce(g)
        assert result.alpha == 4
        assert result.witness == layout.canonical_mis

    def test_vertex_cap(self):
        with pytest.raises(ResourceLimitError):
            mis_bruteforce(complete_graph(8), SolverLimits(max_brute_n=7))

    def test_matches_enumeration(self):
        rng = random.Random(1)
        for _ in range(30):
            g = random_graph(rng, rng.randint(1, 10), rng.choice([0.2, 0.5]))
            result = mis_bruteforce(g)
            check_result(g, result)
            assert result.alpha == alpha_by_enumeration(g)


class TestBranchBound:
    def test_petersen(self):
        assert mis_branch_bound(PETERSEN).alpha == 4

    def test_gadget_21_vertices(self):
        g, _ = build_general_gadget(5)
        assert mis_branch_bound(g).alpha == 10

    def test_witness_always_valid(self):
        rng = random.Random(2)
        for _ in range(60):
            g = random_graph(rng, rng.randint(0, 14), rng.choice([0.1, 0.3, 0.6]))
            result = mis_branch_bound(g)
            check_result(g, result)

    def test_agrees_with_brute_force(self):
        rng = random.Random(3)
        for _ in range(120):
            g = random_graph(rng, rng.randint(1, 14), rng.choice([0.1, 0.3, 0.5]))
            assert mis_branch_bound(g).alpha == mis_bruteforce(g).alpha

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_agrees_with_brute_force_hypothesis(self, data):
        n = data.draw(st.integers(1, 12))
        edges = data.draw(
            st.lists(
                st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
                    lambda e: e[0] != e[1]
                ),
                max_size=40,
            )
        )
        g = Graph.from_edges(n, edges)
        assert mis_branch_bound(g).alpha == mis_bruteforce(g).alpha

    def test_node_budget_error_carries_lower_bound(self):
        rng = random.Random(4)
        g = random_graph(rng, 40, 0.2)
        with pytest.raises(ResourceLimitError) as info:
            mis_branch_bound(g, SolverLimits(node_budget=2))
        assert info.value.best_so_far >= 0

    def test_twin_collapse_shrinks_gadget(self):
        g, _ = build_general_gadget(5)
        assert g.n == 21
        assert twin_kernel_order(g) <= 9


class TestVertexCover:
    def test_examples(self):
        assert min_vertex_cover(complete_graph(4))[0] == 3
        assert min_vertex_cover(cycle_graph(5))[0] == 3
        size, witness = min_vertex_cover(path_graph(3))
        assert size == 1 and witness == {1}

    def test_complement_identity_and_coverage(self):
        rng = random.Random(5)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 12), 0.4)
            size, cover = min_vertex_cover(g)
            assert size + mis_bruteforce(g).alpha == g.n
            assert all(u in cover or v in cover for u, v in g.edges())


class TestCliques:
    def test_examples(self):
        assert has_clique_k(complete_graph(5), 5)[0]
        assert not has_clique_k(cycle_graph(6), 3)[0]

    def test_gadgets_are_triangle_free(self):
        for delta in (3, 5, 7):
            g, _ = build_general_gadget(delta)
            assert not has_clique_k(g, 3)[0]

    def test_witness_is_a_clique(self):
        found, witness = has_clique_k(PETERSEN, 3)
        assert not found and witness is None
        rng = random.Random(6)
        for _ in range(30):
            g = random_graph(rng, 10, 0.6)
            for k in (3, 4, 5):
                found, witness = has_clique_k(g, k)
                if found:
                    assert len(witness) == k
                    assert all(
                        g.has_edge(u, v)
                        for i, u in enumerate(witness)
                        for v in witness[i + 1:]
                    )

    def test_k_out_of_range(self):
        with pytest.raises(GraphError):
            has_clique_k(complete_graph(3), 2)
        with pytest.raises(GraphError):
            has_clique_k(complete_graph(3), 6)


class TestReductionRuleSoundness:
    def test_rules_never_change_alpha(self):
        # every graph the reducer can see is solved both ways
        rng = random.Random(7)
        for _ in range(80):
            g = random_graph(rng, rng.randint(1, 16), rng.choice([0.15, 0.35]))
            bb = mis_branch_bound(g)
            assert bb.alpha == mis_bruteforce(g).alpha
            check_result(g, bb)


def test_solve_mis_method_dispatch():
    g = cycle_graph(5)
    assert solve_mis(g, method="brute").method == "brute-force"
    assert solve_mis(g, method="bb").method == "branch-bound"
    assert solve_mis(g, method="auto").alpha == 2
    with pytest.raises(GraphError):
        solve_mis(g, method="magic")
