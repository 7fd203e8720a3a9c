import random

import pytest

from regmis.gadgets import GENERAL, PLANAR5, build_general_gadget, gadget_alpha
from regmis.graph import (
    Graph,
    GraphError,
    InfeasibleError,
    complete_graph,
    cycle_graph,
    is_independent_set,
    path_graph,
    star_graph,
    triangle_count,
)
from regmis.io import serialize_graph
from regmis.reduction import (
    ReductionCertificate,
    ensure_odd_delta,
    forward_map,
    normalize,
    pad_to_target,
    rebuild_padded,
    recover,
    reduce_to_regular,
    regularize,
    regularize_planar,
)
from regmis.solvers import mis_branch_bound, mis_bruteforce

from conftest import random_graph_max_degree

K4_MINUS_EDGE = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


class TestEnsureOddDelta:
    def test_even_degree_gets_clique(self):
        g, step = ensure_odd_delta(cycle_graph(4))
        assert step is not None
        assert step.kind == "parity-clique"
        assert step.size == 4 and step.alpha_offset == 1
        assert g.max_degree() == 3

    def test_odd_degree_unchanged(self):
        g, step = ensure_odd_delta(complete_graph(4))
        assert step is None and g.adjacency == complete_graph(4).adjacency

    def test_star_k14(self):
        g, step = ensure_odd_delta(star_graph(4))
        assert step.size == 6 and g.max_degree() == 5

    def test_empty_graph_rejected(self):
        with pytest.raises(GraphError):
            ensure_odd_delta(Graph.from_edges(0, []))


class TestPadToTarget:
    def test_pads_with_star(self):
        g, step = pad_to_target(path_graph(3), 5)
        assert step.kind == "star-pad"
        assert step.size == 6 and step.alpha_offset == 5
        assert g.max_degree() == 5

    def test_already_at_target(self):
        g, step = pad_to_target(complete_graph(4), 3)
        assert step is None

    def test_target_below_max_degree(self):
        with pytest.raises(InfeasibleError):
            pad_to_target(complete_graph(4), 2)


class TestRegularize:
    def test_k4_minus_edge(self):
        gp, cert = regularize(K4_MINUS_EDGE, 3)
        assert gp.n == 18
        assert all(gp.degree(v) == 3 for v in range(gp.n))
        assert cert.total_offset == 6
        assert len(cert.gadgets) == 2
        assert {gi.owner for gi in cert.gadgets} == {2, 3}

    def test_single_vertex(self):
        gp, cert = regularize(Graph.from_edges(1, []), 3)
        assert gp.n == 22
        assert len(cert.gadgets) == 3
        assert cert.total_offset == 9
        assert mis_bruteforce(gp).alpha == 10

    def test_already_regular_is_identity(self):
        gp, cert = regularize(complete_graph(4), 3)
        assert gp.adjacency == complete_graph(4).adjacency
        assert cert.gadgets == () and cert.total_offset == 0

    def test_rejects_bad_delta(self):
        with pytest.raises(GraphError):
            regularize(K4_MINUS_EDGE, 4)
        with pytest.raises(InfeasibleError):
            regularize(complete_graph(6), 3)

    def test_vertex_count_closed_form(self):
        rng = random.Random(0)
        for delta in (3, 5, 7):
            g = random_graph_max_degree(rng, 12, delta)
            gp, cert = regularize(g, delta)
            deficiency = sum(delta - g.degree(v) for v in range(g.n))
            assert gp.n == g.n + deficiency * ((delta - 1) ** 2 + delta)
            assert all(gp.degree(v) == delta for v in range(gp.n))

    def test_deterministic_bytes(self):
        a = regularize(K4_MINUS_EDGE, 3)
        b = regularize(K4_MINUS_EDGE, 3)
        assert serialize_graph(a[0], "dimacs-col") == serialize_graph(b[0], "dimacs-col")
        assert a[1].to_json() == b[1].to_json()


class TestRegularizePlanar:
    def test_k4(self):
        gp, cert = regularize_planar(complete_graph(4))
        assert gp.n == 4 + 8 * 25 == 204
        assert all(gp.degree(v) == 5 for v in range(gp.n))
        assert cert.total_offset == 64
        assert cert.per_gadget_alpha == 8

    def test_c5_counts(self):
        gp, cert = regularize_planar(cycle_graph(5))
        assert len(cert.gadgets) == 15
        assert gp.n == 380

    def test_five_regular_input_unchanged(self):
        # icosahedron itself is 5-regular and planar
        from regmis.gadgets import build_icosa_gadget

        icosa_minus, _ = build_icosa_gadget()
        full = Graph.from_edges(12, list(icosa_minus.edges()) + [(0, 1)])
        gp, cert = regularize_planar(full)
        assert gp.adjacency == full.adjacency and cert.total_offset == 0

    def test_rejects_degree_above_five(self):
        with pytest.raises(InfeasibleError):
            regularize_planar(complete_graph(7))

    def test_euler_necessary_condition(self):
        gp, _ = regularize_planar(complete_graph(4))
        assert gp.m <= 3 * gp.n - 6


class TestFullPipeline:
    def test_even_degree_input(self):
        gp, cert = reduce_to_regular(cycle_graph(4), 3)
        assert [s.kind for s in cert.steps] == ["parity-clique"]
        assert all(gp.degree(v) == 3 for v in range(gp.n))
        a = mis_branch_bound(gp).alpha
        assert a == 2 + cert.total_offset  # alpha(C4) = 2

    def test_padding_to_higher_degree(self):
        gp, cert = reduce_to_regular(path_graph(3), 5)
        kinds = [s.kind for s in cert.steps]
        assert kinds == ["parity-clique", "star-pad"]  # P3 has even max degree 2
        assert all(gp.degree(v) == 5 for v in range(gp.n))

    def test_strict_mode(self):
        with pytest.raises(InfeasibleError):
            reduce_to_regular(cycle_graph(4), 3, strict=True)
        gp, cert = reduce_to_regular(complete_graph(4), 3, strict=True)
        assert cert.steps == ()

    def test_empty_graph(self):
        gp, cert = reduce_to_regular(Graph.from_edges(0, []), 3)
        assert gp.n == 0 and cert.total_offset == 0

    def test_rebuild_padded(self):
        g = cycle_graph(4)
        gp, cert = reduce_to_regular(g, 5)
        padded = rebuild_padded(g, cert)
        assert gp.induced_prefix(padded.n).adjacency == padded.adjacency

    @pytest.mark.parametrize("delta", [3, 5, 7])
    def test_regularity_on_random_graphs(self, delta):
        rng = random.Random(delta)
        for _ in range(8):
            g = random_graph_max_degree(rng, rng.randint(1, 40), delta)
            gp, cert = reduce_to_regular(g, delta)
            assert all(gp.degree(v) == delta for v in range(gp.n))
            assert gp.n <= cert.padded_n * (1 + delta * ((delta - 1) ** 2 + delta))


class TestSolutionMaps:
    def test_forward_map_size_and_validity(self):
        gp, cert = regularize(K4_MINUS_EDGE, 3)
        lifted = forward_map(K4_MINUS_EDGE, {2, 3}, cert)
        assert len(lifted) == 2 + 6
        assert is_independent_set(gp, lifted)
        assert mis_bruteforce(gp).alpha == 8  # the lift is maximum here

    def test_forward_map_empty_set(self):
        gp, cert = regularize(K4_MINUS_EDGE, 3)
        assert len(forward_map(K4_MINUS_EDGE, set(), cert)) == cert.total_offset

    def test_forward_map_planar(self):
        g = complete_graph(4)
        gp, cert = regularize_planar(g)
        lifted = forward_map(g, {0}, cert)
        assert len(lifted) == 65
        assert is_independent_set(gp, lifted)

    def test_forward_map_rejects_dependent_set(self):
        gp, cert = regularize(K4_MINUS_EDGE, 3)
        with pytest.raises(GraphError):
            forward_map(K4_MINUS_EDGE, {0, 1}, cert)
        with pytest.raises(GraphError):
            forward_map(K4_MINUS_EDGE, {17}, cert)

    def test_recover_round_trip(self):
        gp, cert = reduce_to_regular(cycle_graph(4), 3)
        g = cycle_graph(4)
        for members in (set(), {0}, {0, 2}, {1, 3}):
            assert recover(gp, forward_map(g, members, cert), cert) == members

    def test_recover_size_bound(self):
        gp, cert = regularize(K4_MINUS_EDGE, 3)
        best = mis_bruteforce(gp).witness
        recovered = recover(gp, best, cert)
        assert len(recovered) >= len(best) - cert.total_offset
        assert is_independent_set(K4_MINUS_EDGE, recovered)

    def test_recover_empty(self):
        gp, cert = regularize(K4_MINUS_EDGE, 3)
        assert recover(gp, set(), cert) == frozenset()

    def test_normalize_fixed_point_when_port_free(self):
        gp, cert = regularize(K4_MINUS_EDGE, 3)
        lifted = forward_map(K4_MINUS_EDGE, {2, 3}, cert)
        assert normalize(gp, lifted, cert) == lifted

    def test_normalize_swaps_port_at_same_size(self):
        gp, cert = regularize(K4_MINUS_EDGE, 3)
        gi = cert.gadgets[0]
        # A-part vertices plus the port: independent, size 3, uses the port
        with_port = {gi.id_offset, gi.id_offset + 1, gi.port}
        assert is_independent_set(gp, with_port)
        swapped = normalize(gp, with_port, cert)
        assert gi.port not in swapped
        assert len(swapped) == 3
        assert is_independent_set(gp, swapped)

    def test_normalize_gains_at_delta5(self):
        g = Graph.from_edges(1, [])
        gp, cert = regularize(g, 5)
        gi = cert.gadgets[0]
        # best gadget set through the port has size 9 < alpha = 10
        gadget_graph, layout = build_general_gadget(5)
        closed = set(gadget_graph.neighbors(layout.port)) | {layout.port}
        keep = [v for v in range(gadget_graph.n) if v not in closed]
        relabel = {v: i for i, v in enumerate(keep)}
        residual = Graph.from_edges(
            len(keep),
            [
                (relabel[u], relabel[v])
                for u, v in gadget_graph.edges()
                if u in relabel and v in relabel
            ],
        )
        inner = mis_bruteforce(residual).witness
        with_port = {gi.id_offset + keep[i] for i in inner} | {gi.port}
        for other in cert.gadgets[1:]:
            with_port |= forward_map(g, set(), cert) & set(other.vertex_range())
        assert is_independent_set(gp, with_port)
        normalized = normalize(gp, with_port, cert)
        assert len(normalized) == len(with_port) + 1
        assert is_independent_set(gp, normalized)
        assert all(gi.port not in normalized for gi in cert.gadgets)


class TestCertificateSerialization:
    def test_json_round_trip(self):
        _, cert = reduce_to_regular(cycle_graph(4), 5)
        back = ReductionCertificate.from_json(cert.to_json())
        assert back == cert

    def test_malformed_json_rejected(self):
        with pytest.raises(GraphError):
            ReductionCertificate.from_json("{}")

    def test_invariants(self):
        _, cert = reduce_to_regular(cycle_graph(4), 5)
        assert cert.total_offset == sum(
            s.alpha_offset for s in cert.steps
        ) + len(cert.gadgets) * cert.per_gadget_alpha
        ranges = [set(gi.vertex_range()) for gi in cert.gadgets]
        ranges.append(set(range(cert.padded_n)))
        for i, r1 in enumerate(ranges):
            for r2 in ranges[i + 1:]:
                assert not (r1 & r2)

    def test_gadget_kind_and_alpha_recorded(self):
        _, cert = regularize_planar(complete_graph(4))
        assert cert.gadget_kind == PLANAR5
        _, cert = regularize(K4_MINUS_EDGE, 3)
        assert cert.gadget_kind == GENERAL
        assert cert.per_gadget_alpha == gadget_alpha(3)


def test_triangle_preservation_general_pipeline():
    g = complete_graph(4)
    gp, cert = reduce_to_regular(g, 5)  # star pad only, no parity clique
    assert triangle_count(gp) == triangle_count(g) == 4
