"""Independent re-verification of reduction outputs against certificates.

Gadget blueprints are rebuilt from (kind, delta) and compared edge by
edge, rather than trusting anything embedded in the certificate, so a
buggy or forged construction cannot vouch for itself.  Structural checks
never invoke a solver; only the alpha-relation and port-exclusion checks
do.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from . import gadgets
from .graph import Graph, GraphError, is_independent_set, triangle_count, triangles
from .reduction import (
    PARITY_FIX,
    STAR_PAD,
    ReductionCertificate,
    forward_map,
    rebuild_padded,
)
from .solvers import ResourceLimitError, SolverLimits, solve_mis

PASS, FAIL, SKIP = "pass", "fail", "skipped"


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    checks: Tuple[Check, ...]

    @property
    def overall(self) -> str:
        return FAIL if any(c.status == FAIL for c in self.checks) else PASS

    def to_json(self) -> str:
        doc = {
            "overall": self.overall,
            "checks": [
                {"name": c.name, "status": c.status, "detail": c.detail}
                for c in self.checks
            ],
        }
        return json.dumps(doc, indent=2) + "\n"


def _check(name: str, ok: bool, detail: str) -> Check:
    return Check(name, PASS if ok else FAIL, detail)


def check_regular(g: Graph, d: int) -> Check:
    bad = [v for v in range(g.n) if g.degree(v) != d]
    return _check(
        "regular",
        not bad,
        f"all {g.n} degrees equal {d}" if not bad else f"vertices {bad[:5]} deviate from degree {d}",
    )


def check_certificate(
    g: Graph, g_prime: Graph, cert: ReductionCertificate
) -> VerificationReport:
    """Pure-structure verification; no solver calls."""
    if cert.source_hash != g.content_hash():
        raise GraphError("certificate source hash does not match the source graph")
    if cert.result_hash != g_prime.content_hash():
        raise GraphError("certificate result hash does not match the reduced graph")

    checks: List[Check] = [check_regular(g_prime, cert.target_degree)]

    # originals induce exactly the source graph
    induced = g_prime.induced_prefix(cert.source_n)
    checks.append(
        _check(
            "origin-induced",
            induced.adjacency == g.adjacency,
            "edges among original vertices unchanged"
            if induced.adjacency == g.adjacency
            else "edges among original vertices were added or removed",
        )
    )

    # padding steps reconstruct, and their offsets are the forced values
    try:
        padded = rebuild_padded(g, cert)
        pad_ok = padded.n == cert.padded_n
        pad_detail = "padding steps reconstruct"
        for step in cert.steps:
            expected = 1 if step.kind == PARITY_FIX else step.size - 1
            if step.alpha_offset != expected:
                pad_ok = False
                pad_detail = f"step {step.kind} has offset {step.alpha_offset}, expected {expected}"
        if pad_ok and g_prime.induced_prefix(cert.padded_n).adjacency != padded.adjacency:
            pad_ok = False
            pad_detail = "padded prefix of the reduced graph disagrees with the steps"
    except GraphError as exc:
        padded, pad_ok, pad_detail = None, False, str(exc)
    checks.append(_check("padding-steps", pad_ok, pad_detail))

    # gadget blocks match freshly built blueprints and attach only via ports
    blocks_ok, attach_ok = True, True
    detail_blocks, detail_attach = "all gadget blocks match their blueprint", "every port attaches to exactly its owner"
    seen = set(range(cert.padded_n))
    for gi in cert.gadgets:
        rng = set(gi.vertex_range())
        if rng & seen:
            blocks_ok, detail_blocks = False, f"gadget at {gi.id_offset} overlaps other ids"
            break
        seen |= rng
        try:
            blueprint = gadgets.build_gadget(gi.kind, gi.delta)[0]
        except GraphError as exc:
            blocks_ok, detail_blocks = False, str(exc)
            break
        if gi.size != blueprint.n:
            blocks_ok, detail_blocks = False, f"gadget at {gi.id_offset} has wrong size"
            break
        internal = {
            (u - gi.id_offset, v - gi.id_offset)
            for u, v in g_prime.edges()
            if u in rng and v in rng
        }
        if internal != set(blueprint.edges()):
            blocks_ok = False
            detail_blocks = f"gadget at {gi.id_offset} (owner {gi.owner}) deviates from the blueprint"
        external = [
            (u, v)
            for w in rng
            for u, v in ((min(w, x), max(w, x)) for x in g_prime.neighbors(w))
            if (u in rng) != (v in rng)
        ]
        wanted = {(min(gi.port, gi.owner), max(gi.port, gi.owner))}
        if set(external) != wanted or not (0 <= gi.owner < cert.padded_n):
            attach_ok = False
            detail_attach = f"gadget at {gi.id_offset} has edges {sorted(set(external))} leaving it, expected only port-owner"
    if seen != set(range(g_prime.n)):
        blocks_ok, detail_blocks = False, "gadget ranges do not tile the reduced graph"
    checks.append(_check("gadget-blueprints", blocks_ok, detail_blocks))
    checks.append(_check("port-attachment", attach_ok, detail_attach))

    # gadget counts equal the deficiency of each padded vertex
    if padded is not None:
        counts = [0] * padded.n
        for gi in cert.gadgets:
            if 0 <= gi.owner < padded.n:
                counts[gi.owner] += 1
        bad = [
            v
            for v in range(padded.n)
            if counts[v] != cert.target_degree - padded.degree(v)
        ]
        checks.append(
            _check(
                "gadget-counts",
                not bad,
                "every vertex has degree-deficiency many gadgets"
                if not bad
                else f"vertices {bad[:5]} have the wrong number of gadgets",
            )
        )
    else:
        checks.append(Check("gadget-counts", SKIP, "padded graph unavailable"))

    # vertex count: closed form and the cubic-in-degree blowup bound
    gadget_size = (
        gadgets.general_gadget_size(cert.target_degree)
        if cert.gadget_kind == gadgets.GENERAL
        else gadgets.PLANAR_GADGET_SIZE
    )
    expected_n = cert.padded_n + len(cert.gadgets) * gadget_size
    bound = cert.padded_n * (1 + cert.target_degree * gadget_size)
    size_ok = g_prime.n == expected_n and g_prime.n <= bound
    checks.append(
        _check(
            "size-bound",
            size_ok,
            f"|V'|={g_prime.n} equals closed form {expected_n}, within bound {bound}"
            if size_ok
            else f"|V'|={g_prime.n}, closed form {expected_n}, bound {bound}",
        )
    )

    # offset arithmetic
    expected_offset = (
        sum(s.alpha_offset for s in cert.steps)
        + len(cert.gadgets) * cert.per_gadget_alpha
    )
    checks.append(
        _check(
            "offset-arithmetic",
            cert.total_offset == expected_offset,
            f"total_offset {cert.total_offset} vs recomputed {expected_offset}",
        )
    )
    return VerificationReport(tuple(checks))


def check_alpha_relation(
    g: Graph,
    g_prime: Graph,
    cert: ReductionCertificate,
    limits: Optional[SolverLimits] = None,
) -> Check:
    """Solve both sides exactly and compare against the certified offset."""
    limits = limits or SolverLimits()
    try:
        a = solve_mis(g, limits, "auto").alpha if g.n else 0
        a_prime = solve_mis(g_prime, limits, "auto").alpha if g_prime.n else 0
    except ResourceLimitError as exc:
        return Check("alpha-relation", SKIP, f"solver budget exhausted: {exc}")
    ok = a_prime == a + cert.total_offset
    return _check(
        "alpha-relation",
        ok,
        f"alpha'={a_prime}, alpha={a}, offset={cert.total_offset}",
    )


def check_sandwich(
    g: Graph,
    g_prime: Graph,
    cert: ReductionCertificate,
    members: Iterable[int],
) -> Check:
    """Certify alpha of the reduced graph from a claimed-maximum set of the
    source graph, with no solve of the reduced graph.

    The lifted set gives the lower bound |I| + offset.  The matching upper
    bound needs the structural facts re-checked here: gadgets meet the rest
    of the graph only through their ports, so any independent set of the
    reduced graph splits into an independent set of the padded source plus
    one independent set per gadget, each at most the gadget's alpha.  The
    two bounds meet exactly when the supplied set is maximum in the source.
    """
    s = set(members)
    try:
        lifted = forward_map(g, s, cert)
    except GraphError as exc:
        return Check("sandwich", FAIL, str(exc))
    if not is_independent_set(g_prime, lifted):
        return Check("sandwich", FAIL, "lifted set is not independent in the reduced graph")
    if len(lifted) != len(s) + cert.total_offset:
        return Check(
            "sandwich",
            FAIL,
            f"lifted set has {len(lifted)} vertices, expected {len(s) + cert.total_offset}",
        )
    structure = check_certificate(g, g_prime, cert)
    if structure.overall != PASS:
        return Check("sandwich", FAIL, "structural certificate checks failed")
    certified = len(s) + cert.total_offset
    return Check(
        "sandwich",
        PASS,
        f"alpha of the reduced graph is {certified}, conditional on the "
        f"supplied size-{len(s)} set being maximum in the source graph",
    )


def check_triangle_preservation(
    g: Graph, g_prime: Graph, cert: ReductionCertificate
) -> Check:
    """General gadgets are triangle-free and attachment edges close no
    triangle, so the only new triangles come from parity cliques."""
    if cert.gadgets and cert.gadget_kind != gadgets.GENERAL:
        return Check("triangle-preservation", SKIP, "planar gadgets contain triangles")
    clique_triangles = sum(
        s.size * (s.size - 1) * (s.size - 2) // 6
        for s in cert.steps
        if s.kind == PARITY_FIX
    )
    expected = triangle_count(g) + clique_triangles
    actual = triangle_count(g_prime)
    if actual != expected:
        return Check(
            "triangle-preservation",
            FAIL,
            f"reduced graph has {actual} triangles, expected {expected}",
        )
    stray = [
        t for t in triangles(g_prime) if any(v >= cert.padded_n for v in t)
    ]
    return _check(
        "triangle-preservation",
        not stray,
        "no triangle touches a gadget" if not stray else f"triangle {stray[0]} touches a gadget",
    )


def check_port_exclusion(
    kind: str, delta: Optional[int] = None, limits: Optional[SolverLimits] = None
) -> Check:
    """The best independent set through a gadget's port never beats the
    port-free optimum (strictly worse for all but the smallest gadget)."""
    limits = limits or SolverLimits()
    graph, layout = gadgets.build_gadget(kind, delta)
    if layout.port is None:
        return Check("port-exclusion", SKIP, f"gadget kind {kind} has no port")
    try:
        m1 = solve_mis(graph, limits, "bb").alpha
        closed = set(graph.neighbors(layout.port)) | {layout.port}
        keep = [v for v in range(graph.n) if v not in closed]
        relabel = {v: i for i, v in enumerate(keep)}
        residual = Graph.from_edges(
            len(keep),
            [
                (relabel[u], relabel[v])
                for u, v in graph.edges()
                if u in relabel and v in relabel
            ],
        )
        m2 = 1 + solve_mis(residual, limits, "bb").alpha
    except ResourceLimitError as exc:
        return Check("port-exclusion", SKIP, f"solver budget exhausted: {exc}")
    ok = m2 <= m1
    strictness = "strict" if m2 < m1 else "tie"
    return _check(
        "port-exclusion",
        ok,
        f"alpha={m1}, best-with-port={m2} ({strictness})",
    )


def check_planarity_necessary(g_prime: Graph, cert: ReductionCertificate) -> Check:
    """Euler necessary condition plus the cut-edge attachment structure that
    preserves planarity of a planar input."""
    if cert.gadget_kind != gadgets.PLANAR5:
        return Check("planarity-necessary", SKIP, "not a planar-gadget reduction")
    if g_prime.n >= 3 and g_prime.m > 3 * g_prime.n - 6:
        return Check(
            "planarity-necessary",
            FAIL,
            f"m={g_prime.m} exceeds 3n-6={3 * g_prime.n - 6}",
        )
    for gi in cert.gadgets:
        rng = set(gi.vertex_range())
        external = {
            (w, x)
            for w in rng
            for x in g_prime.neighbors(w)
            if x not in rng
        }
        if external != {(gi.port, gi.owner)}:
            return Check(
                "planarity-necessary",
                FAIL,
                f"gadget at {gi.id_offset} is not attached by a single cut edge",
            )
    return Check(
        "planarity-necessary",
        PASS,
        f"m={g_prime.m} <= 3n-6={3 * g_prime.n - 6}; every gadget hangs off one cut edge",
    )


def verify_all(
    g: Graph,
    g_prime: Graph,
    cert: ReductionCertificate,
    with_oracle: bool = False,
    limits: Optional[SolverLimits] = None,
) -> VerificationReport:
    """Run the full check battery; solver-backed checks only with
    ``with_oracle``."""
    checks = list(check_certificate(g, g_prime, cert).checks)
    checks.append(check_triangle_preservation(g, g_prime, cert))
    checks.append(check_planarity_necessary(g_prime, cert))
    if with_oracle:
        checks.append(check_alpha_relation(g, g_prime, cert, limits))
        if cert.gadgets:
            gi = cert.gadgets[0]
            checks.append(check_port_exclusion(gi.kind, gi.delta, limits))
    else:
        checks.append(Check("alpha-relation", SKIP, "oracle checks disabled"))
    return VerificationReport(tuple(checks))
