"""Degree-regularizing reductions and their machine-checkable certificates.

Pipeline order is fixed: parity fix (disjoint K_{Δ+2} when the maximum
degree is even), star padding (when targeting a degree above the current
maximum), then gadget attachment on every deficient vertex.  Original
vertices always occupy ids 0..source_n-1 of the result, padding vertices
come next, and gadget blocks are allocated in (owner id, gadget index)
order, so results are reproducible byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Set, Tuple

from . import gadgets
from .graph import (
    Graph,
    GraphError,
    InfeasibleError,
    complete_graph,
    disjoint_union,
    is_independent_set,
    star_graph,
)

PARITY_FIX = "parity-clique"
STAR_PAD = "star-pad"


@dataclass(frozen=True)
class ReductionStep:
    kind: str  # PARITY_FIX | STAR_PAD
    start: int  # first added vertex id
    end: int  # one past the last added vertex id
    alpha_offset: int

    @property
    def size(self) -> int:
        return self.end - self.start

    def witness(self) -> FrozenSet[int]:
        """An independent set of the added component realizing alpha_offset."""
        if self.kind == PARITY_FIX:
            return frozenset((self.start,))
        # star: center first, then the leaves
        return frozenset(range(self.start + 1, self.end))


@dataclass(frozen=True)
class GadgetInstance:
    owner: int  # vertex the gadget is attached to (in the padded graph)
    index: int  # 1-based, per owner
    kind: str
    delta: Optional[int]  # target degree for general-odd gadgets
    id_offset: int  # base id of the gadget block in the reduced graph
    size: int

    @property
    def port(self) -> int:
        return self.id_offset + self.size - 1  # port is always the last id

    def vertex_range(self) -> range:
        return range(self.id_offset, self.id_offset + self.size)


@dataclass(frozen=True)
class ReductionCertificate:
    target_degree: int
    source_n: int
    steps: Tuple[ReductionStep, ...]
    gadgets: Tuple[GadgetInstance, ...]
    per_gadget_alpha: int
    total_offset: int
    source_hash: str
    result_hash: str

    @property
    def origin_range(self) -> Tuple[int, int]:
        return (0, self.source_n)

    @property
    def padded_n(self) -> int:
        return self.source_n + sum(s.size for s in self.steps)

    @property
    def gadget_kind(self) -> str:
        return self.gadgets[0].kind if self.gadgets else gadgets.GENERAL

    def to_json(self) -> str:
        doc = {
            "target_degree": self.target_degree,
            "source_n": self.source_n,
            "steps": [
                {
                    "kind": s.kind,
                    "start": s.start,
                    "end": s.end,
                    "alpha_offset": s.alpha_offset,
                }
                for s in self.steps
            ],
            "gadgets": [
                {
                    "owner": gi.owner,
                    "index": gi.index,
                    "kind": gi.kind,
                    "delta": gi.delta,
                    "id_offset": gi.id_offset,
                    "size": gi.size,
                    "port": gi.port,
                }
                for gi in self.gadgets
            ],
            "per_gadget_alpha": self.per_gadget_alpha,
            "total_offset": self.total_offset,
            "origin_range": list(self.origin_range),
            "source_hash": self.source_hash,
            "result_hash": self.result_hash,
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"

    @staticmethod
    def from_json(text: str) -> "ReductionCertificate":
        try:
            doc = json.loads(text)
            cert = ReductionCertificate(
                target_degree=doc["target_degree"],
                source_n=doc["source_n"],
                steps=tuple(
                    ReductionStep(s["kind"], s["start"], s["end"], s["alpha_offset"])
                    for s in doc["steps"]
                ),
                gadgets=tuple(
                    GadgetInstance(
                        g["owner"], g["index"], g["kind"], g["delta"],
                        g["id_offset"], g["size"],
                    )
                    for g in doc["gadgets"]
                ),
                per_gadget_alpha=doc["per_gadget_alpha"],
                total_offset=doc["total_offset"],
                source_hash=doc["source_hash"],
                result_hash=doc["result_hash"],
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed certificate: {exc}") from exc
        for gi, raw in zip(cert.gadgets, doc["gadgets"]):
            if raw["port"] != gi.port:
                raise GraphError("certificate gadget port disagrees with its id range")
        return cert


# ---------------------------------------------------------------------------
# padding steps


def ensure_odd_delta(g: Graph) -> Tuple[Graph, Optional[ReductionStep]]:
    """Force an odd maximum degree by adding a disjoint K_{Δ+2} if needed.

    The clique's vertices end up with degree Δ+1, the new maximum, so they
    never need gadgets later.  Its independence number is 1, hence the
    step's offset.
    """
    if g.n == 0:
        raise GraphError("cannot regularize the empty graph")
    delta = g.max_degree()
    if delta % 2 == 1:
        return g, None
    clique = complete_graph(delta + 2)
    step = ReductionStep(PARITY_FIX, g.n, g.n + clique.n, alpha_offset=1)
    return disjoint_union(g, clique), step


def pad_to_target(g: Graph, d: int) -> Tuple[Graph, Optional[ReductionStep]]:
    """Raise the maximum degree to ``d`` by adding a disjoint star with
    ``d`` leaves.  The star's independence number is ``d`` (its leaves)."""
    delta = g.max_degree()
    if d < delta:
        raise InfeasibleError(f"target degree {d} below maximum degree {delta}")
    if d == delta:
        return g, None
    star = star_graph(d)
    step = ReductionStep(STAR_PAD, g.n, g.n + star.n, alpha_offset=d)
    return disjoint_union(g, star), step


# ---------------------------------------------------------------------------
# gadget attachment


def _attach_gadgets(g: Graph, delta: int, kind: str) -> Tuple[Graph, Tuple[GadgetInstance, ...]]:
    blueprint, _ = gadgets.build_gadget(kind, delta if kind == gadgets.GENERAL else None)
    size = blueprint.n
    blueprint_edges = list(blueprint.edges())
    port_rel = size - 1

    edges = list(g.edges())
    instances = []
    nid = g.n
    for v in range(g.n):
        for j in range(1, delta - g.degree(v) + 1):
            edges += [(nid + a, nid + b) for a, b in blueprint_edges]
            edges.append((nid + port_rel, v))
            gadget_delta = delta if kind == gadgets.GENERAL else None
            instances.append(GadgetInstance(v, j, kind, gadget_delta, nid, size))
            nid += size
    return Graph.from_edges(nid, edges), tuple(instances)


def _make_certificate(
    source: Graph,
    result: Graph,
    delta: int,
    steps: Tuple[ReductionStep, ...],
    instances: Tuple[GadgetInstance, ...],
    per_gadget_alpha: int,
) -> ReductionCertificate:
    total = sum(s.alpha_offset for s in steps) + len(instances) * per_gadget_alpha
    return ReductionCertificate(
        target_degree=delta,
        source_n=source.n,
        steps=steps,
        gadgets=instances,
        per_gadget_alpha=per_gadget_alpha,
        total_offset=total,
        source_hash=source.content_hash(),
        result_hash=result.content_hash(),
    )


def regularize(g: Graph, delta: int) -> Tuple[Graph, ReductionCertificate]:
    """Attach gadgets until every vertex has degree exactly ``delta``.

    Expects the input already prepared (odd maximum degree at most
    ``delta``); use :func:`reduce_to_regular` for the full pipeline.
    """
    if delta < 3 or delta % 2 == 0:
        raise GraphError(f"target degree must be odd and >= 3, got {delta}")
    if g.max_degree() > delta:
        raise InfeasibleError(
            f"maximum degree {g.max_degree()} exceeds target degree {delta}"
        )
    result, instances = _attach_gadgets(g, delta, gadgets.GENERAL)
    return result, _make_certificate(
        g, result, delta, (), instances, gadgets.gadget_alpha(delta)
    )


def regularize_planar(g: Graph) -> Tuple[Graph, ReductionCertificate]:
    """5-regularize with the planar gadget; planarity of the input is the
    caller's responsibility and is preserved structurally (each gadget is
    planar and hangs off a single cut edge)."""
    if g.max_degree() > 5:
        raise InfeasibleError(f"maximum degree {g.max_degree()} exceeds 5")
    result, instances = _attach_gadgets(g, 5, gadgets.PLANAR5)
    return result, _make_certificate(
        g, result, 5, (), instances, gadgets.planar_gadget_alpha()
    )


def reduce_to_regular(
    g: Graph, delta: int, strict: bool = False
) -> Tuple[Graph, ReductionCertificate]:
    """Full pipeline: parity fix, star padding, gadget attachment."""
    if delta < 3 or delta % 2 == 0:
        raise GraphError(f"target degree must be odd and >= 3, got {delta}")
    if g.n == 0:
        return g, _make_certificate(g, g, delta, (), (), gadgets.gadget_alpha(delta))
    if g.max_degree() > delta:
        raise InfeasibleError(
            f"maximum degree {g.max_degree()} exceeds target degree {delta}"
        )
    steps = []
    padded = g
    if strict and g.max_degree() % 2 == 0:
        raise InfeasibleError("input has even maximum degree and strict mode is on")
    padded, step = ensure_odd_delta(padded)
    if step:
        steps.append(step)
    if padded.max_degree() > delta:
        raise InfeasibleError(
            f"parity fix raises the maximum degree past the target {delta}"
        )
    padded, step = pad_to_target(padded, delta)
    if step:
        steps.append(step)
    result, instances = _attach_gadgets(padded, delta, gadgets.GENERAL)
    return result, _make_certificate(
        g, result, delta, tuple(steps), instances, gadgets.gadget_alpha(delta)
    )


def rebuild_padded(g: Graph, cert: ReductionCertificate) -> Graph:
    """Reconstruct the padded source graph from the certificate's steps."""
    padded = g
    for step in cert.steps:
        if step.start != padded.n:
            raise GraphError("certificate step ranges are not contiguous")
        if step.kind == PARITY_FIX:
            padded = disjoint_union(padded, complete_graph(step.size))
        elif step.kind == STAR_PAD:
            padded = disjoint_union(padded, star_graph(step.size - 1))
        else:
            raise GraphError(f"unknown reduction step kind {step.kind!r}")
    return padded


# ---------------------------------------------------------------------------
# solution maps


def _gadget_witness(gi: GadgetInstance) -> Set[int]:
    _, layout = gadgets.build_gadget(gi.kind, gi.delta)
    return {gi.id_offset + v for v in layout.canonical_mis}


def forward_map(g: Graph, members: Iterable[int], cert: ReductionCertificate) -> FrozenSet[int]:
    """Lift an independent set of the source graph to one of the reduced
    graph; the result gains exactly ``cert.total_offset`` vertices."""
    s = set(members)
    if any(v >= cert.source_n or v < 0 for v in s):
        raise GraphError("vertex id outside the source graph")
    if not is_independent_set(g, s):
        raise GraphError("input set is not independent in the source graph")
    out = set(s)
    for step in cert.steps:
        out |= step.witness()
    for gi in cert.gadgets:
        out |= _gadget_witness(gi)
    return frozenset(out)


def recover(
    g_prime: Graph, members: Iterable[int], cert: ReductionCertificate
) -> FrozenSet[int]:
    """Restrict an independent set of the reduced graph to the original
    vertices; loses at most ``cert.total_offset`` vertices."""
    s = set(members)
    if not is_independent_set(g_prime, s):
        raise GraphError("input set is not independent in the reduced graph")
    return frozenset(v for v in s if v < cert.source_n)


def normalize(
    g_prime: Graph, members: Iterable[int], cert: ReductionCertificate
) -> FrozenSet[int]:
    """Rewrite an independent set of the reduced graph so no gadget port is
    used, never losing cardinality.

    Any selection inside a gadget that touches the port is replaced by the
    gadget's canonical port-free maximum independent set; that set has no
    edges leaving the gadget, so the swap is always safe.
    """
    s = set(members)
    if not is_independent_set(g_prime, s):
        raise GraphError("input set is not independent in the reduced graph")
    out = set(s)
    for gi in cert.gadgets:
        block = set(gi.vertex_range())
        portion = out & block
        if gi.port in portion:
            out -= block
            out |= _gadget_witness(gi)
    return frozenset(out)
