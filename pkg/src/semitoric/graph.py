"""The labeled directed graph classifying the underlying circle action.

Construction from a presentation:

* every Delzant or hidden-Delzant vertex away from the vertical edges is an
  isolated graph vertex labeled by its moment value;
* every mark contributes multiplicity-many isolated vertices at its column;
* each vertical edge becomes a fat vertex (genus 0 sphere) whose area label
  is the edge length;
* each k-run of boundary edges becomes a directed edge, south pole to north
  pole, weighted k.

Two presentations of one system always produce equal graphs, which is what
the canonical form below makes checkable byte-for-byte.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DomainError
from .geometry import format_rational
from .polygon import SemitoricPolygon, boundary_chains, vertical_edge_endpoints
from .vertices import VertexKind, classify_vertex, zk_chains

ISOLATED = "isolated"
FAT = "fat"

# permutation budget for breaking label ties deterministically
TIE_BLOCK_LIMIT = 8
TIE_PRODUCT_LIMIT = 40320


@dataclass(frozen=True)
class GraphVertex:
    kind: str
    label: Fraction
    genus: Optional[int] = None
    area: Optional[Fraction] = None
    provenance: Optional[str] = None  # diagnostics only; excluded from equality


@dataclass(frozen=True)
class GraphEdge:
    source: int
    target: int
    weight: int


@dataclass(frozen=True)
class KarshonGraph:
    vertices: tuple[GraphVertex, ...]
    edges: tuple[GraphEdge, ...]


def build_graph(polygon: SemitoricPolygon) -> KarshonGraph:
    """Construct the labeled directed graph of a validated presentation."""
    on_vertical = vertical_edge_endpoints(polygon)
    vertices: list[GraphVertex] = []
    ids: dict[object, int] = {}

    for v in polygon.vertices:
        c = classify_vertex(polygon, v)
        if c.kind is VertexKind.FAKE or v in on_vertical:
            continue
        ids[v] = len(vertices)
        vertices.append(GraphVertex(ISOLATED, v.x, provenance="elliptic-elliptic"))
    for mark in polygon.marks:
        for _ in range(mark.multiplicity):
            vertices.append(GraphVertex(ISOLATED, mark.position.x, provenance="focus-focus"))
    chains = boundary_chains(polygon)
    for edge in (chains.left_vertical, chains.right_vertical):
        if edge is None:
            continue
        bottom, top = edge
        vertices.append(
            GraphVertex(FAT, bottom.x, genus=0, area=top.y - bottom.y, provenance="fixed-surface")
        )

    edges = tuple(
        GraphEdge(ids[chain.start_vertex], ids[chain.end_vertex], chain.k)
        for chain in zk_chains(polygon)
    )
    return KarshonGraph(tuple(vertices), edges)


def serialize_graph(graph: KarshonGraph) -> str:
    """Deterministic JSON for a graph, rationals as exact strings."""
    rows = []
    for i, v in enumerate(graph.vertices):
        row: dict = {"id": i, "kind": v.kind, "label": format_rational(v.label)}
        if v.kind == FAT:
            row["genus"] = v.genus
            row["area"] = format_rational(v.area)
        rows.append(row)
    edges = [
        {"from": e.source, "to": e.target, "weight": e.weight}
        for e in sorted(graph.edges, key=lambda e: (e.source, e.target, e.weight))
    ]
    return json.dumps({"vertices": rows, "edges": edges}, separators=(",", ":"))


def _sort_key(vertex: GraphVertex):
    return (vertex.label, vertex.kind, vertex.area if vertex.area is not None else Fraction(0))


def canonical_form(graph: KarshonGraph) -> KarshonGraph:
    """Provenance-stripped copy with vertices sorted and ties broken.

    Vertices sort by (label, kind, area).  Isolated vertices sharing a label
    are interchangeable up to their edge incidences, so each tied block is
    permuted and the serialization-minimal assignment wins; blocks above
    size 8 raise rather than risking nondeterminism.
    """
    stripped = [GraphVertex(v.kind, v.label, v.genus, v.area) for v in graph.vertices]
    order = sorted(range(len(stripped)), key=lambda i: _sort_key(stripped[i]))

    blocks: list[list[int]] = []  # positions in `order` holding tied isolated vertices
    start = 0
    while start < len(order):
        end = start
        while (
            end + 1 < len(order)
            and _sort_key(stripped[order[end + 1]]) == _sort_key(stripped[order[start]])
        ):
            end += 1
        if end > start and stripped[order[start]].kind == ISOLATED:
            blocks.append(list(range(start, end + 1)))
        start = end + 1

    def realize(assignment: tuple[tuple[int, ...], ...]) -> KarshonGraph:
        slots = list(order)
        for block, perm in zip(blocks, assignment):
            originals = [order[pos] for pos in block]
            for pos, which in zip(block, perm):
                slots[pos] = originals[which]
        position = {old: new for new, old in enumerate(slots)}
        vertices = tuple(stripped[old] for old in slots)
        edges = tuple(
            sorted(
                (GraphEdge(position[e.source], position[e.target], e.weight) for e in graph.edges),
                key=lambda e: (e.source, e.target, e.weight),
            )
        )
        return KarshonGraph(vertices, edges)

    if not blocks:
        return realize(())
    for block in blocks:
        if len(block) > TIE_BLOCK_LIMIT:
            raise DomainError(f"{len(block)} same-label vertices exceed the tie-break budget")
    total = 1
    for block in blocks:
        for n in range(2, len(block) + 1):
            total *= n
        if total > TIE_PRODUCT_LIMIT:
            raise DomainError("too many tied vertex blocks to break ties deterministically")
    candidates = itertools.product(
        *(itertools.permutations(range(len(block))) for block in blocks)
    )
    return min((realize(a) for a in candidates), key=serialize_graph)


def canonical_graph(graph: KarshonGraph) -> str:
    """Canonical byte-stable serialization; equal strings mean equal graphs."""
    return serialize_graph(canonical_form(graph))


def graphs_equal(first: KarshonGraph, second: KarshonGraph) -> bool:
    return canonical_graph(first) == canonical_graph(second)


def betti_b2(graph: KarshonGraph) -> int:
    """Rank of degree-2 cohomology of the underlying manifold.

    Fixed components are the critical set of a perfect Morse-Bott function
    whose non-extremal isolated points all have index 2, so the rank counts
    interior isolated vertices plus fat vertices.
    """
    if not graph.vertices:
        return 0
    labels = [v.label for v in graph.vertices]
    lo, hi = min(labels), max(labels)
    return sum(
        1
        for v in graph.vertices
        if v.kind == FAT or (v.kind == ISOLATED and lo < v.label < hi)
    )


def kirwan_check(graph: KarshonGraph, focus_count: int) -> bool:
    """The number of focus-focus points never exceeds rank H^2."""
    return focus_count <= betti_b2(graph)
