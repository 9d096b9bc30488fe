"""The central data model: a convex rational polygon with marked interior points.

A marked point records a cluster of focus-focus values of an integrable
system: its position, its multiplicity, and the sign of the vertical cut used
to straighten the moment image at its column (+1 cuts upward, -1 downward).
The endpoint of a cut is the boundary point directly above (+1) or below (-1)
the mark; validation requires every endpoint to be a polygon vertex, which is
where the fake and hidden-Delzant vertex classes live.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Mapping, Optional, Sequence

from .errors import (
    ClassificationError,
    DomainError,
    GeometryError,
    ValidationFailure,
)
from .geometry import Point, cross


@dataclass(frozen=True)
class MarkedPoint:
    """An interior marked point with its multiplicity and cut direction."""

    position: Point
    multiplicity: int = 1
    cut_sign: int = -1

    def __post_init__(self):
        if not isinstance(self.multiplicity, int) or self.multiplicity < 1:
            raise GeometryError(f"multiplicity must be a positive integer, got {self.multiplicity!r}")
        if self.cut_sign not in (-1, 1):
            raise GeometryError(f"cut sign must be +1 or -1, got {self.cut_sign!r}")


def _mark_key(mark: MarkedPoint):
    return (mark.position.x, mark.position.y, mark.multiplicity, mark.cut_sign)


@dataclass(frozen=True)
class SemitoricPolygon:
    """Counter-clockwise convex polygon plus marked points.

    The vertex tuple is rotated so it starts at the lexicographically
    smallest vertex and marks are kept sorted, so equal polygons compare and
    serialize identically.  Construction normalises but does not validate;
    run :func:`validate` (or :func:`require_valid`) for the full rule set.
    """

    vertices: tuple[Point, ...]
    marks: tuple[MarkedPoint, ...] = ()

    def __post_init__(self):
        verts = tuple(self.vertices)
        if not verts:
            raise GeometryError("a polygon needs vertices")
        start = min(range(len(verts)), key=lambda i: verts[i])
        object.__setattr__(self, "vertices", verts[start:] + verts[:start])
        object.__setattr__(self, "marks", tuple(sorted(self.marks, key=_mark_key)))

    @property
    def j_min(self) -> Fraction:
        return min(v.x for v in self.vertices)

    @property
    def j_max(self) -> Fraction:
        return max(v.x for v in self.vertices)

    @property
    def total_multiplicity(self) -> int:
        """Total number of focus-focus points carried by the marks."""
        return sum(m.multiplicity for m in self.marks)

    def __str__(self) -> str:
        verts = " ".join(str(v) for v in self.vertices)
        return f"SemitoricPolygon[{verts}; {len(self.marks)} marks]"


@dataclass(frozen=True)
class Violation:
    rule: str
    location: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of :func:`validate`: per-vertex classes plus rule violations."""

    classifications: Mapping[Point, object]
    violations: tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class BoundaryChains:
    """Bottom and top boundary paths, both running left to right."""

    bottom: tuple[Point, ...]
    top: tuple[Point, ...]
    left_vertical: Optional[tuple[Point, Point]]
    right_vertical: Optional[tuple[Point, Point]]


def _structure_violations(polygon: SemitoricPolygon) -> list[Violation]:
    verts = polygon.vertices
    if len(verts) < 3:
        return [Violation("too-few-vertices", "polygon", f"{len(verts)} vertices, need at least 3")]
    if len(set(verts)) != len(verts):
        return [Violation("duplicate-vertex", "polygon", "vertices are not pairwise distinct")]
    n = len(verts)
    turns = [cross(verts[i - 1], verts[i], verts[(i + 1) % n]) for i in range(n)]
    if all(t < 0 for t in turns):
        return [Violation("not-counter-clockwise", "polygon", "vertices are listed in clockwise order")]
    out = []
    for i, t in enumerate(turns):
        if t == 0:
            out.append(Violation("not-strictly-convex", str(verts[i]), "collinear consecutive edges"))
        elif t < 0:
            out.append(Violation("not-strictly-convex", str(verts[i]), "reflex turn"))
    return out


@cache
def boundary_chains(polygon: SemitoricPolygon) -> BoundaryChains:
    """Split the boundary into bottom/top paths and the extreme vertical edges.

    Raises GeometryError when the polygon is degenerate (not strictly convex
    counter-clockwise).
    """
    problems = _structure_violations(polygon)
    if problems:
        raise GeometryError(f"degenerate polygon: {problems[0].message}")
    verts = polygon.vertices
    n = len(verts)
    j_min, j_max = polygon.j_min, polygon.j_max
    # canonical rotation puts the bottom-left vertex at index 0
    right_idx = [i for i, v in enumerate(verts) if v.x == j_max]
    bottom_right = min(right_idx, key=lambda i: verts[i].y)
    top_right = max(right_idx, key=lambda i: verts[i].y)
    left_idx = [i for i, v in enumerate(verts) if v.x == j_min]
    top_left = max(left_idx, key=lambda i: verts[i].y)

    bottom = verts[: bottom_right + 1]
    if top_left == 0:
        top_ccw = verts[top_right:] + (verts[0],)
    else:
        top_ccw = verts[top_right : top_left + 1]
    top = tuple(reversed(top_ccw))
    left_vertical = (verts[0], verts[top_left]) if len(left_idx) == 2 else None
    right_vertical = (verts[bottom_right], verts[top_right]) if len(right_idx) == 2 else None
    return BoundaryChains(bottom=tuple(bottom), top=top, left_vertical=left_vertical, right_vertical=right_vertical)


def vertical_edge_endpoints(polygon: SemitoricPolygon) -> frozenset[Point]:
    """Vertices incident to a vertical edge (images of fixed surfaces)."""
    chains = boundary_chains(polygon)
    points: set[Point] = set()
    for edge in (chains.left_vertical, chains.right_vertical):
        if edge is not None:
            points.update(edge)
    return frozenset(points)


def _interpolate(path: Sequence[Point], x: Fraction) -> Fraction:
    for a, b in zip(path, path[1:]):
        if a.x <= x <= b.x:
            t = (x - a.x) / (b.x - a.x)
            return a.y + t * (b.y - a.y)
    raise DomainError(f"x = {x} is outside the moment interval [{path[0].x}, {path[-1].x}]")


def slice_heights(polygon: SemitoricPolygon, x: Fraction) -> tuple[Fraction, Fraction]:
    """The vertical slice of the polygon at ``x`` as (y_bottom, y_top)."""
    x = Fraction(x)
    chains = boundary_chains(polygon)
    if not polygon.j_min <= x <= polygon.j_max:
        raise DomainError(f"x = {x} is outside the moment interval [{polygon.j_min}, {polygon.j_max}]")
    return _interpolate(chains.bottom, x), _interpolate(chains.top, x)


def contains_interior(polygon: SemitoricPolygon, point: Point) -> bool:
    """Strict interior membership test (exact)."""
    verts = polygon.vertices
    n = len(verts)
    return all(cross(verts[i], verts[(i + 1) % n], point) > 0 for i in range(n))


def validate(polygon: SemitoricPolygon) -> ValidationReport:
    """Check every structural rule and classify every vertex.

    Never raises on bad data: failures are collected in the report.  The
    rule set, in order:

    * at least three pairwise-distinct vertices, strictly convex, CCW;
    * marks strictly interior;
    * each mark's cut endpoint (top boundary point at the mark's column for
      cut +1, bottom for -1) is a vertex;
    * cuts ending at one vertex share a sign;
    * every vertex classifies as exactly one of Delzant / hidden Delzant /
      fake;
    * vertices on the extreme columns J_min, J_max classify as Delzant
      (which also forces the edge next to a vertical edge to have primitive
      first component 1).
    """
    from . import vertices as _vertices  # deferred: the lattice tests live there

    violations = _structure_violations(polygon)
    if violations:
        return ValidationReport({}, tuple(violations))

    vertex_set = set(polygon.vertices)
    marks_ok = True
    for idx, mark in enumerate(polygon.marks):
        where = f"marks[{idx}] at {mark.position}"
        if not contains_interior(polygon, mark.position):
            violations.append(Violation("mark-not-interior", where, "marked point is not strictly inside the polygon"))
            marks_ok = False
            continue
        endpoint = _vertices.cut_endpoint(polygon, mark)
        if endpoint not in vertex_set:
            violations.append(
                Violation(
                    "cut-endpoint-not-vertex",
                    where,
                    f"cut endpoint {endpoint} is not a vertex of the polygon",
                )
            )
            marks_ok = False
    if not marks_ok:
        return ValidationReport({}, tuple(violations))

    try:
        _vertices.cut_degrees(polygon)
    except ClassificationError as exc:
        violations.append(Violation("conflicting-cut-signs", "marks", str(exc)))
        return ValidationReport({}, tuple(violations))

    classifications: dict[Point, object] = {}
    j_min, j_max = polygon.j_min, polygon.j_max
    for vertex in polygon.vertices:
        try:
            result = _vertices.classify_vertex(polygon, vertex)
        except ClassificationError as exc:
            violations.append(Violation("unclassifiable-vertex", str(vertex), str(exc)))
            continue
        classifications[vertex] = result
        if vertex.x in (j_min, j_max) and result.kind is not _vertices.VertexKind.DELZANT:
            violations.append(
                Violation("extreme-not-delzant", str(vertex), f"extreme vertex classifies as {result.kind.value}")
            )
    return ValidationReport(classifications, tuple(violations))


def require_valid(polygon: SemitoricPolygon) -> SemitoricPolygon:
    """Return the polygon unchanged, raising ValidationFailure when invalid."""
    report = validate(polygon)
    if not report.valid:
        raise ValidationFailure(report)
    return polygon
