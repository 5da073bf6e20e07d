"""Mobile base station placement over a simple polygon.

The position maximizing the worst-case SNR over a region is the center of
the smallest disk covering the region, and for a polygon it suffices to
cover the vertices.  The unconstrained optimum is found by scoring a finite
candidate set (midpoints of vertex pairs and circumcenters of vertex
triples) by the maximum distance to all vertices.  When the base station
must stay outside or on the boundary of the polygon, interior candidates
are discarded and two boundary families are added: perpendicular feet of
vertices on edges and intersections of vertex-pair bisectors with edges.

All tolerances are relative to the polygon diameter so the module is
scale-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import NamedTuple, Sequence

_EPS_REL = 1e-9


class Point(NamedTuple):
    x: float
    y: float


class RegionClass(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


@dataclass(frozen=True)
class Disk:
    center: Point
    radius: float


def _dist(a: Point | tuple[float, float], b: Point | tuple[float, float]) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def _signed_area(vertices: Sequence[Point]) -> float:
    total = 0.0
    for i, (x1, y1) in enumerate(vertices):
        x2, y2 = vertices[(i + 1) % len(vertices)]
        total += x1 * y2 - x2 * y1
    return 0.5 * total


def _orient(a: Point, b: Point, c: Point) -> float:
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    # p is assumed collinear with a-b.
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def _segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True when segments a-b and c-d share any point."""
    o1 = _orient(a, b, c)
    o2 = _orient(a, b, d)
    o3 = _orient(c, d, a)
    o4 = _orient(c, d, b)
    if ((o1 > 0) != (o2 > 0)) and ((o3 > 0) != (o4 > 0)) and o1 != 0 and o2 != 0 and o3 != 0 and o4 != 0:
        return True
    if o1 == 0 and _on_segment(a, b, c):
        return True
    if o2 == 0 and _on_segment(a, b, d):
        return True
    if o3 == 0 and _on_segment(c, d, a):
        return True
    if o4 == 0 and _on_segment(c, d, b):
        return True
    return False


class Polygon:
    """Simple polygon with vertices normalized to counter-clockwise order.

    Construction rejects polygons with fewer than three vertices,
    consecutive duplicate vertices, all vertices collinear, or
    self-intersecting boundaries.
    """

    def __init__(self, vertices: Sequence[tuple[float, float]]):
        pts = [Point(float(x), float(y)) for x, y in vertices]
        if len(pts) < 3:
            raise ValueError("a polygon needs at least 3 vertices")
        for p in pts:
            if not (math.isfinite(p.x) and math.isfinite(p.y)):
                raise ValueError("vertex coordinates must be finite")
        m = len(pts)
        for i in range(m):
            if pts[i] == pts[(i + 1) % m]:
                raise ValueError(f"consecutive duplicate vertex at index {i}")
        diameter = max(_dist(a, b) for a, b in combinations(pts, 2))
        area = _signed_area(pts)
        if abs(area) <= 1e-12 * diameter * diameter:
            raise ValueError("degenerate polygon: all vertices are collinear")
        if not self._is_simple(pts):
            raise ValueError("polygon boundary intersects itself")
        if area < 0:
            pts.reverse()
        self.vertices: tuple[Point, ...] = tuple(pts)
        self.diameter: float = diameter
        self.eps: float = _EPS_REL * diameter
        self.is_convex: bool = self._check_convex(pts, diameter)

    @staticmethod
    def _is_simple(pts: list[Point]) -> bool:
        m = len(pts)
        for i in range(m):
            a, b = pts[i], pts[(i + 1) % m]
            # A spike (next edge folding back onto this one) is degenerate.
            c = pts[(i + 2) % m]
            if _orient(a, b, c) == 0 and (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y) < 0:
                return False
            for j in range(i + 1, m):
                if j == i or (j + 1) % m == i or (i + 1) % m == j:
                    continue
                cseg, dseg = pts[j], pts[(j + 1) % m]
                if _segments_cross(a, b, cseg, dseg):
                    return False
        return True

    @staticmethod
    def _check_convex(pts: list[Point], diameter: float) -> bool:
        m = len(pts)
        tol = _EPS_REL * diameter * diameter
        return all(_orient(pts[i], pts[(i + 1) % m], pts[(i + 2) % m]) >= -tol for i in range(m))

    def edges(self) -> list[tuple[Point, Point]]:
        m = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % m]) for i in range(m)]


def _point_segment_distance(p: Point, a: Point, b: Point) -> float:
    ax, ay = b.x - a.x, b.y - a.y
    seg2 = ax * ax + ay * ay
    if seg2 == 0.0:
        return _dist(p, a)
    t = ((p.x - a.x) * ax + (p.y - a.y) * ay) / seg2
    t = min(1.0, max(0.0, t))
    return _dist(p, Point(a.x + t * ax, a.y + t * ay))


def classify_point(poly: Polygon, p: Point | tuple[float, float]) -> RegionClass:
    """Locate a point relative to the polygon by ray casting.

    Points within the boundary tolerance (1e-9 of the polygon diameter)
    of any edge classify as BOUNDARY.
    """
    pt = Point(float(p[0]), float(p[1]))
    if min(_point_segment_distance(pt, a, b) for a, b in poly.edges()) <= poly.eps:
        return RegionClass.BOUNDARY
    inside = False
    for a, b in poly.edges():
        if (a.y > pt.y) != (b.y > pt.y):
            x_cross = a.x + (pt.y - a.y) * (b.x - a.x) / (b.y - a.y)
            if pt.x < x_cross:
                inside = not inside
    return RegionClass.INTERIOR if inside else RegionClass.EXTERIOR


def pair_candidate(p_i: Point | tuple, p_j: Point | tuple) -> Point:
    """Center of the disk having the two points as a diameter: their midpoint."""
    if tuple(p_i) == tuple(p_j):
        raise ValueError("pair candidate requires two distinct points")
    return Point((p_i[0] + p_j[0]) / 2.0, (p_i[1] + p_j[1]) / 2.0)


def circumcenter(p_i: Point | tuple, p_j: Point | tuple, p_k: Point | tuple) -> Point | None:
    """Center of the circle through three points, or None when collinear."""
    xi, yi = p_i
    xj, yj = p_j
    xk, yk = p_k
    den = 2.0 * (xi * (yj - yk) + xj * (yk - yi) + xk * (yi - yj))
    scale = max(_dist(p_i, p_j), _dist(p_j, p_k), _dist(p_i, p_k))
    if abs(den) <= _EPS_REL * scale * scale:
        return None
    sq_i = xi * xi + yi * yi
    sq_j = xj * xj + yj * yj
    sq_k = xk * xk + yk * yk
    x = (sq_i * (yj - yk) + sq_j * (yk - yi) + sq_k * (yi - yj)) / den
    y = (sq_i * (xk - xj) + sq_j * (xi - xk) + sq_k * (xj - xi)) / den
    return Point(x, y)


def max_dist_to_vertices(poly: Polygon, p: Point | tuple[float, float]) -> float:
    """Radius needed to cover every polygon vertex from point p."""
    return max(_dist(p, v) for v in poly.vertices)


def foot_of_perpendicular(
    vertex: Point | tuple, edge_start: Point | tuple, edge_end: Point | tuple
) -> tuple[Point, bool]:
    """Orthogonal projection of a vertex onto an edge's supporting line.

    Returns the foot and whether it falls within the closed segment.
    """
    xj, yj = vertex
    xi, yi = edge_start
    xi1, yi1 = edge_end
    dx, dy = xi1 - xi, yi1 - yi
    den = dx * dx + dy * dy
    if den == 0.0:
        raise ValueError("edge endpoints must be distinct")
    x = (xj * dx * dx + dy * (xi * yi1 + xi1 * yj - xi * yj - xi1 * yi)) / den
    y = (yj * dy * dy + dx * (xi1 * yi + xj * yi1 - xj * yi - xi * yi1)) / den
    t = ((x - xi) * dx + (y - yi) * dy) / den
    return Point(x, y), -1e-12 <= t <= 1.0 + 1e-12


def bisector_edge_candidate(
    p_j: Point | tuple, p_k: Point | tuple, edge_start: Point | tuple, edge_end: Point | tuple
) -> Point | None:
    """Intersection of the perpendicular bisector of (p_j, p_k) with an edge.

    The returned point is equidistant from p_j and p_k.  None when the
    bisector is parallel to the edge or the intersection falls outside the
    closed segment.
    """
    xj, yj = p_j
    xk, yk = p_k
    xi, yi = edge_start
    xi1, yi1 = edge_end
    den = 2.0 * (yk - yj) * (yi1 - yi) + 2.0 * (xk - xj) * (xi1 - xi)
    scale = max(_dist(p_j, p_k), _dist(edge_start, edge_end))
    if abs(den) <= _EPS_REL * scale * scale:
        return None
    diff = xk * xk - xj * xj + yk * yk - yj * yj
    x = ((xi1 - xi) * diff + 2.0 * (yk - yj) * (xi * yi1 - xi1 * yi)) / den
    y = ((yi1 - yi) * diff + 2.0 * (xk - xj) * (xi1 * yi - xi * yi1)) / den
    dx, dy = xi1 - xi, yi1 - yi
    t = ((x - xi) * dx + (y - yi) * dy) / (dx * dx + dy * dy)
    if not (-1e-12 <= t <= 1.0 + 1e-12):
        return None
    return Point(x, y)


def _best_candidate(poly: Polygon, candidates: Sequence[Point]) -> Disk:
    # Minimum max-distance score; ties (1e-9 relative) broken by smallest (x, y).
    scored = [(max_dist_to_vertices(poly, c), c) for c in candidates]
    r_min = min(r for r, _ in scored)
    tied = [c for r, c in scored if r <= r_min * (1.0 + _EPS_REL)]
    center = min(tied, key=lambda c: (c.x, c.y))
    return Disk(center=center, radius=max_dist_to_vertices(poly, center))


def min_enclosing_disk(poly: Polygon) -> Disk:
    """Smallest disk covering the polygon (equivalently, all its vertices).

    The optimal center is the midpoint of some vertex pair or the
    circumcenter of some vertex triple, so scoring that candidate set by
    maximum vertex distance is exact.
    """
    verts = poly.vertices
    candidates: list[Point] = [
        pair_candidate(a, b) for a, b in combinations(verts, 2)
    ]
    for a, b, c in combinations(verts, 3):
        cc = circumcenter(a, b, c)
        if cc is not None:
            candidates.append(cc)
    return _best_candidate(poly, candidates)


def constrained_min_enclosing_disk(poly: Polygon) -> Disk:
    """Smallest covering disk whose center avoids the polygon interior.

    Keeps the pair/triple candidates that are not interior and adds the two
    boundary families: perpendicular feet of every vertex on every edge and
    bisector-edge intersections for every vertex pair, both restricted to
    their closed segment.  Projecting an edge's own endpoints contributes the
    polygon vertices themselves, which covers optima pinned at a corner.
    """
    verts = poly.vertices
    candidates: list[Point] = []
    for a, b in combinations(verts, 2):
        c = pair_candidate(a, b)
        if classify_point(poly, c) is not RegionClass.INTERIOR:
            candidates.append(c)
    for a, b, c in combinations(verts, 3):
        cc = circumcenter(a, b, c)
        if cc is not None and classify_point(poly, cc) is not RegionClass.INTERIOR:
            candidates.append(cc)
    for e1, e2 in poly.edges():
        for v in verts:
            foot, on_seg = foot_of_perpendicular(v, e1, e2)
            if on_seg:
                candidates.append(foot)
        for pj, pk in combinations(verts, 2):
            pt = bisector_edge_candidate(pj, pk, e1, e2)
            if pt is not None:
                candidates.append(pt)
    return _best_candidate(poly, candidates)
