"""Planar convex polygons with exact rational vertices and their polars."""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .exceptions import DegeneratePolygonError, UnboundedDualError

logger = logging.getLogger(__name__)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _as_point(point):
    return tuple(Fraction(c) for c in point)


def _strictly_convex(vertices):
    """Drop vertices that are not strict corners of the closed chain."""
    vertices = list(vertices)
    changed = True
    while changed and len(vertices) >= 3:
        changed = False
        for i in range(len(vertices)):
            prev, here = vertices[i - 1], vertices[i]
            succ = vertices[(i + 1) % len(vertices)]
            if _cross(prev, here, succ) <= 0:
                del vertices[i]
                changed = True
                break
    return vertices


@dataclass(frozen=True)
class ConvexPolygon:
    """Counterclockwise strictly convex polygon.

    Vertices are rotated to start at the lexicographically smallest one,
    so that equal polygons compare equal.
    """

    vertices: tuple

    def __post_init__(self):
        vertices = [_as_point(v) for v in self.vertices]
        if len(vertices) < 3:
            raise DegeneratePolygonError(
                f'Многоугольник должен иметь не меньше трех вершин, '
                f'получено {len(vertices)}'
            )
        for i in range(len(vertices)):
            if _cross(vertices[i - 2], vertices[i - 1], vertices[i]) <= 0:
                raise DegeneratePolygonError(
                    'Вершины должны идти против часовой стрелки '
                    'и образовывать строго выпуклый многоугольник'
                )
        start = vertices.index(min(vertices))
        object.__setattr__(
            self, 'vertices', tuple(vertices[start:] + vertices[:start])
        )

    @classmethod
    def from_points(cls, points):
        """Convex hull of a finite point set; coordinates are kept exact."""
        exact = [_as_point(p) for p in points]
        if len(exact) < 3:
            raise DegeneratePolygonError('Для оболочки нужно три точки')
        try:
            hull = ConvexHull(np.array(exact, dtype=float))
        except QhullError as exc:
            raise DegeneratePolygonError(
                'Точки лежат на одной прямой'
            ) from exc
        return cls(_strictly_convex(exact[i] for i in hull.vertices))

    def __len__(self):
        return len(self.vertices)

    def edges(self):
        count = len(self.vertices)
        return [
            (self.vertices[i], self.vertices[(i + 1) % count])
            for i in range(count)
        ]

    def contains(self, point, strict=True):
        point = _as_point(point)
        crosses = [_cross(a, b, point) for a, b in self.edges()]
        if strict:
            return all(c > 0 for c in crosses)
        return all(c >= 0 for c in crosses)

    @property
    def contains_origin(self):
        return self.contains((0, 0))

    def facets(self):
        """Each edge as the vector a with edge line {x : <a, x> = 1}."""
        if not self.contains_origin:
            raise UnboundedDualError(
                'Поляра ограничена только если 0 лежит внутри многоугольника'
            )
        normals = []
        for (x0, y0), (x1, y1) in self.edges():
            nx, ny = y1 - y0, x0 - x1
            offset = nx * x0 + ny * y0
            normals.append((nx / offset, ny / offset))
        return normals

    def polar_dual(self):
        """{xi : <xi, x> < 1 for all x in P}; facets become vertices."""
        dual = ConvexPolygon(self.facets())
        logger.debug(
            'Поляра многоугольника с %d вершинами', len(self.vertices)
        )
        return dual

    def support(self, xi):
        return max(xi[0] * x + xi[1] * y for x, y in self.vertices)

    def as_array(self):
        return np.array(self.vertices, dtype=float)

    def as_list(self):
        return [[float(x), float(y)] for x, y in self.vertices]


def regular_polygon(count, radius=1, denominator=2 ** 20):
    """Rational approximation of the regular polygon inscribed in a circle."""
    points = [
        (
            Fraction(round(radius * math.cos(a) * denominator), denominator),
            Fraction(round(radius * math.sin(a) * denominator), denominator),
        )
        for a in 2 * math.pi * np.arange(count) / count
    ]
    return ConvexPolygon.from_points(points)


def random_polygon(rng, count=8, denominator=64):
    """An origin-interior polygon with rational vertices."""
    while True:
        angles = np.sort(rng.uniform(0, 2 * math.pi, size=count))
        radii = rng.uniform(0.5, 2.0, size=count)
        points = [
            (
                Fraction(round(r * math.cos(a) * denominator), denominator),
                Fraction(round(r * math.sin(a) * denominator), denominator),
            )
            for a, r in zip(angles, radii)
        ]
        try:
            polygon = ConvexPolygon.from_points(points)
        except DegeneratePolygonError:
            continue
        if polygon.contains_origin:
            return polygon


def random_extension(rng, polygon, count=3, denominator=64):
    """A polygon containing ``polygon``: the hull with extra points."""
    extra = [
        (
            Fraction(int(rng.integers(-3 * denominator, 3 * denominator)),
                     denominator),
            Fraction(int(rng.integers(-3 * denominator, 3 * denominator)),
                     denominator),
        )
        for _ in range(count)
    ]
    return ConvexPolygon.from_points(list(polygon.vertices) + extra)
