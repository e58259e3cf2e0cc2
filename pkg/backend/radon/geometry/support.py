"""Support functions and the zero component of the planar transform sMf.

For f >= 0 supported in a compact set C_f, sMf(xi) vanishes exactly when
the line <xi, x> = 1 misses C_f.  The connected component of {sMf = 0}
around 0 is the polar dual of the convex hull of C_f and {0}, that is
the sublevel set {H < 1} of the support function H of that set.
"""
import logging
import math
from dataclasses import asdict, dataclass

import numpy as np
from django.conf import settings
from scipy import ndimage
from scipy.spatial import ConvexHull, QhullError
from scipy.spatial.distance import directed_hausdorff

from archimedean.specfun import gauss_jacobi
from archimedean.testfns import BumpFunction

from .exceptions import GeometryError, UnboundedDualError
from .polygons import ConvexPolygon

logger = logging.getLogger(__name__)

ANNULUS = 'annulus'
POINT = 'point'

LINE_ORDER = 64
HULL_SAMPLES = 180


def support_function(points, xi):
    """H(xi) = max <xi, x> over a nonempty point set; xi may be a grid."""
    points = np.asarray(points, dtype=float).reshape(-1, 2)
    if not len(points):
        raise GeometryError('Опорная функция пустого множества не определена')
    xi = np.asarray(xi, dtype=float)
    return (xi @ points.T).max(axis=-1)


@dataclass(frozen=True)
class BumpDescriptor:
    """A smooth radial bump around ``center`` on inner < |x - c| < outer."""

    family: str
    center: tuple
    inner: float
    outer: float

    @classmethod
    def annulus(cls, inner, outer):
        return cls(ANNULUS, (0.0, 0.0), inner, outer)

    @classmethod
    def point(cls, center, radius):
        return cls(POINT, tuple(center), 0.0, radius)

    @property
    def profile(self):
        if self.inner > 0:
            return BumpFunction(self.inner, self.outer)
        return BumpFunction(-self.outer, self.outer)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        return self.profile(np.linalg.norm(x - self.center, axis=-1))

    def hull_points(self, samples=HULL_SAMPLES):
        """supp f and 0 by a polygon circumscribed about the outer circle."""
        angles = 2 * math.pi * np.arange(samples) / samples
        radius = self.outer / math.cos(math.pi / samples)
        circle = np.stack([np.cos(angles), np.sin(angles)], axis=-1)
        return np.vstack([self.center + radius * circle, [[0.0, 0.0]]])

    def line_transform(self, xi):
        """sMf(xi) = |xi|^-1 times the integral of f over <xi, x> = 1."""
        xi = np.asarray(xi, dtype=float)
        norm = np.linalg.norm(xi, axis=-1)
        safe = np.where(norm > 0, norm, 1.0)
        omega = xi / safe[..., None]
        normal = np.stack([-omega[..., 1], omega[..., 0]], axis=-1)
        distance = np.abs(omega @ self.center - 1 / safe)
        chord = np.sqrt(np.clip(self.outer ** 2 - distance ** 2, 0, None))
        middle = normal @ self.center
        nodes, weights = gauss_jacobi(LINE_ORDER, 0, 0).mapped(
            middle - chord, middle + chord
        )
        points = (
            (omega / safe[..., None])[..., None, :]
            + nodes[..., None] * normal[..., None, :]
        )
        integral = np.sum(weights * self(points), axis=-1)
        return np.where(norm > 0, integral / safe, 0.0)


@dataclass(frozen=True)
class ComponentReport:
    component_polygon: list
    dual_polygon: list
    hausdorff: float
    grid_h: float
    threshold: float

    def as_dict(self):
        return asdict(self)


def _boundary(mask):
    return mask & ~ndimage.binary_erosion(mask)


def _hull_vertices(points):
    if len(points) < 3:
        return []
    try:
        hull = ConvexHull(points)
    except QhullError:
        return []
    return points[hull.vertices].tolist()


def _evaluate(bump, axis):
    rows = []
    for value in axis:
        xi = np.stack([np.full_like(axis, value), axis], axis=-1)
        rows.append(bump.line_transform(xi))
    return np.array(rows)


def zero_component_check(bump, h, extent=2.0, threshold=None):
    """Compare the zero component of sMf around 0 with the polar dual.

    sMf is evaluated on the grid h Z^2 inside [-extent, extent]^2.  Values
    below threshold * max |sMf| count as zero.  The Hausdorff distance is
    taken between the boundaries of the computed component and of the grid
    sublevel set {H < 1}, both clipped to the window.
    """
    if threshold is None:
        threshold = settings.RADON['ZERO_THRESHOLD']
    steps = int(round(extent / h))
    axis = h * np.arange(-steps, steps + 1)
    values = np.abs(_evaluate(bump, axis))
    cutoff = threshold * values.max()
    labels, _ = ndimage.label(values <= cutoff)
    component = labels == labels[steps, steps]

    grid = np.stack(np.meshgrid(axis, axis, indexing='ij'), axis=-1)
    hull = bump.hull_points()
    dual = support_function(hull, grid) < 1

    computed = grid[_boundary(component)]
    expected = grid[_boundary(dual)]
    distance = max(
        directed_hausdorff(computed, expected)[0],
        directed_hausdorff(expected, computed)[0],
    )
    try:
        dual_polygon = ConvexPolygon.from_points(hull).polar_dual().as_list()
    except UnboundedDualError:
        dual_polygon = None
    logger.info(
        'Нулевая компонента %s: шаг %s, расстояние Хаусдорфа %.3g',
        bump.family, h, distance,
    )
    return ComponentReport(
        component_polygon=_hull_vertices(grid[component]),
        dual_polygon=dual_polygon,
        hausdorff=float(distance),
        grid_h=h,
        threshold=threshold,
    )
