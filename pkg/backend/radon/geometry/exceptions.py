from radon.exceptions import RadonError


class GeometryError(RadonError):
    pass


class UnboundedDualError(GeometryError):
    pass


class DegeneratePolygonError(GeometryError):
    pass
