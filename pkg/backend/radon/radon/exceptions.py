class RadonError(Exception):
    """Base class of every error raised by the transform libraries."""
