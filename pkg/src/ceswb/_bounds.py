import os

DEFAULT_BOUND = 6
ENV_VAR = "CESWB_BOUND"


class BoundExceeded(ValueError):
    """Raised when an exhaustive search is requested beyond the search bound."""


def search_bound(bound=None):
    if bound is not None:
        return int(bound)
    value = os.environ.get(ENV_VAR)
    if value:
        return int(value)
    return DEFAULT_BOUND


def check_bound(n, bound=None):
    limit = search_bound(bound)
    if n > limit:
        raise BoundExceeded(f"n={n} exceeds search bound {limit} (set {ENV_VAR} to raise it)")
    return limit
