"""Exception types shared across the package.

Domain errors (bad mathematical input) raise plain :class:`ValueError`.
:class:`CapacityError` marks inputs that exceed a configured search bound,
so callers can distinguish "wrong" from "too big for the brute-force path".
"""


class CapacityError(Exception):
    """A deliberately bounded search or table was asked to exceed its bound."""
