"""Walk lengths that may be infinite.

A length is either an ordinary non-negative ``int`` or ``INF``
(``math.inf``) for unreachable or undefined quantities.  ``INF`` compares
greater than every finite length and absorbs ``+ 1`` and ``- 1``, which
keeps the case analyses over possibly-infinite exponents total.
"""

import math

ExtLen = int | float

INF: float = math.inf


def is_finite(value: ExtLen) -> bool:
    return value != INF


def to_json(value: ExtLen) -> object:
    """JSON-safe form: finite lengths stay ints, infinity becomes "inf"."""
    return "inf" if value == INF else value
