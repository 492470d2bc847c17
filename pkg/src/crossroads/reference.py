"""Published reference values for the two singles sequences.

These are the values as originally published for OEIS A363448 (lonely) and
A363449 (marriageable), kept verbatim as the offline fixture that the
``verify`` command compares freshly computed tallies against.

Heads up: definition-faithful recomputation agrees with every row up to
n = 9 and disagrees from n = 10 onward (four independent methods concur;
see the README). The fixture deliberately stays as published so that
``verify`` reports the discrepancy instead of hiding it.
"""
from __future__ import annotations

SEQUENCE_IDS = {"L": "A363448", "M": "A363449"}

# n -> (lonely, marriageable, total) as published
PUBLISHED_TABLE: "dict[int, tuple[int, int, int]]" = {
    0: (1, 0, 1),
    1: (1, 0, 1),
    2: (1, 1, 2),
    3: (4, 1, 5),
    4: (9, 5, 14),
    5: (26, 16, 42),
    6: (77, 55, 132),
    7: (232, 197, 429),
    8: (725, 705, 1430),
    9: (2299, 2563, 4862),
    10: (7401, 9395, 16796),
    11: (22118, 36668, 58786),
    12: (72766, 135246, 208012),
    13: (235124, 507776, 742900),
    14: (763783, 1910657, 2674440),
}

MAX_PUBLISHED_N = max(PUBLISHED_TABLE)


def published_row(n: int) -> "tuple[int, int, int]":
    """The published (lonely, marriageable, total) row for n <= 14."""
    try:
        return PUBLISHED_TABLE[n]
    except KeyError:
        raise ValueError(f"no published values for n={n}") from None
