"""Closed forms, bounds, and the ratio report.

Exact integer formulas for Catalan numbers and for the number of noncrossing
partitions of [n] with m blocks and no singleton (or exactly one singleton),
plus the two lower bounds they imply for the lonely and marriageable counts.
Every division is an exact integer division guarded by an assertion, so a
transcription slip cannot round its way past the tests.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal, localcontext
from math import comb
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .enumeration import Tally


def _binom(a: int, b: int) -> int:
    """Binomial coefficient with the zero convention outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def catalan(n: int) -> int:
    """The nth Catalan number, binomial(2n, n) / (n + 1), exactly."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    num = comb(2 * n, n)
    assert num % (n + 1) == 0
    return num // (n + 1)


def nc_count(n: int, m: int, k: int) -> int:
    """Noncrossing partitions of [n] with m blocks and k singletons, k in {0, 1}.

    Closed forms: for k = 0 the count is binomial(n, m) * binomial(n-m-1, m-1)
    divided by n-m+1, with the empty partition as the (0, 0) special case.
    For k = 1 it is binomial(n, m-1) * binomial(n-m-1, m-2), with (1, 1) as
    the special case. Out-of-support binomials vanish by convention.
    """
    if k not in (0, 1):
        raise ValueError("closed forms exist for k in {0, 1} only")
    if k == 0:
        if n == 0 and m == 0:
            return 1
        num = _binom(n, m) * _binom(n - m - 1, m - 1)
        if num == 0:
            return 0
        assert num % (n - m + 1) == 0
        return num // (n - m + 1)
    if n == 1 and m == 1:
        return 1
    return _binom(n, m - 1) * _binom(n - m - 1, m - 2)


def nc_count_enumerated(n: int, m: int, k: int) -> int:
    """Oracle twin of :func:`nc_count` by exhaustive enumeration, any k."""
    from .enumeration import ORACLE_CEILING, noncrossing_partitions
    from .partitions import CeilingExceededError

    if n > ORACLE_CEILING:
        raise CeilingExceededError(
            f"nc_count_enumerated is capped at n={ORACLE_CEILING}, got {n}"
        )
    count = 0
    for p in noncrossing_partitions(n):
        if len(p.blocks) == m and len(p.singletons) == k:
            count += 1
    return count


def _no_singleton_total(length: int) -> int:
    """Noncrossing partitions of [length] with no singleton at all.

    The empty partition counts for length 0, which is exactly what the
    segment products in the marriageable bound need.
    """
    return sum(nc_count(length, m, 0) for m in range(0, length // 2 + 1))


def lower_bound_lonely(n: int) -> int:
    """Count of noncrossing partitions of [n] with at most one singleton.

    Any such partition is lonely for lack of a mergeable pair, so this is a
    lower bound for the lonely count.
    """
    if n < 2:
        raise ValueError("bound defined for n >= 2")
    zero = sum(nc_count(n, m, 0) for m in range(1, n // 2 + 1))
    one = sum(nc_count(n, m, 1) for m in range(2, (n + 1) // 2 + 1))
    return zero + one


def lower_bound_marriageable(n: int) -> int:
    """Count of marriageable partitions with exactly two singletons {i}, {j}.

    For a mergeable pair at positions i < j, the elements strictly between
    i and j and the elements outside [i, j] form independent noncrossing
    partitions with no singleton, of sizes j-i-1 and n+i-j-1. Summing the
    products over all pairs gives a lower bound for the marriageable count.
    """
    if n < 3:
        raise ValueError("bound defined for n >= 3")
    total = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            total += _no_singleton_total(n + i - j - 1) * _no_singleton_total(j - i - 1)
    return total


def two_digits(num: int, den: int) -> str:
    """Render num/den with exactly two fractional digits, round half up."""
    if den == 0:
        raise ZeroDivisionError("ratio denominator is zero")
    with localcontext() as ctx:
        ctx.prec = 50
        q = (Decimal(num) / Decimal(den)).quantize(Decimal("0.01"), ROUND_HALF_UP)
    return str(q)


@dataclass(frozen=True)
class SequenceRow:
    """One row of the table report: counts plus the four ratio columns.

    Ratio fields are fixed two-digit strings; a ratio whose denominator does
    not exist (the n = 0 row, or a zero predecessor) is None.
    """

    n: int
    lonely: int
    marriageable: int
    catalan: int
    ratio_l: "str | None"
    ratio_m: "str | None"
    m_over_l: "str | None"
    m_over_c: str


def ratio_report(max_n: int, tallies: "list[Tally]") -> "list[SequenceRow]":
    """Build SequenceRows for n = 0..max_n from precomputed tallies."""
    if len(tallies) < max_n + 1 or any(t.n != i for i, t in enumerate(tallies[: max_n + 1])):
        raise ValueError("tallies must cover n = 0..max_n in order")
    rows = []
    prev = None
    for t in tallies[: max_n + 1]:
        ratio_l = ratio_m = None
        if prev is not None:
            if prev.lonely:
                ratio_l = two_digits(t.lonely, prev.lonely)
            if prev.marriageable:
                ratio_m = two_digits(t.marriageable, prev.marriageable)
        m_over_l = two_digits(t.marriageable, t.lonely) if t.lonely else None
        rows.append(
            SequenceRow(
                n=t.n,
                lonely=t.lonely,
                marriageable=t.marriageable,
                catalan=t.total,
                ratio_l=ratio_l,
                ratio_m=ratio_m,
                m_over_l=m_over_l,
                m_over_c=two_digits(t.marriageable, t.total),
            )
        )
        prev = t
    return rows
