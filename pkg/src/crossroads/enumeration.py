"""Generation and counting of noncrossing partitions.

Noncrossing partitions of [n] are built by a left-to-right scan that keeps a
stack of open blocks. At each position one of four moves applies:

* start a new block and keep it open,
* start a new block and close it at once (a singleton),
* append the position to the open block on top of the stack and keep it open,
* append the position to the top block and close that block.

Every noncrossing partition arises from exactly one move sequence, which
gives a direct generator (no generate-then-filter), a streaming classifier,
and a pair of memoized counting machines that tally the lonely partitions
without visiting leaves one by one. Counts from the machines, the stream,
and the brute-force oracle are cross-checked in the test suite.
"""
from __future__ import annotations

import os
import sys
from collections import Counter
from dataclasses import dataclass
from multiprocessing import get_context
from typing import Iterator

from .formulas import catalan
from .partitions import (
    CeilingExceededError,
    Classification,
    Kind,
    Partition,
    classify,
    classify_fast,
    is_noncrossing_definitional,
)

ORACLE_CEILING = 10
"""Largest n accepted by the brute-force oracle over all set partitions."""


@dataclass(frozen=True)
class Tally:
    """Counts for one ground-set size: lonely + marriageable = total."""

    n: int
    lonely: int
    marriageable: int
    total: int

    def __post_init__(self):
        if self.lonely + self.marriageable != self.total:
            raise ValueError("tally does not add up")


@dataclass(frozen=True)
class CountJob:
    """A counting request: ground-set size, worker count, progress cadence.

    ``workers=None`` means use the CROSSROADS_WORKERS environment variable,
    falling back to the machine's CPU count.
    """

    n: int
    workers: "int | None" = None
    progress_interval: "int | None" = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.workers is not None and self.workers < 1:
            raise ValueError("workers must be positive")


def default_workers() -> int:
    env = os.environ.get("CROSSROADS_WORKERS", "").strip()
    if env:
        value = int(env)
        if value < 1:
            raise ValueError("CROSSROADS_WORKERS must be positive")
        return value
    return os.cpu_count() or 1


def all_set_partitions(n: int) -> Iterator[Partition]:
    """Every set partition of [n], in restricted-growth-string order.

    This is the oracle substrate and deliberately brute force; n is capped
    by ORACLE_CEILING.
    """
    if n > ORACLE_CEILING:
        raise CeilingExceededError(
            f"all_set_partitions is capped at n={ORACLE_CEILING}, got {n}"
        )
    if n == 0:
        yield Partition(0, ())
        return
    rgs = [0] * n
    maxes = [0] * n
    while True:
        nblocks = max(rgs) + 1
        blocks: list[list[int]] = [[] for _ in range(nblocks)]
        for pos, b in enumerate(rgs, start=1):
            blocks[b].append(pos)
        yield Partition(n, blocks)
        i = n - 1
        while i > 0 and rgs[i] == maxes[i - 1] + 1:
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        maxes[i] = max(maxes[i - 1], rgs[i])
        for k in range(i + 1, n):
            rgs[k] = 0
            maxes[k] = maxes[k - 1]


def noncrossing_partitions(n: int) -> Iterator[Partition]:
    """Every noncrossing partition of [n], exactly once, by direct construction.

    The order is deterministic: at each position the moves are tried as
    append-and-close, append-and-keep-open, singleton, open-new-block.
    """
    if n == 0:
        yield Partition(0, ())
        return
    blocks: list[list[int]] = []
    stack: list[int] = []

    def walk(pos: int) -> Iterator[Partition]:
        if pos > n:
            if not stack:
                yield Partition(n, [tuple(b) for b in blocks])
            return
        remaining = n - pos + 1
        if stack:
            top = stack[-1]
            blocks[top].append(pos)
            # close the top block here
            closed = stack.pop()
            yield from walk(pos + 1)
            stack.append(closed)
            # or keep it open for a later element
            if len(stack) < remaining:
                yield from walk(pos + 1)
            blocks[top].pop()
        if len(stack) < remaining:
            # a singleton never stays on the stack
            blocks.append([pos])
            yield from walk(pos + 1)
            blocks.pop()
        if len(stack) + 1 < remaining:
            blocks.append([pos])
            stack.append(len(blocks) - 1)
            yield from walk(pos + 1)
            stack.pop()
            blocks.pop()

    yield from walk(1)


def stream_tally(n: int) -> Tally:
    """Count by walking the construction tree and classifying incrementally.

    Alongside the stack of open blocks the walk keeps one flag per open
    block, marking whether the block's current gap already holds a
    singleton, plus one flag for the top-level region. A singleton landing
    in a flagged region makes every completion of the current prefix
    marriageable. Used as a midsize cross-check for the machines; costs one
    visit per noncrossing partition.
    """
    lonely = 0
    total = 0
    # stack entries are current-gap flags of open blocks
    flags: list[bool] = []

    def walk(pos: int, root_flag: bool, married: bool) -> None:
        nonlocal lonely, total
        if pos > n:
            if not flags:
                total += 1
                if not married:
                    lonely += 1
            return
        remaining = n - pos + 1
        depth = len(flags)
        if depth:
            top = flags[-1]
            # append to the top block and close it
            flags.pop()
            walk(pos + 1, root_flag, married)
            # append and keep open: a fresh gap starts
            if depth <= remaining - 1:
                flags.append(False)
                walk(pos + 1, root_flag, married)
                flags.pop()
            flags.append(top)
        if depth <= remaining - 1:
            # a singleton in the current innermost region
            if depth:
                hit = flags[-1]
                flags[-1] = True
                walk(pos + 1, root_flag, married or hit)
                flags[-1] = hit
            else:
                walk(pos + 1, True, married or root_flag)
        if depth + 1 <= remaining - 1:
            # open a new block
            flags.append(False)
            walk(pos + 1, root_flag, married)
            flags.pop()

    walk(1, False, False)
    expected = catalan(n)
    if total != expected:
        raise AssertionError(f"stream visited {total} partitions, expected {expected}")
    return Tally(n, lonely, total - lonely, total)


# ---------------------------------------------------------------------------
# Counting machines
# ---------------------------------------------------------------------------
#
# State of the collapsed machine: (r, d, k, g) with r positions left, d open
# blocks, k of those d having a singleton in their current gap, g the
# top-level region flag. Only lonely-so-far prefixes are counted, so a move
# that would drop a second singleton into a flagged region is pruned. The
# collapse relies on the subtree count depending on the flags only through
# their number, which the exact machine below confirms.


def _lonely_collapsed(state: tuple[int, int, int, int], memo: dict) -> int:
    r, d, k, g = state
    if d > r:
        return 0
    if r == 0:
        return 1
    cached = memo.get(state)
    if cached is not None:
        return cached
    # open a new block (top of stack, gap unflagged)
    count = _lonely_collapsed((r - 1, d + 1, k, g), memo)
    if d == 0:
        if g == 0:
            # first singleton in the top-level region
            count += _lonely_collapsed((r - 1, 0, 0, 1), memo)
    elif k < d:
        # top gap unflagged: singleton here flags it
        count += _lonely_collapsed((r - 1, d, k + 1, g), memo)
        # extend top, keep open: new gap, still unflagged
        count += _lonely_collapsed((r - 1, d, k, g), memo)
        # extend top and close
        count += _lonely_collapsed((r - 1, d - 1, k, g), memo)
    else:
        # every open gap is flagged, in particular the top one
        count += _lonely_collapsed((r - 1, d, k - 1, g), memo)
        count += _lonely_collapsed((r - 1, d - 1, k - 1, g), memo)
    memo[state] = count
    return count


def _lonely_exact_root(n: int) -> int:
    """Exact twin of the collapsed machine: per-block flags as a bitmask.

    Bit t of ``bits`` is the current-gap flag of the open block at stack
    depth t. Exists to validate the collapse; see the test suite.
    """
    return _lonely_exact_inner(n, 0, 0, 0, {})


def _lonely_exact_inner(r: int, d: int, bits: int, g: int, memo: dict) -> int:
    if d > r:
        return 0
    if r == 0:
        return 1
    key = (r, d, bits, g)
    cached = memo.get(key)
    if cached is not None:
        return cached
    top = 1 << d
    # open a new block: one more stack slot, unflagged
    count = _lonely_exact_inner(r - 1, d + 1, bits, g, memo)
    if d == 0:
        if g == 0:
            count += _lonely_exact_inner(r - 1, 0, 0, 1, memo)
    else:
        top >>= 1
        if not bits & top:
            count += _lonely_exact_inner(r - 1, d, bits | top, g, memo)
        # extend top, keep open: its gap flag resets
        count += _lonely_exact_inner(r - 1, d, bits & ~top, g, memo)
        # extend top, close: flag leaves with the block
        count += _lonely_exact_inner(r - 1, d - 1, bits & ~top, g, memo)
    memo[key] = count
    return count


def _total_count(n: int) -> int:
    """Total noncrossing partitions via the same four-move machine."""
    memo: dict[tuple[int, int], int] = {}

    def rec(r: int, d: int) -> int:
        if d > r:
            return 0
        if r == 0:
            return 1
        key = (r, d)
        cached = memo.get(key)
        if cached is not None:
            return cached
        value = rec(r - 1, d + 1) + rec(r - 1, d)
        if d:
            value += rec(r - 1, d) + rec(r - 1, d - 1)
        memo[key] = value
        return value

    return rec(n, 0)


def _frontier(n: int, min_states: int) -> Counter:
    """Expand the collapsed machine a few levels down from the root.

    Returns a multiset of states whose weighted subtree counts sum to the
    root count. Expansion stops as soon as the frontier is wide enough to
    feed the requested number of workers.
    """
    frontier: Counter = Counter({(n, 0, 0, 0): 1})
    while len(frontier) < min_states:
        nxt: Counter = Counter()
        progressed = False
        for (r, d, k, g), mult in frontier.items():
            if r == 0 or d > r:
                nxt[(r, d, k, g)] += mult
                continue
            progressed = True
            nxt[(r - 1, d + 1, k, g)] += mult
            if d == 0:
                if g == 0:
                    nxt[(r - 1, 0, 0, 1)] += mult
            elif k < d:
                nxt[(r - 1, d, k + 1, g)] += mult
                nxt[(r - 1, d, k, g)] += mult
                nxt[(r - 1, d - 1, k, g)] += mult
            else:
                nxt[(r - 1, d, k - 1, g)] += mult
                nxt[(r - 1, d - 1, k - 1, g)] += mult
        frontier = nxt
        if not progressed:
            break
    return frontier


def _eval_chunk(chunk: "list[tuple[tuple[int, int, int, int], int]]") -> int:
    memo: dict = {}
    return sum(mult * _lonely_collapsed(state, memo) for state, mult in chunk)


def tally(job: CountJob) -> Tally:
    """Count the lonely and marriageable partitions of [job.n].

    The lonely count comes from the collapsed machine; the total is computed
    independently by the plain machine and checked against the Catalan
    closed form before anything is returned. With more than one worker the
    frontier of machine states is split deterministically across a process
    pool, and the exact integer sum is identical for any worker count.
    """
    n = job.n
    workers = job.workers if job.workers is not None else default_workers()
    total = _total_count(n)
    expected = catalan(n)
    if total != expected:
        raise AssertionError(f"machine total {total} != Catalan {expected}")
    if workers <= 1 or n < 8:
        lonely = _lonely_collapsed((n, 0, 0, 0), {})
    else:
        frontier = _frontier(n, 4 * workers)
        states = sorted(frontier.items())
        chunks: list[list] = [[] for _ in range(min(workers, len(states)))]
        for idx, item in enumerate(states):
            chunks[idx % len(chunks)].append(item)
        ctx = get_context("fork") if sys.platform != "win32" else get_context()
        with ctx.Pool(len(chunks)) as pool:
            done = 0
            lonely = 0
            for part in pool.imap(_eval_chunk, chunks):
                lonely += part
                done += 1
                if job.progress_interval:
                    print(
                        f"progress: {done}/{len(chunks)} state chunks summed",
                        file=sys.stderr,
                    )
    return Tally(n, lonely, total - lonely, total)


def oracle_tally(n: int) -> Tally:
    """Brute-force tally: all set partitions, quartic filter, definitional classify.

    Slow by design; used only in tests and capped by ORACLE_CEILING.
    """
    if n > ORACLE_CEILING:
        raise CeilingExceededError(
            f"oracle_tally is capped at n={ORACLE_CEILING}, got {n}"
        )
    lonely = 0
    marriageable = 0
    for p in all_set_partitions(n):
        if not is_noncrossing_definitional(p):
            continue
        if classify(p).is_lonely:
            lonely += 1
        else:
            marriageable += 1
    return Tally(n, lonely, marriageable, lonely + marriageable)


def tally_range(max_n: int, workers: "int | None" = None) -> "list[Tally]":
    """Tallies for every n from 0 to max_n inclusive."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    return [tally(CountJob(n, workers=workers)) for n in range(max_n + 1)]


def classified_stream(n: int, kind: "Kind | None" = None) -> "Iterator[tuple[Partition, Classification]]":
    """Stream (partition, classification) pairs, optionally one class only."""
    for p in noncrossing_partitions(n):
        c = classify_fast(p)
        if kind is None or c.kind is kind:
            yield p, c
