"""Comparison baseline and exhaustive ground-truth oracle.

The baseline mines every frequent pattern breadth-first with no targeted
pruning and filters by query containment afterwards. The oracle shares no
code with NETGAP: it lists every occurrence explicitly and solves the
maximum non-overlapping subset exactly.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from gapmine.bfs import mine_bfs
from gapmine.model import (
    GapConstraint,
    LengthConstraint,
    MiningParams,
    Pattern,
    SequenceDatabase,
    SequenceRecord,
    is_subsequence,
)
from gapmine.result import MiningResult, RunStats, Strategies

Occurrence = tuple[int, ...]

ORACLE_MAX_ALPHABET = 6
ORACLE_MAX_TOTAL_LENGTH = 60
ORACLE_MAX_MAXLEN = 16


class OracleLimitError(RuntimeError):
    """The instance is too large for exhaustive search."""


def mine_nosep_ta(d: SequenceDatabase, params: MiningParams) -> MiningResult:
    return mine_bfs(d, params, Strategies.none(), algo="baseline")


def enumerate_occurrences(
    p: Pattern,
    s: SequenceRecord | Sequence[int],
    gap: GapConstraint,
    length: LengthConstraint,
) -> list[Occurrence]:
    """All 1-based position tuples matching ``p`` under ``gap`` and ``length``."""
    items = s.items if isinstance(s, SequenceRecord) else tuple(s)
    n = len(items)
    out: list[Occurrence] = []

    def grow(prefix: list[int]) -> None:
        j = len(prefix)
        if j == len(p):
            span = prefix[-1] - prefix[0] + 1
            if length.allows(span):
                occ = tuple(x + 1 for x in prefix)
                assert all(gap.allows(a, b) for a, b in zip(occ, occ[1:]))
                out.append(occ)
            return
        if j == 0:
            candidates = range(n)
        else:
            last = prefix[-1]
            candidates = range(last + gap.mingap + 1, min(n, last + gap.maxgap + 2))
        for y in candidates:
            if items[y] == p[j] and (j == 0 or y - prefix[0] + 1 <= length.maxlen):
                prefix.append(y)
                grow(prefix)
                prefix.pop()

    if p:
        grow([])
    return out


def max_nonoverlapping(occ: Sequence[Occurrence]) -> int:
    """Largest subset whose k-th positions are pairwise distinct for every k."""
    occ = list(occ)
    if not occ:
        return 0
    slot: dict[tuple[int, int], int] = {}
    for o in occ:
        for k, x in enumerate(o):
            slot.setdefault((k, x), len(slot))
    used = [sum(1 << slot[(k, x)] for k, x in enumerate(o)) for o in occ]
    clash = [
        sum(1 << j for j in range(len(occ)) if used[i] & used[j])
        for i in range(len(occ))
    ]

    @lru_cache(maxsize=None)
    def solve(rem: int) -> int:
        if rem == 0:
            return 0
        i = (rem & -rem).bit_length() - 1
        if clash[i] & rem == 1 << i:
            return 1 + solve(rem & ~(1 << i))
        take = 1 + solve(rem & ~clash[i])
        skip = solve(rem & ~(1 << i))
        return max(take, skip)

    return solve((1 << len(occ)) - 1)


def oracle_support(p: Pattern, d: SequenceDatabase, gap: GapConstraint, length: LengthConstraint) -> int:
    return sum(max_nonoverlapping(enumerate_occurrences(p, r, gap, length)) for r in d)


def check_oracle_limits(d: SequenceDatabase, params: MiningParams) -> None:
    total = sum(len(r) for r in d)
    if len(d.items) > ORACLE_MAX_ALPHABET:
        raise OracleLimitError(f"alphabet of {len(d.items)} items exceeds {ORACLE_MAX_ALPHABET}")
    if total > ORACLE_MAX_TOTAL_LENGTH:
        raise OracleLimitError(f"total length {total} exceeds {ORACLE_MAX_TOTAL_LENGTH}")
    if params.length.maxlen > ORACLE_MAX_MAXLEN:
        raise OracleLimitError(f"maxlen {params.length.maxlen} exceeds {ORACLE_MAX_MAXLEN}")


def mine_bruteforce(d: SequenceDatabase, params: MiningParams) -> MiningResult:
    """Enumerate patterns over the database items and keep the frequent targets.

    Extensions are abandoned once the pattern's support with ``minlen``
    relaxed to 1 (computed exhaustively) drops under ``minsup``; that support
    can only shrink as a pattern grows.
    """
    check_oracle_limits(d, params)
    result = MiningResult(stats=RunStats(algo="oracle"))
    gap, length = params.gap, params.length
    relaxed = LengthConstraint(1, length.maxlen)
    qs = params.query
    items = d.items

    def visit(p: Pattern) -> None:
        explore = oracle_support(p, d, gap, relaxed)
        result.stats.count_candidate(len(p))
        if explore < params.minsup:
            return
        if is_subsequence(qs, p):
            sup = explore if length.minlen == 1 else oracle_support(p, d, gap, length)
            if sup >= params.minsup:
                result.patterns[p] = sup
        if len(p) < length.maxlen:
            for c in items:
                visit(p + (c,))

    if length.maxlen >= len(qs):
        for c in items:
            visit((c,))
    result.stats.patterns_found = len(result.patterns)
    return result
