"""Level-wise (breadth-first) targeted mining."""

from __future__ import annotations

from bisect import bisect_left
from typing import Sequence

from gapmine.model import MiningParams, Pattern, SequenceDatabase, is_subsequence
from gapmine.result import MiningResult, RunStats, Strategies
from gapmine.search import SearchContext, finish, prepare


def gen_candidate_bfs(level: Sequence[Pattern]) -> list[Pattern]:
    """Join a sorted level with itself on suffix == prefix.

    For each ``a`` the run of patterns whose prefix equals ``suffix(a)`` is
    located by binary search; every member ``b`` yields ``a + b[-1:]``.
    """
    out: list[Pattern] = []
    if not level:
        return out
    size = len(level[0])
    for a in level:
        tail = a[1:]
        start = bisect_left(level, tail, key=lambda p: p[:size - 1])
        for b in level[start:]:
            if b[:size - 1] != tail:
                break
            out.append(a + b[-1:])
    return out


def pre_extensions(p: Pattern, qs: Pattern, maxlen: int) -> list[Pattern]:
    """Every ``L + p + R`` with ``qs = L + M + R`` and ``M`` a subsequence of ``p``.

    Splits are enumerated from "whole query in front" to "whole query at the
    back"; duplicates and extensions longer than ``maxlen`` are dropped.
    """
    seen: dict[Pattern, None] = {}
    n = len(qs)
    for i in range(n, -1, -1):
        for j in range(i, n + 1):
            if not is_subsequence(qs[i:j], p):
                break
            pe = qs[:i] + p + qs[j:]
            if len(pe) <= maxlen:
                seen.setdefault(pe, None)
    return list(seen)


def _bpep(p: Pattern, ctx: SearchContext) -> bool:
    params = ctx.params
    if ctx.contains_query(p):
        return True
    maxlen = params.length.maxlen
    for pe in pre_extensions(p, params.query, maxlen):
        if ctx.relaxed_support(pe, maxlen - len(pe)) >= params.minsup:
            return True
    return False


def bpep_keep(p: Pattern, params: MiningParams, d: SequenceDatabase) -> bool:
    """Whether ``p`` may still be an infix of some frequent target pattern."""
    return _bpep(p, SearchContext(d, params, RunStats()))


def mine_bfs(
    d: SequenceDatabase,
    params: MiningParams,
    strategies: Strategies = Strategies(),
    algo: str = "bfs",
) -> MiningResult:
    ctx, result = prepare(d, params, strategies, algo)
    if ctx is None:
        return finish(result)
    stats = result.stats
    with stats.timed("mine"):
        level_sup = ctx.frequent_items()
        for p, sup in level_sup:
            ctx.record(result, p, sup)
        level = [p for p, _ in level_sup]
        while level:
            if strategies.bpep:
                level = [p for p in level if _bpep(p, ctx)]
            cands = gen_candidate_bfs(level)
            if not cands:
                break
            stats.count_candidate(len(cands[0]), len(cands))
            nxt = []
            for q in cands:
                sup = ctx.support(q)
                if sup >= params.minsup:
                    nxt.append(q)
                    ctx.record(result, q, sup)
            level = nxt
    return finish(result)
