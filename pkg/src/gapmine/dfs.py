"""Depth-first targeted mining with lexicographic right-extension."""

from __future__ import annotations

from typing import Callable

from gapmine.model import MiningParams, Pattern, SequenceDatabase, match_forward
from gapmine.result import MiningResult, RunStats, Strategies
from gapmine.search import SearchContext, finish, prepare


def dpep_extension(p: Pattern, qs: Pattern) -> Pattern:
    """``p`` followed by the part of ``qs`` that a greedy match in ``p`` left over."""
    return p + match_forward(p, qs).unmatched_tail


def _dpep(p: Pattern, ctx: SearchContext) -> bool:
    params = ctx.params
    qs = params.query
    if ctx.contains_query(p):
        return True
    pe = dpep_extension(p, qs)
    maxlen = params.length.maxlen
    if len(pe) > maxlen:
        return False
    return ctx.relaxed_support(pe, maxlen - len(qs)) >= params.minsup


def dpep_keep(p: Pattern, params: MiningParams, d: SequenceDatabase) -> bool:
    """Whether some right-extension of ``p`` may be a frequent target pattern."""
    return _dpep(p, SearchContext(d, params, RunStats()))


def mine_dfs(
    d: SequenceDatabase,
    params: MiningParams,
    strategies: Strategies = Strategies(),
    on_visit: Callable[[Pattern, int], None] | None = None,
) -> MiningResult:
    """Mine frequent target patterns depth-first.

    ``on_visit`` is called with every frequent pattern in visit order, which
    is depth-first with children in item-id order.
    """
    ctx, result = prepare(d, params, strategies, "dfs")
    if ctx is None:
        return finish(result)
    stats = result.stats
    minsup = params.minsup
    maxlen = params.length.maxlen

    roots = ctx.frequent_items()
    alphabet = [p[0] for p, _ in roots]

    def extend(p: Pattern, sup: int) -> None:
        assert len(p) <= maxlen
        if on_visit is not None:
            on_visit(p, sup)
        ctx.record(result, p, sup)
        if strategies.dpep and not _dpep(p, ctx):
            return
        if len(p) == maxlen:
            return
        stats.count_candidate(len(p) + 1, len(alphabet))
        for c in alphabet:
            q = p + (c,)
            s = ctx.support(q)
            if s >= minsup:
                extend(q, s)

    with stats.timed("mine"):
        for p, sup in roots:
            extend(p, sup)
    return finish(result)
