"""Support bookkeeping shared by the breadth-first and depth-first miners."""

from __future__ import annotations

import numpy as np

from gapmine import _kernels
from gapmine.model import MiningParams, Pattern, SequenceDatabase, is_subsequence
from gapmine.preprocess import preprocess
from gapmine.result import MiningResult, RunStats, Strategies

MAXLEN_BELOW_QUERY = "maxlen_below_query"


class SearchContext:
    """Counts supports over one (already preprocessed) database.

    Exploration uses the support with the span lower bound relaxed to 1, which
    is anti-monotone and bounds the constrained support from above; reported
    supports use the full length constraint.
    """

    def __init__(self, db: SequenceDatabase, params: MiningParams, stats: RunStats):
        self.db = db
        self.params = params
        self.stats = stats
        self.nseq = len(db)
        self._flat = db.flat
        self._offsets = db.offsets
        self._relaxed: dict[tuple[Pattern, int], int] = {}

    def _count(self, p: Pattern, maxgap: int, minlen: int) -> int:
        if self.nseq == 0:
            return 0
        return int(_kernels.support_flat(
            self._flat, self._offsets, np.asarray(p, dtype=np.int64),
            self.params.gap.mingap, maxgap, minlen, self.params.length.maxlen,
        ))

    def support(self, p: Pattern) -> int:
        self.stats.support_calls += self.nseq
        return self._count(p, self.params.gap.maxgap, 1)

    def target_support(self, p: Pattern, explored: int) -> int:
        if self.params.length.minlen == 1:
            return explored
        self.stats.support_calls += self.nseq
        return self._count(p, self.params.gap.maxgap, self.params.length.minlen)

    def relaxed_support(self, pe: Pattern, maxgap: int) -> int:
        """Support of a pre-extended pattern under gap ``[mingap, maxgap]``, span ``[|pe|, maxlen]``."""
        key = (pe, maxgap)
        if key not in self._relaxed:
            self.stats.pruning_calls += self.nseq
            self._relaxed[key] = self._count(pe, maxgap, len(pe))
        return self._relaxed[key]

    def contains_query(self, p: Pattern) -> bool:
        return is_subsequence(self.params.query, p)

    def frequent_items(self) -> list[tuple[Pattern, int]]:
        out = []
        for item in self.db.items:
            p = (item,)
            self.stats.count_candidate(1)
            sup = self.support(p)
            if sup >= self.params.minsup:
                out.append((p, sup))
        return out

    def record(self, result: MiningResult, p: Pattern, explored: int) -> None:
        if not self.contains_query(p) or p in result.patterns:
            return
        sup = self.target_support(p, explored)
        if sup >= self.params.minsup:
            result.patterns[p] = sup


def prepare(
    d: SequenceDatabase, params: MiningParams, strategies: Strategies, algo: str
) -> tuple[SearchContext | None, MiningResult]:
    """Validate, preprocess and wrap the database; None means nothing to mine."""
    result = MiningResult(stats=RunStats(algo=algo))
    stats = result.stats
    if params.length.maxlen < len(params.query):
        stats.flags.append(MAXLEN_BELOW_QUERY)
        return None, result
    with stats.timed("preprocess"):
        db, report = preprocess(
            d, params, sprp=strategies.sprp, iprp=strategies.iprp, mode=strategies.iprp_mode
        )
    stats.pruning_calls += report.netgap_calls
    stats.sequences_removed = report.sequences_removed + report.emptied
    stats.items_trimmed = report.items_trimmed
    return SearchContext(db, params, stats), result


def finish(result: MiningResult) -> MiningResult:
    result.stats.patterns_found = len(result.patterns)
    result.stats.record_memory()
    return result
