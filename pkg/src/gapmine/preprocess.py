"""Database reduction ahead of mining.

Two passes shrink the input without changing the set of frequent target
patterns:

* sequence filtering drops every record in which the query cannot occur
  inside any window of span ``maxlen``;
* item trimming cuts leading and trailing items that no such window reaches.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from gapmine import _kernels
from gapmine.model import MiningParams, Pattern, SequenceDatabase, SequenceRecord
from gapmine.nettree import support_raw

SAFE = "safe"
ANCHORED = "anchored"


@dataclass
class PreprocessReport:
    sequences_removed: int = 0
    items_trimmed_front: dict[int, int] = field(default_factory=dict)
    items_trimmed_back: dict[int, int] = field(default_factory=dict)
    emptied: int = 0
    mode: str = SAFE
    netgap_calls: int = 0

    @property
    def items_trimmed(self) -> int:
        return sum(self.items_trimmed_front.values()) + sum(self.items_trimmed_back.values())


def presup(qs: Pattern, s: SequenceRecord, params: MiningParams) -> int:
    """Support of the query itself under relaxed constraints.

    Inside any target occurrence of span at most ``maxlen`` the query items
    are separated by at most ``maxlen - |qs|`` positions and span at least
    ``|qs|``, so zero here means no target pattern can occur in ``s``.
    """
    maxlen = params.length.maxlen
    if maxlen < len(qs):
        return 0
    single = SequenceDatabase((s,))
    return support_raw(qs, single, params.gap.mingap, maxlen - len(qs), len(qs), maxlen)


def presup_all(d: SequenceDatabase, params: MiningParams) -> list[int]:
    """:func:`presup` for every record, in one kernel pass."""
    qs = params.query
    maxlen = params.length.maxlen
    if len(d) == 0:
        return []
    if maxlen < len(qs):
        return [0] * len(d)
    out = _kernels.support_per_sequence(
        d.flat, d.offsets, np.asarray(qs, dtype=np.int64),
        params.gap.mingap, maxlen - len(qs), len(qs), maxlen,
    )
    return [int(x) for x in out]


def sprp_filter(d: SequenceDatabase, params: MiningParams) -> SequenceDatabase:
    """Keep exactly the records with a non-zero :func:`presup`; order is preserved."""
    sups = presup_all(d, params)
    return d.with_records(r for r, s in zip(d, sups) if s >= 1)


def _safe_bounds(items: Pattern, qs: Pattern, maxlen: int) -> tuple[int, int] | None:
    # Minimal windows [a, b] embedding qs: for each end b, the latest start a.
    n = len(items)
    lo, hi = n, -1
    for b in range(n):
        if items[b] != qs[-1]:
            continue
        k = len(qs) - 2
        a = b
        i = b - 1
        while k >= 0 and i >= 0 and b - i + 1 <= maxlen:
            if items[i] == qs[k]:
                a = i
                k -= 1
            i -= 1
        if k >= 0:
            continue
        if b - a + 1 > maxlen:
            continue
        lo = min(lo, max(0, b - maxlen + 1))
        hi = max(hi, min(n - 1, a + maxlen - 1))
    if hi < 0:
        return None
    return lo, hi


def _anchored_bounds(items: Pattern, qs: Pattern, maxlen: int) -> tuple[int, int] | None:
    n = len(items)
    size = len(qs)

    front = None
    for t in range(n):
        if items[t] != qs[0]:
            continue
        q, i = 1, t + 1
        while q < size and i < n:
            if items[i] == qs[q]:
                q += 1
            i += 1
        if q < size or i - t > maxlen:
            continue
        # first query item matched after i_match = t + 1 scanned items, q_match = 1
        i_match, q_match = t + 1, 1
        excess = i_match + (size - q_match) - maxlen
        front = max(0, excess)
        break

    back = None
    for e in range(n - 1, -1, -1):
        if items[e] != qs[-1]:
            continue
        q, i = size - 2, e - 1
        while q >= 0 and i >= 0:
            if items[i] == qs[q]:
                q -= 1
            i -= 1
        if q >= 0 or e - i > maxlen:
            continue
        i_match, q_match = n - e, 0
        excess = i_match + (size - 1 - q_match) - maxlen
        back = n - 1 - max(0, excess)
        break

    if front is None or back is None or front > back:
        return None
    return front, back


def trim_bounds(s: SequenceRecord, params: MiningParams, mode: str = SAFE) -> tuple[int, int] | None:
    """Inclusive 0-based bounds of the infix kept by :func:`iprp_trim`, or None."""
    if mode == SAFE:
        return _safe_bounds(s.items, params.query, params.length.maxlen)
    if mode == ANCHORED:
        return _anchored_bounds(s.items, params.query, params.length.maxlen)
    raise ValueError(f"unknown IPRP mode {mode!r}")


def iprp_trim(s: SequenceRecord, params: MiningParams, mode: str = SAFE) -> SequenceRecord:
    """Strip leading and trailing items that cannot take part in a target occurrence.

    ``safe`` removes exactly the outer positions that lie in no window of span
    ``<= maxlen`` containing the query. ``anchored`` applies the cursor rule
    ``i_match + (|qs| - q_match) > maxlen`` from each end, anchored at the
    first (last) query embedding that fits within ``maxlen``.
    """
    bounds = trim_bounds(s, params, mode)
    if bounds is None:
        return SequenceRecord(s.sid, ())
    lo, hi = bounds
    return SequenceRecord(s.sid, s.items[lo:hi + 1])


def preprocess(
    d: SequenceDatabase,
    params: MiningParams,
    sprp: bool = True,
    iprp: bool = True,
    mode: str = SAFE,
) -> tuple[SequenceDatabase, PreprocessReport]:
    report = PreprocessReport(mode=mode)
    records = list(d)
    if sprp:
        report.netgap_calls += len(records)
        kept = [r for r, s in zip(records, presup_all(d, params)) if s >= 1]
        report.sequences_removed += len(records) - len(kept)
        records = kept
    if iprp:
        trimmed = []
        for r in records:
            bounds = trim_bounds(r, params, mode)
            lo, hi = bounds if bounds is not None else (len(r), len(r) - 1)
            if hi - lo + 1 < len(r):
                report.items_trimmed_front[r.sid] = lo
                report.items_trimmed_back[r.sid] = len(r) - 1 - hi if bounds is not None else 0
            if bounds is not None:
                trimmed.append(SequenceRecord(r.sid, r.items[lo:hi + 1]))
            else:
                report.emptied += 1
        records = trimmed
    return d.with_records(records), report
