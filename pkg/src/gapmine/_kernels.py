"""Compiled support-counting kernels.

Set ``GAPMINE_DISABLE_JIT=1`` to run the same loops as plain Python over
numpy arrays (useful for debugging and for the benchmark baseline).
"""

from __future__ import annotations

import os

import numpy as np

JIT_DISABLED = os.environ.get("GAPMINE_DISABLE_JIT", "").lower() in {"1", "true", "yes"}

try:
    if JIT_DISABLED:
        raise ImportError
    from numba import njit

    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f


@njit(cache=True)
def _netgap_one(flat, lo, hi, pat, mingap, maxgap, minlen, maxlen, used, fail, sid, path, cursor):
    n = hi - lo
    m = pat.shape[0]
    if minlen > maxlen or maxlen < m:
        return 0
    if m == 1:
        if minlen > 1:
            return 0
        c = 0
        for i in range(lo, hi):
            if flat[i] == pat[0]:
                c += 1
        return c
    if maxgap < mingap:
        return 0

    count = 0
    for r in range(n):
        if flat[lo + r] != pat[0]:
            continue
        stamp = lo + r + 1
        path[0] = r
        cursor[1] = r + mingap + 1
        j = 0
        found = False
        while True:
            x = path[j]
            lim = x + maxgap + 1
            if lim > n - 1:
                lim = n - 1
            if lim > r + maxlen - 1:
                lim = r + maxlen - 1
            y = cursor[j + 1]
            leaf = j + 1 == m - 1
            if leaf and y < r + minlen - 1:
                y = r + minlen - 1
            target = pat[j + 1]
            nxt = -1
            while y <= lim:
                if flat[lo + y] == target and used[j + 1, y] != sid and fail[j + 1, y] != stamp:
                    nxt = y
                    break
                y += 1
            if nxt < 0:
                if j == 0:
                    break
                fail[j, x] = stamp
                j -= 1
                continue
            cursor[j + 1] = nxt + 1
            path[j + 1] = nxt
            if leaf:
                found = True
                break
            j += 1
            cursor[j + 1] = nxt + mingap + 1
        if found:
            count += 1
            for k in range(m):
                used[k, path[k]] = sid
    return count


@njit(cache=True)
def support_flat(flat, offsets, pat, mingap, maxgap, minlen, maxlen):
    """Sum of per-sequence non-overlapping supports over a flattened database."""
    m = pat.shape[0]
    nseq = offsets.shape[0] - 1
    width = 1
    for s in range(nseq):
        if offsets[s + 1] - offsets[s] > width:
            width = offsets[s + 1] - offsets[s]
    used = np.zeros((m, width), dtype=np.int64)
    fail = np.zeros((m, width), dtype=np.int64)
    path = np.empty(m, dtype=np.int64)
    cursor = np.empty(m + 1, dtype=np.int64)
    total = 0
    for s in range(nseq):
        total += _netgap_one(
            flat, offsets[s], offsets[s + 1], pat, mingap, maxgap, minlen, maxlen,
            used, fail, s + 1, path, cursor,
        )
    return total


@njit(cache=True)
def support_per_sequence(flat, offsets, pat, mingap, maxgap, minlen, maxlen):
    m = pat.shape[0]
    nseq = offsets.shape[0] - 1
    width = 1
    for s in range(nseq):
        if offsets[s + 1] - offsets[s] > width:
            width = offsets[s + 1] - offsets[s]
    used = np.zeros((m, width), dtype=np.int64)
    fail = np.zeros((m, width), dtype=np.int64)
    path = np.empty(m, dtype=np.int64)
    cursor = np.empty(m + 1, dtype=np.int64)
    out = np.zeros(nseq, dtype=np.int64)
    for s in range(nseq):
        out[s] = _netgap_one(
            flat, offsets[s], offsets[s + 1], pat, mingap, maxgap, minlen, maxlen,
            used, fail, s + 1, path, cursor,
        )
    return out
