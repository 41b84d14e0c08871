"""Domain types and elementary matching operations.

Patterns and sequences are tuples of dense integer item ids. Positions are
0-based internally; anything reported to a user is converted to 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

Pattern = tuple[int, ...]


class ContractError(ValueError):
    """Raised when an operation is called outside its preconditions."""


@dataclass(frozen=True)
class GapConstraint:
    """Bounds on the number of wildcard positions between adjacent items."""

    mingap: int
    maxgap: int

    def __post_init__(self) -> None:
        if not 0 <= self.mingap <= self.maxgap:
            raise ContractError(
                f"gap constraint requires 0 <= mingap <= maxgap, got [{self.mingap}, {self.maxgap}]"
            )

    def allows(self, a: int, b: int) -> bool:
        return self.mingap <= b - a - 1 <= self.maxgap


@dataclass(frozen=True)
class LengthConstraint:
    """Bounds on an occurrence span (last position - first position + 1)."""

    minlen: int
    maxlen: int

    def __post_init__(self) -> None:
        if not 1 <= self.minlen <= self.maxlen:
            raise ContractError(
                f"length constraint requires 1 <= minlen <= maxlen, got [{self.minlen}, {self.maxlen}]"
            )

    def allows(self, span: int) -> bool:
        return self.minlen <= span <= self.maxlen


@dataclass(frozen=True)
class MiningParams:
    """The full problem statement for one mining run.

    ``minsup`` is an absolute count of non-overlapping occurrences summed over
    every sequence of the database.
    """

    minsup: int
    gap: GapConstraint
    length: LengthConstraint
    query: Pattern

    def __post_init__(self) -> None:
        if self.minsup < 1:
            raise ContractError(f"minsup must be >= 1, got {self.minsup}")
        if len(self.query) < 1:
            raise ContractError("query sequence must contain at least one item")
        object.__setattr__(self, "query", tuple(int(x) for x in self.query))

    @classmethod
    def build(
        cls,
        minsup: int,
        gap: tuple[int, int],
        length: tuple[int, int],
        query: Sequence[int],
    ) -> MiningParams:
        return cls(minsup, GapConstraint(*gap), LengthConstraint(*length), tuple(query))


@dataclass(frozen=True)
class SequenceRecord:
    sid: int
    items: Pattern

    def __len__(self) -> int:
        return len(self.items)


@dataclass(frozen=True)
class SymbolTable:
    """Bijection between external symbols and dense ids ``0..N-1``.

    Ids follow the sorted order of the symbols, so comparing patterns by id
    is the same as comparing them by symbol.
    """

    symbols: tuple[str, ...]
    kind: str = "chars"

    @cached_property
    def _ids(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.symbols)}

    def __len__(self) -> int:
        return len(self.symbols)

    def encode(self, symbols: Iterable[str]) -> Pattern:
        """Map symbols to ids; unknown symbols get ids past the alphabet.

        An unknown query symbol can never match a database item, which is the
        behaviour wanted for queries that mention absent symbols.
        """
        out = []
        extra: dict[str, int] = {}
        for s in symbols:
            if s in self._ids:
                out.append(self._ids[s])
            else:
                out.append(extra.setdefault(s, len(self.symbols) + len(extra)))
        return tuple(out)

    def decode(self, items: Iterable[int]) -> list[str]:
        return [self.symbols[i] for i in items]

    def render(self, items: Iterable[int]) -> str:
        sep = "" if self.kind == "chars" else "-"
        return sep.join(self.decode(items))

    @classmethod
    def for_chars(cls, alphabet: Iterable[str]) -> SymbolTable:
        return cls(tuple(sorted(set(alphabet))), "chars")

    @classmethod
    def for_ints(cls, values: Iterable[int]) -> SymbolTable:
        return cls(tuple(str(v) for v in sorted(set(values))), "spmf")


@dataclass(frozen=True)
class SequenceDatabase:
    records: tuple[SequenceRecord, ...]
    symbols: SymbolTable = field(default_factory=lambda: SymbolTable(()))

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    @cached_property
    def flat(self) -> np.ndarray:
        """All records concatenated; pair with :attr:`offsets`."""
        if not self.records:
            return np.zeros(0, dtype=np.int64)
        return np.concatenate([np.asarray(r.items, dtype=np.int64) for r in self.records])

    @cached_property
    def offsets(self) -> np.ndarray:
        lengths = [len(r) for r in self.records]
        return np.concatenate([[0], np.cumsum(lengths, dtype=np.int64)]).astype(np.int64)

    @cached_property
    def items(self) -> tuple[int, ...]:
        """Distinct item ids that occur in at least one record, sorted."""
        return tuple(int(x) for x in np.unique(self.flat))

    def with_records(self, records: Iterable[SequenceRecord]) -> SequenceDatabase:
        return SequenceDatabase(tuple(records), self.symbols)

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> SequenceDatabase:
        """Build a character database, e.g. ``from_strings(["ACGT", "AAT"])``."""
        rows = list(rows)
        table = SymbolTable.for_chars("".join(rows))
        records = tuple(SequenceRecord(i, table.encode(row)) for i, row in enumerate(rows))
        return cls(records, table)

    @classmethod
    def from_lists(cls, rows: Iterable[Sequence[int]]) -> SequenceDatabase:
        """Build a database whose items are already dense ids."""
        rows = [tuple(int(x) for x in r) for r in rows]
        n = max((max(r) for r in rows if r), default=-1) + 1
        table = SymbolTable(tuple(str(i) for i in range(n)), "spmf")
        return cls(tuple(SequenceRecord(i, r) for i, r in enumerate(rows)), table)


@dataclass(frozen=True)
class MatchState:
    """Cursors left behind by a greedy left-to-right match of a query.

    ``i_match`` counts consumed items of the scanned sequence (equivalently,
    the 1-based position of the last matched item); ``q_match`` counts the
    query items matched so far.
    """

    i_match: int
    q_match: int
    query: Pattern

    @property
    def completed(self) -> bool:
        return self.q_match == len(self.query)

    @property
    def unmatched_tail(self) -> Pattern:
        return self.query[self.q_match:]


def is_subsequence(small: Sequence[int], big: Sequence[int]) -> bool:
    """True iff the items of ``small`` appear in ``big`` in order."""
    it = iter(big)
    return all(any(x == y for y in it) for x in small)


def match_forward(items: Sequence[int], query: Sequence[int]) -> MatchState:
    q = 0
    i_match = 0
    for i, x in enumerate(items):
        if q == len(query):
            break
        if x == query[q]:
            q += 1
            i_match = i + 1
    return MatchState(i_match, q, tuple(query))


def match_backward(pattern: Sequence[int], query_prefix: Sequence[int]) -> int:
    """Greedy right-to-left match; returns how many trailing query items matched."""
    k = len(query_prefix)
    for x in reversed(pattern):
        if k == 0:
            break
        if x == query_prefix[k - 1]:
            k -= 1
    return len(query_prefix) - k


def prefix(p: Pattern) -> Pattern:
    if len(p) < 2:
        raise ContractError("prefix requires a pattern of length >= 2")
    return p[:-1]


def suffix(p: Pattern) -> Pattern:
    if len(p) < 2:
        raise ContractError("suffix requires a pattern of length >= 2")
    return p[1:]
