"""Mining results, run statistics and strategy toggles."""

from __future__ import annotations

import resource
import sys
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field

from gapmine.model import Pattern


@dataclass(frozen=True)
class Strategies:
    """Which pruning strategies a run applies.

    ``sprp``/``iprp`` reduce the database before mining; ``bpep`` prunes
    breadth-first levels and ``dpep`` cuts depth-first branches.
    """

    sprp: bool = True
    iprp: bool = True
    bpep: bool = True
    dpep: bool = True
    iprp_mode: str = "safe"

    @classmethod
    def none(cls) -> Strategies:
        return cls(False, False, False, False)

    @classmethod
    def variant(cls, name: str) -> Strategies:
        """``v1``: pre-extension pruning only; ``v2``: everything."""
        if name == "v1":
            return cls(sprp=False, iprp=False)
        if name == "v2":
            return cls()
        raise ValueError(f"unknown strategy variant {name!r}")


@dataclass
class RunStats:
    algo: str = ""
    timings: dict[str, float] = field(default_factory=dict)
    support_calls: int = 0
    pruning_calls: int = 0
    candidates: dict[int, int] = field(default_factory=dict)
    patterns_found: int = 0
    sequences_removed: int = 0
    items_trimmed: int = 0
    peak_memory: int = 0
    flags: list[str] = field(default_factory=list)

    @property
    def netgap_calls(self) -> int:
        """Per-sequence NETGAP evaluations, for support and for pruning alike."""
        return self.support_calls + self.pruning_calls

    @property
    def candidates_generated(self) -> int:
        return sum(self.candidates.values())

    def count_candidate(self, size: int, n: int = 1) -> None:
        self.candidates[size] = self.candidates.get(size, 0) + n

    @contextmanager
    def timed(self, phase: str):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.timings[phase] = self.timings.get(phase, 0.0) + time.perf_counter() - t0

    def record_memory(self) -> None:
        # ru_maxrss is KiB on Linux, bytes on macOS
        rss = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        self.peak_memory = rss if sys.platform == "darwin" else rss * 1024

    def to_dict(self) -> dict:
        out = asdict(self)
        out["candidates"] = {str(k): v for k, v in sorted(self.candidates.items())}
        out["netgap_calls"] = self.netgap_calls
        out["candidates_generated"] = self.candidates_generated
        return out


@dataclass
class MiningResult:
    patterns: dict[Pattern, int] = field(default_factory=dict)
    stats: RunStats = field(default_factory=RunStats)

    def __len__(self) -> int:
        return len(self.patterns)

    def __contains__(self, p: object) -> bool:
        return p in self.patterns

    def sorted(self) -> list[tuple[Pattern, int]]:
        """Patterns ordered by length, then lexicographically by item id."""
        return sorted(self.patterns.items(), key=lambda kv: (len(kv[0]), kv[0]))
