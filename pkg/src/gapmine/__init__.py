"""Targeted mining of non-overlapping sequential patterns under gap and length constraints."""

from gapmine.baseline import mine_bruteforce, mine_nosep_ta
from gapmine.bfs import mine_bfs
from gapmine.dfs import mine_dfs
from gapmine.model import (
    GapConstraint,
    LengthConstraint,
    MiningParams,
    Pattern,
    SequenceDatabase,
    SequenceRecord,
)
from gapmine.nettree import netgap, support_db
from gapmine.result import MiningResult, RunStats, Strategies

__all__ = [
    "GapConstraint",
    "LengthConstraint",
    "MiningParams",
    "MiningResult",
    "Pattern",
    "RunStats",
    "SequenceDatabase",
    "SequenceRecord",
    "Strategies",
    "mine_bfs",
    "mine_bruteforce",
    "mine_dfs",
    "mine_nosep_ta",
    "netgap",
    "support_db",
]

__version__ = "0.1.0"
