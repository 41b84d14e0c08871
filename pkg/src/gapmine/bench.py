"""Benchmark grid over algorithms, strategy variants, thresholds and queries."""

from __future__ import annotations

import csv
import io
import time
import tracemalloc
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from gapmine.baseline import mine_bruteforce, mine_nosep_ta
from gapmine.bfs import mine_bfs
from gapmine.dfs import mine_dfs
from gapmine.formats import load, parse_chars, parse_query
from gapmine.model import MiningParams, SequenceDatabase
from gapmine.result import MiningResult, Strategies

AMINO_ACIDS = "ACDEFGHIKLMNPQRSTVWY"
# rough vertebrate amino-acid background frequencies, in AMINO_ACIDS order
_BACKGROUND = np.array([
    7.0, 2.3, 4.7, 7.1, 3.7, 6.6, 2.6, 4.3, 5.7, 10.0,
    2.1, 3.6, 6.3, 4.8, 5.6, 8.3, 5.4, 6.0, 1.2, 2.7,
])

SYNTHETIC_CORPUS = "synthetic_protein.fa"

FIELDS = [
    "algo", "variant", "minsup", "query", "time_s", "peak_memory", "patterns",
    "candidates", "netgap_calls", "support_calls", "pruning_calls",
    "sequences_removed", "error",
]


def make_synthetic_corpus(
    n: int = 200,
    seed: int = 7,
    motifs: tuple[str, ...] = ("AFHLT", "KDEL", "CGW"),
    plant_rate: float = 0.35,
) -> list[str]:
    """Protein-like random sequences with a few gapped motifs planted.

    Lengths are drawn around 80 residues; each motif is inserted into a
    sequence with probability ``plant_rate``, with 0-2 random residues
    between consecutive motif letters.
    """
    rng = np.random.default_rng(seed)
    probs = _BACKGROUND / _BACKGROUND.sum()
    alphabet = np.array(list(AMINO_ACIDS))
    out = []
    for _ in range(n):
        length = int(np.clip(rng.normal(80, 20), 30, 150))
        seq = list(rng.choice(alphabet, size=length, p=probs))
        for motif in motifs:
            if rng.random() >= plant_rate:
                continue
            piece: list[str] = []
            for k, ch in enumerate(motif):
                if k:
                    piece.extend(rng.choice(alphabet, size=int(rng.integers(0, 3)), p=probs))
                piece.append(ch)
            at = int(rng.integers(0, len(seq) - len(piece)))
            seq[at:at + len(piece)] = piece
        out.append("".join(seq))
    return out


def write_corpus(rows: list[str], path: str | Path) -> None:
    lines = []
    for i, row in enumerate(rows):
        lines.append(f">seq{i}")
        lines.append(row)
    Path(path).write_text("\n".join(lines) + "\n")


def synthetic_corpus() -> SequenceDatabase:
    """The bundled 200-sequence corpus (regenerate with ``gapmine synth``)."""
    text = resources.files("gapmine.data").joinpath(SYNTHETIC_CORPUS).read_text()
    return parse_chars(text)


@dataclass
class BenchConfig:
    minsups: list[int]
    queries: list[str]
    algos: list[str] = field(default_factory=lambda: ["bfs", "dfs", "baseline"])
    variants: list[str] = field(default_factory=lambda: ["v2"])
    gap: tuple[int, int] = (0, 3)
    length: tuple[int, int] = (1, 10)
    input: str | None = None
    format: str = "chars"
    flatten: bool = False
    jobs: int = 1
    measure_memory: bool = False


def run_algo(algo: str, db: SequenceDatabase, params: MiningParams,
             strategies: Strategies) -> MiningResult:
    if algo == "bfs":
        return mine_bfs(db, params, strategies)
    if algo == "dfs":
        return mine_dfs(db, params, strategies)
    if algo == "baseline":
        return mine_nosep_ta(db, params)
    if algo == "oracle":
        return mine_bruteforce(db, params)
    raise ValueError(f"unknown algorithm {algo!r}")


def _cells(config: BenchConfig) -> list[tuple[str, str, int, str]]:
    cells = []
    for algo in config.algos:
        variants = config.variants if algo in ("bfs", "dfs") else ["-"]
        for variant in variants:
            for query in config.queries:
                for minsup in config.minsups:
                    cells.append((algo, variant, minsup, query))
    return cells


def _run_cell(db: SequenceDatabase, config: BenchConfig, cell: tuple[str, str, int, str]) -> dict:
    algo, variant, minsup, query = cell
    row = dict.fromkeys(FIELDS, "")
    row.update(algo=algo, variant=variant, minsup=minsup, query=query)
    try:
        params = MiningParams.build(minsup, config.gap, config.length, parse_query(query, db.symbols))
        strategies = Strategies.variant(variant) if variant != "-" else Strategies.none()
        if config.measure_memory:
            tracemalloc.start()
        t0 = time.perf_counter()
        result = run_algo(algo, db, params, strategies)
        elapsed = time.perf_counter() - t0
        if config.measure_memory:
            _, peak = tracemalloc.get_traced_memory()
            tracemalloc.stop()
        else:
            peak = result.stats.peak_memory
        s = result.stats
        row.update(
            time_s=round(elapsed, 6), peak_memory=peak, patterns=len(result),
            candidates=s.candidates_generated, netgap_calls=s.netgap_calls,
            support_calls=s.support_calls, pruning_calls=s.pruning_calls,
            sequences_removed=s.sequences_removed,
        )
    except Exception as e:  # a failed cell must not stop the grid
        if tracemalloc.is_tracing():
            tracemalloc.stop()
        row["error"] = f"{type(e).__name__}: {e}"
    return row


def bench_grid(config: BenchConfig, db: SequenceDatabase | None = None) -> list[dict]:
    """Run every (algo, variant, query, minsup) cell and return one row per cell.

    Cells run sequentially unless ``config.jobs > 1``; parallel runs leave the
    timing and memory columns empty because they would not be comparable.
    """
    if db is None:
        db = synthetic_corpus() if config.input is None else load(config.input, config.format, config.flatten)
    cells = _cells(config)
    if config.jobs > 1:
        with ProcessPoolExecutor(config.jobs) as pool:
            rows = list(pool.map(_run_cell, [db] * len(cells), [config] * len(cells), cells))
        for row in rows:
            row["time_s"] = ""
            row["peak_memory"] = ""
        return rows
    return [_run_cell(db, config, cell) for cell in cells]


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()
