from __future__ import annotations

import os
import subprocess
import sys

from gapmine.bench import FIELDS, BenchConfig, bench_grid, make_synthetic_corpus, rows_to_csv, synthetic_corpus
from gapmine.formats import DatasetSummary


def test_bundled_corpus_shape():
    summary = DatasetSummary.of(synthetic_corpus())
    assert summary.sequence_count == 200
    assert summary.item_count == 20


def test_generator_is_deterministic():
    assert make_synthetic_corpus(5, seed=3) == make_synthetic_corpus(5, seed=3)
    assert make_synthetic_corpus(5, seed=3) != make_synthetic_corpus(5, seed=4)


def test_grid_has_one_row_per_cell():
    config = BenchConfig(minsups=[60, 80, 100], queries=["AFHLT"] * 8, algos=["dfs"])
    rows = bench_grid(config)
    assert len(rows) == 24
    assert all(r["error"] == "" for r in rows)


def test_single_cell_grid_and_csv():
    rows = bench_grid(BenchConfig(minsups=[80], queries=["AFH"], algos=["bfs"], measure_memory=True))
    assert len(rows) == 1 and rows[0]["peak_memory"] > 0
    header = rows_to_csv(rows).splitlines()[0]
    assert header.split(",") == FIELDS


def test_failed_cell_is_recorded():
    rows = bench_grid(BenchConfig(minsups=[0, 80], queries=["AFH"], algos=["dfs"]))
    assert "ContractError" in rows[0]["error"]
    assert rows[1]["error"] == ""


def test_env_flag_selects_python_fallback():
    code = (
        "from gapmine import _kernels; from gapmine.bench import synthetic_corpus;"
        "from gapmine.dfs import mine_dfs; from gapmine.model import MiningParams;"
        "db = synthetic_corpus();"
        "r = mine_dfs(db, MiningParams.build(80, (0, 3), (1, 10), db.symbols.encode('AFH')));"
        "print(_kernels.HAS_NUMBA, sorted(r.patterns.items()))"
    )
    outs = {}
    for flag in ("0", "1"):
        env = dict(os.environ, GAPMINE_DISABLE_JIT=flag)
        outs[flag] = subprocess.run([sys.executable, "-c", code], env=env, check=True,
                                    capture_output=True, text=True).stdout.split(" ", 1)
    assert outs["1"][0] == "False"
    assert outs["0"][1] == outs["1"][1]
