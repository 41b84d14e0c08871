"""Acceptance criteria, one test each.

Each test prints a ``criterion N: PASS/FAIL`` line (run with ``-s`` to see
them inline); a summary of all criteria is also printed at the end of the
session.
"""

from __future__ import annotations

import json
import random
from dataclasses import replace
from functools import lru_cache
from pathlib import Path

import pytest

from conftest import RUNNING_SEQ, SMALL_DB, TRIM_DB, dna_db, random_instance
from gapmine.baseline import enumerate_occurrences, max_nonoverlapping, mine_bruteforce, mine_nosep_ta
from gapmine.bench import BenchConfig, bench_grid
from gapmine.bfs import mine_bfs
from gapmine.dfs import dpep_keep, mine_dfs
from gapmine.model import GapConstraint, LengthConstraint, MiningParams, prefix, suffix
from gapmine.nettree import build_nettree, netgap, prune_lonely, support_db
from gapmine.preprocess import ANCHORED, iprp_trim, sprp_filter
from gapmine.result import Strategies

GOLDEN = Path(__file__).parent / "golden"


class report:
    """Print the criterion's status line whichever way the body exits."""

    def __init__(self, n: int, title: str):
        self.n, self.title = n, title

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        print(f"criterion {self.n}: {status}  {self.title}")
        return False


def G(a, b):
    return GapConstraint(a, b)


def L(a, b):
    return LengthConstraint(a, b)


def rendered(db, patterns):
    return {db.symbols.render(p): s for p, s in patterns.items()}


@lru_cache(maxsize=None)
def random_runs(n: int = 220, seed: int = 2024):
    """Random small instances shared by the cross-algorithm criteria."""
    rng = random.Random(seed)
    return [random_instance(rng, max_seqs=4, max_len=15, max_alpha=4) for _ in range(n)]


def test_criterion_01_single_item_supports():
    with report(1, "single-item supports on the four-sequence database"):
        db = dna_db(SMALL_DB)
        got = {c: support_db(db.symbols.encode(c), db, G(0, 2), L(1, 8)) for c in "ACGT"}
        assert got == {"A": 7, "C": 4, "G": 7, "T": 6}


def test_criterion_02_gap_semantics():
    with report(2, "gap constraint semantics"):
        db = dna_db(SMALL_DB)
        enc = db.symbols.encode
        assert support_db(enc("AG"), db, G(0, 2), L(1, 8)) == 3
        assert netgap(enc("GA"), enc("GAGATG"), G(0, 2), L(1, 6)) == 2
        occ = enumerate_occurrences(enc("GAG"), enc("GAGATG"), G(0, 2), L(1, 6))
        assert set(occ) == {(1, 2, 3), (1, 4, 6), (3, 4, 6)}
        assert max_nonoverlapping(occ) == 2
        assert netgap(enc("GAG"), enc("GAGATG"), G(0, 2), L(1, 6)) == 2


def test_criterion_03_length_semantics():
    with report(3, "length constraint semantics"):
        db = dna_db(SMALL_DB)
        assert support_db(db.symbols.encode("AAG"), db, G(0, 3), L(1, 6)) == 1


def test_criterion_04_netgap_worked_example():
    # Expected to fail: under gap = b - a - 1 with maxgap 2 the path
    # <11,12,13,14> (span 4) is valid after <2,3,4,6>, so the count is 2.
    with report(4, "netgap worked example (count 1, first path <2,3,4,6>)"):
        db = dna_db([RUNNING_SEQ])
        enc = db.symbols.encode
        tree = prune_lonely(build_nettree(enc("TCAG"), enc(RUNNING_SEQ), G(0, 2)))
        paths = tree.extract_paths(L(1, 5))
        assert paths[0] == (2, 3, 4, 6)
        assert netgap(enc("TCAG"), enc(RUNNING_SEQ), G(0, 2), L(1, 5)) == 1


def test_criterion_05_targeted_semantics():
    with report(5, "targeted mining semantics"):
        db = dna_db(SMALL_DB)
        params = MiningParams.build(2, (0, 2), (1, 6), db.symbols.encode("AT"))
        for miner in (mine_bfs, mine_dfs):
            got = rendered(db, miner(db, params).patterns)
            assert got["AT"] == 4 and got["ATA"] == 2
            assert "AA" not in got and "ATAA" not in got


RUN_15 = {
    "A", "AT", "C", "CG", "CT", "CTC", "CTCT", "G", "GT", "T", "TC", "TCG",
    "TCT", "TCTC", "TCTCT",
}
RUN_7 = {"TC": 4, "CTC": 3, "TCG": 3, "TCT": 4, "CTCT": 3, "TCTC": 3, "TCTCT": 3}


def test_criterion_06_post_processing_example():
    with report(6, "untargeted 15 patterns reduce to 7 with query TC"):
        db = dna_db([RUNNING_SEQ])
        enc = db.symbols.encode
        # untargeted: every frequent pattern visited by an unpruned depth-first run
        for maxlen in (10, 8):
            params = MiningParams.build(3, (0, 3), (1, maxlen), enc("TC"))
            seen = {}
            mine_dfs(db, params, Strategies.none(),
                     on_visit=lambda p, s: seen.setdefault(db.symbols.render(p), s))
            assert set(seen) == RUN_15
            for miner in (mine_bfs, mine_dfs, mine_nosep_ta, mine_bruteforce):
                assert rendered(db, miner(db, params).patterns) == RUN_7
        golden = json.loads((GOLDEN / "running_len8.json").read_text())
        assert golden["untargeted"] == seen
        assert golden["query_TC"] == RUN_7


def test_criterion_07_preprocessing_example():
    with report(7, "sequence filtering and anchored trimming"):
        db = dna_db(TRIM_DB)
        params = MiningParams.build(1, (0, 4), (1, 4), db.symbols.encode("TC"))
        kept = {r.sid for r in sprp_filter(db, params)}
        assert 0 not in kept and 1 not in kept
        trims = [db.symbols.render(iprp_trim(db.records[i], params, ANCHORED).items) for i in (2, 3, 4)]
        assert trims == ["AATCTC", "TCGCTT", ""]


def test_criterion_08_dpep_example():
    with report(8, "depth-first pruning stops <G>"):
        db = dna_db([RUNNING_SEQ])
        params = MiningParams.build(3, (0, 3), (1, 8), db.symbols.encode("TC"))
        assert not dpep_keep(db.symbols.encode("G"), params, db)
        seen = []
        mine_dfs(db, params, on_visit=lambda p, s: seen.append(db.symbols.render(p)))
        assert "G" in seen and not any(x.startswith("G") and len(x) > 1 for x in seen)


def test_criterion_09_oracle_equivalence():
    with report(9, "netgap equals exhaustive maximum on 1200 random instances"):
        rng = random.Random(909)
        for _ in range(1200):
            k = rng.randint(1, 4)
            s = tuple(rng.randrange(k) for _ in range(rng.randint(0, 15)))
            p = tuple(rng.randrange(k) for _ in range(rng.randint(1, 4)))
            mingap = rng.randint(0, 3)
            gap = G(mingap, mingap + rng.randint(0, 3))
            minlen = rng.randint(1, 5)
            length = L(minlen, minlen + rng.randint(0, 10))
            brute = max_nonoverlapping(enumerate_occurrences(p, s, gap, length))
            assert netgap(p, s, gap, length) == brute, (p, s, gap, length)


def test_criterion_10_cross_algorithm_equivalence():
    with report(10, "bfs == dfs == baseline == oracle on 220 random databases"):
        runs = random_runs()
        assert len(runs) >= 200
        for db, params in runs:
            expected = mine_bruteforce(db, params).patterns
            for miner in (mine_bfs, mine_dfs, mine_nosep_ta):
                assert miner(db, params).patterns == expected, (miner.__name__, db, params)


STRATEGY_TOGGLES = [
    (mine_bfs, "sprp"), (mine_bfs, "iprp"), (mine_bfs, "bpep"),
    (mine_dfs, "sprp"), (mine_dfs, "iprp"), (mine_dfs, "dpep"),
]


def test_criterion_11_strategy_safety():
    with report(11, "each strategy alone keeps results and never adds candidates or support calls"):
        for db, params in random_runs():
            for miner, name in STRATEGY_TOGGLES:
                off = miner(db, params, Strategies.none())
                on = miner(db, params, replace(Strategies.none(), **{name: True}))
                assert on.patterns == off.patterns, (name, db, params)
                assert on.stats.candidates_generated <= off.stats.candidates_generated
                assert on.stats.support_calls <= off.stats.support_calls


def test_criterion_12_apriori_property():
    with report(12, "prefix and suffix of every frequent pattern are frequent"):
        checked = 0
        for db, params in random_runs():
            if params.length.minlen != 1:
                continue
            for p in mine_dfs(db, params).patterns:
                if len(p) < 2:
                    continue
                checked += 1
                for sub in (prefix(p), suffix(p)):
                    assert support_db(sub, db, params.gap, params.length) >= params.minsup
        assert checked > 50


def test_criterion_13_synthetic_benchmark_shape():
    with report(13, "synthetic corpus: counts shrink with minsup and query length; fewer NETGAP calls"):
        minsups = [40, 60, 80, 100]
        queries = ["AFH", "AFHL", "AFHLT"]
        rows = bench_grid(BenchConfig(
            minsups=minsups, queries=queries,
            algos=["bfs", "dfs", "baseline"], variants=["v1", "v2"],
        ))
        assert all(r["error"] == "" for r in rows)
        cell = {(r["algo"], r["variant"], r["query"], r["minsup"]): r for r in rows}
        for (algo, variant, _, _) in {k[:2] + (None, None) for k in cell}:
            for q in queries:
                counts = [cell[algo, variant, q, m]["patterns"] for m in minsups]
                assert counts == sorted(counts, reverse=True), (algo, variant, q, counts)
            for m in minsups:
                counts = [cell[algo, variant, q, m]["patterns"] for q in queries]
                assert counts == sorted(counts, reverse=True), (algo, variant, m, counts)
        assert any(cell["dfs", "v2", "AFH", m]["patterns"] > 0 for m in minsups)
        for q in queries:
            for m in minsups:
                base = cell["baseline", "-", q, m]["netgap_calls"]
                for algo in ("bfs", "dfs"):
                    for variant in ("v1", "v2"):
                        assert cell[algo, variant, q, m]["netgap_calls"] < base
