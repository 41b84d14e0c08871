from __future__ import annotations

import random

import pytest

from gapmine.model import MiningParams, SequenceDatabase, SymbolTable

DNA = SymbolTable.for_chars("ACGT")

SMALL_DB = ["ATCACTCG", "TGGCT", "AGTAA", "GAGATG"]
TRIM_DB = ["ACCATGT", "TAGAACC", "AGGCAATCTC", "TCGCTTGAAG", "TAAGGAC"]
RUNNING_SEQ = "GTCAAGTCTCTCAGGT"


def enc(text: str) -> tuple[int, ...]:
    return DNA.encode(text)


def dna_db(rows: list[str]) -> SequenceDatabase:
    return SequenceDatabase.from_strings(rows)


def random_instance(rng: random.Random, max_seqs: int = 4, max_len: int = 15, max_alpha: int = 4):
    """A small random database with random query, threshold and constraints."""
    alpha = "ACGT"[: rng.randint(2, max_alpha)]
    rows = [
        "".join(rng.choice(alpha) for _ in range(rng.randint(1, max_len)))
        for _ in range(rng.randint(1, max_seqs))
    ]
    db = SequenceDatabase.from_strings(rows)
    qs_text = "".join(rng.choice(alpha) for _ in range(rng.randint(1, 3)))
    mingap = rng.randint(0, 2)
    maxgap = mingap + rng.randint(0, 3)
    minlen = rng.choice([1, 1, 1, 2, 3])
    maxlen = max(minlen, rng.randint(2, 8))
    query = db.symbols.encode(qs_text)
    params = MiningParams.build(rng.randint(1, 4), (mingap, maxgap), (minlen, maxlen), query)
    return db, params


@pytest.fixture
def small_db() -> SequenceDatabase:
    return dna_db(SMALL_DB)


@pytest.fixture
def trim_db() -> SequenceDatabase:
    return dna_db(TRIM_DB)


# One status line per acceptance criterion, printed after the run.
_CRITERIA: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.failed or report.skipped:
        if report.failed:
            _CRITERIA[name] = "FAIL"
        elif report.skipped:
            _CRITERIA[name] = "SKIP"
        elif report.when == "call":
            _CRITERIA.setdefault(name, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        num = name.split("_")[2]
        label = " ".join(name.split("_")[3:])
        terminalreporter.write_line(f"criterion {int(num):2d}  {_CRITERIA[name]}  {label}")
