"""Dataset loaders and result/statistics writers.

Two input formats are understood:

``chars``
    One sequence per line, one character per item. Lines starting with
    ``>`` are FASTA-style headers and are skipped, as are blank lines.
``spmf``
    Space-separated non-negative integers; ``-1`` closes an itemset and
    ``-2`` closes a sequence.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable

from gapmine.model import Pattern, SequenceDatabase, SequenceRecord, SymbolTable
from gapmine.result import MiningResult


class FormatError(ValueError):
    """Input could not be parsed."""


@dataclass(frozen=True)
class DatasetSummary:
    total_length: int
    item_count: int
    sequence_count: int
    average_length: float

    @classmethod
    def of(cls, d: SequenceDatabase) -> DatasetSummary:
        tl = sum(len(r) for r in d)
        nos = len(d)
        return cls(tl, len(d.items), nos, tl / nos if nos else 0.0)

    def to_dict(self) -> dict:
        out = asdict(self)
        out.update(TL=self.total_length, NoI=self.item_count, NoS=self.sequence_count,
                   ALoS=round(self.average_length, 1))
        return out


def _read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e}") from e


def parse_chars(text: str) -> SequenceDatabase:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith(">"):
            continue
        rows.append(line)
    if not rows:
        raise FormatError("no sequences found")
    return SequenceDatabase.from_strings(rows)


def load_chars(path: str | Path) -> SequenceDatabase:
    return parse_chars(_read_text(path))


def parse_spmf(text: str, flatten: bool = False) -> SequenceDatabase:
    raw: list[list[int]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line[0] in "#%@":
            continue
        seq: list[int] = []
        itemset: list[int] = []
        closed = False
        for tok in line.split():
            try:
                v = int(tok)
            except ValueError:
                raise FormatError(f"line {lineno}: malformed token {tok!r}") from None
            if closed:
                raise FormatError(f"line {lineno}: tokens after -2")
            if v == -1:
                if len(itemset) > 1 and not flatten:
                    raise FormatError(
                        f"line {lineno}: itemset {itemset} has {len(itemset)} items; "
                        "only single-item itemsets are supported (use --flatten)"
                    )
                seq.extend(itemset)
                itemset = []
            elif v == -2:
                seq.extend(itemset)
                itemset = []
                closed = True
            elif v < 0:
                raise FormatError(f"line {lineno}: malformed token {tok!r}")
            else:
                itemset.append(v)
        if itemset:
            raise FormatError(f"line {lineno}: itemset {itemset} is not terminated by -1")
        raw.append(seq)
    if not raw:
        raise FormatError("no sequences found")
    table = SymbolTable.for_ints(v for seq in raw for v in seq)
    records = tuple(
        SequenceRecord(i, table.encode(str(v) for v in seq)) for i, seq in enumerate(raw)
    )
    return SequenceDatabase(records, table)


def load_spmf(path: str | Path, flatten: bool = False) -> SequenceDatabase:
    return parse_spmf(_read_text(path), flatten)


def load(path: str | Path, fmt: str, flatten: bool = False) -> SequenceDatabase:
    if fmt == "chars":
        return load_chars(path)
    if fmt == "spmf":
        return load_spmf(path, flatten)
    raise FormatError(f"unknown input format {fmt!r}")


def parse_query(text: str, symbols: SymbolTable) -> Pattern:
    """Characters for ``chars`` databases, comma-separated integers for ``spmf``."""
    text = text.strip()
    if symbols.kind == "chars":
        parts = [c for c in text if not c.isspace() and c != ","]
    else:
        parts = [t.strip() for t in text.split(",") if t.strip()]
        for t in parts:
            if not t.isdigit():
                raise FormatError(f"query item {t!r} is not a non-negative integer")
        parts = [str(int(t)) for t in parts]
    if not parts:
        raise FormatError("query sequence is empty")
    return symbols.encode(parts)


def result_rows(result: MiningResult, symbols: SymbolTable) -> list[tuple[str, int]]:
    return [(symbols.render(p), s) for p, s in result.sorted()]


def render_csv(rows: Iterable[tuple[str, int]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["pattern", "support"])
    w.writerows(rows)
    return buf.getvalue()


def read_csv(text: str) -> list[tuple[str, int]]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != ["pattern", "support"]:
        raise FormatError(f"unexpected result header {header!r}")
    return [(p, int(s)) for p, s in reader]


def render_json(rows: Iterable[tuple[str, int]]) -> str:
    data = {"patterns": [{"pattern": p, "support": s} for p, s in rows]}
    return json.dumps(data, indent=2) + "\n"


def read_json(text: str) -> list[tuple[str, int]]:
    return [(d["pattern"], int(d["support"])) for d in json.loads(text)["patterns"]]
