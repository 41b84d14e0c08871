"""Nettree construction and non-overlapping support counting.

:class:`Nettree` is the explicit, inspectable structure: levels of matching
positions linked by gap-respecting edges. :func:`netgap` and
:func:`support_db` answer the same question through the compiled kernel in
:mod:`gapmine._kernels` and are what the miners call.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from gapmine import _kernels
from gapmine.model import (
    ContractError,
    GapConstraint,
    LengthConstraint,
    Pattern,
    SequenceDatabase,
    SequenceRecord,
)

Node = tuple[int, int]  # (level, 1-based position)


@dataclass
class Nettree:
    """Leveled graph of occurrence positions for one (pattern, sequence) pair.

    Level ``j`` (0-based) holds the 1-based positions whose item equals
    ``pattern[j]``. ``children[(j, a)]`` lists positions ``b`` at level
    ``j + 1`` with ``mingap <= b - a - 1 <= maxgap``. Removed nodes are
    tombstoned in ``alive`` rather than spliced out.
    """

    pattern: Pattern
    levels: list[list[int]]
    children: dict[Node, list[int]] = field(default_factory=dict)
    parents: dict[Node, list[int]] = field(default_factory=dict)
    alive: set[Node] = field(default_factory=set)

    @property
    def depth(self) -> int:
        return len(self.levels)

    def nodes(self, level: int) -> list[int]:
        return [x for x in self.levels[level] if (level, x) in self.alive]

    def live_children(self, node: Node) -> list[int]:
        j, _ = node
        return [b for b in self.children.get(node, ()) if (j + 1, b) in self.alive]

    def live_parents(self, node: Node) -> list[int]:
        j, _ = node
        return [a for a in self.parents.get(node, ()) if (j - 1, a) in self.alive]

    def _is_lonely(self, node: Node) -> bool:
        j, _ = node
        if j > 0 and not self.live_parents(node):
            return True
        if j < self.depth - 1 and not self.live_children(node):
            return True
        return False

    def prune_lonely(self, seeds: Sequence[Node] | None = None) -> list[Node]:
        """Remove lonely nodes until none remain; returns them in removal order.

        A node is lonely when it is not a root and has no live parent, or is
        not an absolute leaf and has no live child.
        """
        pending = sorted(self.alive) if seeds is None else list(seeds)
        removed: list[Node] = []
        while pending:
            node = pending.pop(0)
            if node not in self.alive or not self._is_lonely(node):
                continue
            self.alive.discard(node)
            removed.append(node)
            j, _ = node
            if j > 0:
                pending.extend((j - 1, a) for a in self.parents.get(node, ()))
            if j < self.depth - 1:
                pending.extend((j + 1, b) for b in self.children.get(node, ()))
        return removed

    def _find_path(self, root: int, length: LengthConstraint) -> list[int] | None:
        last = self.depth - 1
        dead: set[Node] = set()

        def walk(j: int, x: int) -> list[int] | None:
            if j == last:
                return [x] if length.allows(x - root + 1) else None
            for b in self.live_children((j, x)):
                if b - root + 1 > length.maxlen:
                    break
                if (j + 1, b) in dead:
                    continue
                rest = walk(j + 1, b)
                if rest is not None:
                    return [x] + rest
                dead.add((j + 1, b))
            return None

        return walk(0, root)

    def extract_paths(self, length: LengthConstraint) -> list[tuple[int, ...]]:
        """Greedily remove full paths whose span satisfies ``length``.

        Roots are tried left to right; below a root the leftmost child is
        preferred, backtracking when a branch cannot finish within the span
        bounds. Each extracted path is deleted and newly lonely nodes pruned.
        """
        paths = []
        for root in list(self.levels[0]):
            if (0, root) not in self.alive:
                continue
            path = self._find_path(root, length)
            if path is None:
                continue
            paths.append(tuple(path))
            nodes = [(j, x) for j, x in enumerate(path)]
            self.alive.difference_update(nodes)
            seeds = []
            for j, x in nodes:
                if j > 0:
                    seeds.extend((j - 1, a) for a in self.parents.get((j, x), ()))
                if j < self.depth - 1:
                    seeds.extend((j + 1, b) for b in self.children.get((j, x), ()))
            self.prune_lonely(seeds)
        return paths

    def copy(self) -> Nettree:
        return copy.deepcopy(self)


def build_nettree(p: Pattern, s: SequenceRecord | Sequence[int], gap: GapConstraint) -> Nettree:
    if len(p) < 1:
        raise ContractError("cannot build a Nettree for an empty pattern")
    items = s.items if isinstance(s, SequenceRecord) else tuple(s)
    levels = [[i + 1 for i, x in enumerate(items) if x == item] for item in p]
    tree = Nettree(tuple(p), levels)
    for j, level in enumerate(levels):
        tree.alive.update((j, x) for x in level)
        if j + 1 == len(levels):
            break
        nxt = levels[j + 1]
        for a in level:
            kids = [b for b in nxt if gap.allows(a, b)]
            tree.children[(j, a)] = kids
            for b in kids:
                tree.parents.setdefault((j + 1, b), []).append(a)
    return tree


def prune_lonely(t: Nettree) -> Nettree:
    """Return a copy of ``t`` with lonely nodes pruned to a fixed point."""
    out = t.copy()
    out.prune_lonely()
    return out


def count_nonoverlapping(t: Nettree, length: LengthConstraint) -> int:
    """Number of disjoint full paths extracted greedily; ``t`` is left untouched."""
    work = t.copy()
    if work.depth == 1:
        return len(work.nodes(0)) if length.allows(1) else 0
    work.prune_lonely()
    return len(work.extract_paths(length))


def netgap_tree(p: Pattern, s: SequenceRecord | Sequence[int], gap: GapConstraint,
                length: LengthConstraint) -> int:
    """Support through the explicit Nettree (slow, used for cross-checks)."""
    return count_nonoverlapping(build_nettree(p, s, gap), length)


def _as_array(p: Sequence[int]) -> np.ndarray:
    return np.asarray(p, dtype=np.int64)


def netgap(p: Pattern, s: SequenceRecord | Sequence[int], gap: GapConstraint,
           length: LengthConstraint) -> int:
    """Non-overlapping support of ``p`` in a single sequence."""
    if len(p) < 1:
        raise ContractError("netgap requires a non-empty pattern")
    items = s.items if isinstance(s, SequenceRecord) else tuple(s)
    flat = _as_array(items)
    offsets = np.array([0, len(items)], dtype=np.int64)
    return int(_kernels.support_flat(
        flat, offsets, _as_array(p), gap.mingap, gap.maxgap, length.minlen, length.maxlen
    ))


def support_raw(p: Pattern, d: SequenceDatabase, mingap: int, maxgap: int,
                minlen: int, maxlen: int) -> int:
    """Database support with unchecked bounds (relaxed gaps may have maxgap < mingap)."""
    if len(d) == 0:
        return 0
    return int(_kernels.support_flat(d.flat, d.offsets, _as_array(p), mingap, maxgap, minlen, maxlen))


def support_db(p: Pattern, d: SequenceDatabase, gap: GapConstraint, length: LengthConstraint) -> int:
    """Sum of :func:`netgap` over every record of ``d``."""
    return support_raw(p, d, gap.mingap, gap.maxgap, length.minlen, length.maxlen)


def support_per_sequence(p: Pattern, d: SequenceDatabase, gap: GapConstraint,
                         length: LengthConstraint) -> list[int]:
    if len(d) == 0:
        return []
    out = _kernels.support_per_sequence(
        d.flat, d.offsets, _as_array(p), gap.mingap, gap.maxgap, length.minlen, length.maxlen
    )
    return [int(x) for x in out]
