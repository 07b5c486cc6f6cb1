"""Finite bounded lattices built from Hasse diagrams.

A :class:`Lattice` stores a dense order matrix together with precomputed
meet and join tables. Elements are integer indices ``0..n-1``; labels are
only used for display and JSON documents.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from lattika import kernels
from lattika.errors import (
    CycleDetected,
    DegenerateLattice,
    LatticeError,
    NoBoundedStructure,
    NotALattice,
    NotComparable,
)


def _frozen(arr):
    arr = np.ascontiguousarray(arr)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Lattice:
    """A validated finite bounded lattice.

    Use :func:`from_covers` (or :meth:`Lattice.from_covers`) to build one;
    the constructor itself trusts its arguments.
    """

    labels: tuple[str, ...]
    order: np.ndarray = field(repr=False)
    meet_table: np.ndarray = field(repr=False)
    join_table: np.ndarray = field(repr=False)
    bottom: int
    top: int

    @classmethod
    def from_covers(cls, n, covers, labels=None) -> "Lattice":
        return from_covers(n, covers, labels)

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(range(self.n))

    def leq(self, a: int, b: int) -> bool:
        return bool(self.order[a, b])

    def lt(self, a: int, b: int) -> bool:
        return a != b and bool(self.order[a, b])

    def meet(self, a: int, b: int) -> int:
        return int(self.meet_table[a, b])

    def join(self, a: int, b: int) -> int:
        return int(self.join_table[a, b])

    def meet_all(self, elements: Iterable[int]) -> int:
        out = self.top
        for x in elements:
            out = int(self.meet_table[out, x])
        return out

    def join_all(self, elements: Iterable[int]) -> int:
        out = self.bottom
        for x in elements:
            out = int(self.join_table[out, x])
        return out

    def label(self, i: int) -> str:
        return self.labels[i]

    def index(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"no element labelled {label!r}") from None

    def element(self, ref) -> int:
        """Resolve an index or a label to an index."""
        if isinstance(ref, str):
            return self.index(ref)
        i = int(ref)
        if not 0 <= i < self.n:
            raise IndexError(f"element {i} out of range for lattice of size {self.n}")
        return i

    def names(self, elements: Iterable[int]) -> list[str]:
        """Labels of ``elements`` in index order."""
        return [self.labels[i] for i in sorted(elements)]

    def down(self, a: int) -> frozenset[int]:
        return frozenset(np.flatnonzero(self.order[:, a]).tolist())

    def up(self, a: int) -> frozenset[int]:
        return frozenset(np.flatnonzero(self.order[a]).tolist())

    @cached_property
    def _label_index(self):
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def cosmall(self) -> np.ndarray:
        """``cosmall[a, b]`` is true iff ``a <= b`` and b is cosmall in [a, 1]."""
        return _frozen(kernels.cosmall_matrix(self.order, self.join_table, self.top).astype(bool))

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(lower, upper)``, sorted lexicographically."""
        out = []
        lt = self.order & ~np.eye(self.n, dtype=bool)
        for a in range(self.n):
            for b in np.flatnonzero(lt[a]):
                between = lt[a] & lt[:, b]
                if not between.any():
                    out.append((a, int(b)))
        return out

    def same_as(self, other: "Lattice") -> bool:
        """Structural equality: labels, order and both tables coincide."""
        return (
            self.labels == other.labels
            and self.bottom == other.bottom
            and self.top == other.top
            and np.array_equal(self.order, other.order)
            and np.array_equal(self.meet_table, other.meet_table)
            and np.array_equal(self.join_table, other.join_table)
        )


def from_covers(n: int, covers: Iterable[Sequence[int]], labels: Sequence[str] | None = None) -> Lattice:
    """Build and validate a lattice from the edges of its Hasse diagram.

    ``covers`` holds ``(lower, upper)`` pairs. Redundant (transitive) edges
    are accepted. Raises :class:`CycleDetected`, :class:`NoBoundedStructure`,
    :class:`DegenerateLattice` or :class:`NotALattice`.
    """
    if n < 1:
        raise NoBoundedStructure("a lattice needs at least one element")
    if labels is None:
        labels = [str(i) for i in range(n)]
    labels = tuple(str(s) for s in labels)
    if len(labels) != n:
        raise LatticeError(f"expected {n} labels, got {len(labels)}")
    if len(set(labels)) != n:
        raise LatticeError("labels must be distinct")

    adj = np.zeros((n, n), dtype=np.uint8)
    for pair in covers:
        lo, hi = (int(v) for v in pair)
        if not (0 <= lo < n and 0 <= hi < n):
            raise LatticeError(f"cover ({lo}, {hi}) out of range")
        if lo == hi:
            raise CycleDetected(f"self-loop at {labels[lo]!r}")
        adj[lo, hi] = 1

    order = kernels.transitive_closure(adj).astype(bool)
    both = order & order.T & ~np.eye(n, dtype=bool)
    if both.any():
        a, b = np.argwhere(both)[0]
        raise CycleDetected(f"{labels[a]!r} and {labels[b]!r} lie on a cycle")

    minimal = [i for i in range(n) if order[:, i].sum() == 1]
    maximal = [i for i in range(n) if order[i].sum() == 1]
    if len(minimal) != 1 or len(maximal) != 1:
        raise NoBoundedStructure(
            f"expected one minimal and one maximal element, found minimal={[labels[i] for i in minimal]} "
            f"maximal={[labels[i] for i in maximal]}"
        )
    bottom, top = minimal[0], maximal[0]
    if bottom == top:
        raise DegenerateLattice("bounded lattice requires 0 != 1")

    meet, join = kernels.meet_join_tables(order.astype(np.uint8))
    for table, kind in ((meet, "greatest lower bound"), (join, "least upper bound")):
        bad = np.argwhere(table < 0)
        if bad.size:
            a, b = bad[0]
            raise NotALattice((labels[a], labels[b]), kind)

    return Lattice(
        labels=labels,
        order=_frozen(order),
        meet_table=_frozen(meet.astype(np.int32)),
        join_table=_frozen(join.astype(np.int32)),
        bottom=int(bottom),
        top=int(top),
    )


def from_order(order, labels=None) -> Lattice:
    """Build a lattice from a full order matrix (``order[a, b]`` iff a <= b)."""
    order = np.asarray(order, dtype=bool)
    n = order.shape[0]
    lt = order & ~np.eye(n, dtype=bool)
    covers = []
    for a in range(n):
        for b in np.flatnonzero(lt[a]):
            if not (lt[a] & lt[:, b]).any():
                covers.append((a, int(b)))
    return from_covers(n, covers, labels)


def chain(k: int, prefix: str = "c") -> Lattice:
    """The chain ``0 < 1 < ... < k-1``."""
    return from_covers(k, [(i, i + 1) for i in range(k - 1)], [f"{prefix}{i}" for i in range(k)])


def meet(L: Lattice, a: int, b: int) -> int:
    return L.meet(a, b)


def join(L: Lattice, a: int, b: int) -> int:
    return L.join(a, b)


def leq(L: Lattice, a: int, b: int) -> bool:
    return L.leq(a, b)


def modular_violation(L: Lattice) -> tuple[int, int, int] | None:
    """A triple ``(a, b, c)`` with a <= c and a v (b ^ c) != (a v b) ^ c, or None."""
    a, b, c = kernels.modular_violation(L.order.astype(np.uint8), L.meet_table, L.join_table)
    return None if a < 0 else (int(a), int(b), int(c))


def is_modular(L: Lattice) -> bool:
    return modular_violation(L) is None


@dataclass(frozen=True)
class Interval:
    parent: Lattice
    lo: int
    hi: int
    members: frozenset[int]

    def __contains__(self, x):
        return x in self.members

    def __len__(self):
        return len(self.members)

    def as_lattice(self) -> Lattice:
        """The interval as a lattice in its own right, elements in parent index order."""
        members = sorted(self.members)
        sub = self.parent.order[np.ix_(members, members)]
        return from_order(sub, [self.parent.label(m) for m in members])


def interval(L: Lattice, lo: int, hi: int) -> Interval:
    if not L.leq(lo, hi):
        raise NotComparable(L.label(lo), L.label(hi))
    members = frozenset(np.flatnonzero(L.order[lo] & L.order[:, hi]).tolist())
    return Interval(L, lo, hi, members)


def pick_witness(L: Lattice, candidates: Iterable[int]):
    """Deterministic witness choice: smallest index that is not a bound, else smallest."""
    cands = sorted(set(candidates))
    if not cands:
        return None
    for c in cands:
        if c != L.bottom and c != L.top:
            return c
    return cands[0]


# JSON documents


def to_document(L: Lattice) -> dict:
    return {"labels": list(L.labels), "covers": [list(e) for e in L.covers()]}


def from_document(doc: dict) -> Lattice:
    labels = doc["labels"]
    return from_covers(len(labels), doc.get("covers", []), labels)


def dumps(L: Lattice) -> str:
    return json.dumps(to_document(L), indent=2) + "\n"


def load(path) -> Lattice:
    return from_document(json.loads(Path(path).read_text(encoding="utf-8")))


def save(L: Lattice, path) -> None:
    Path(path).write_text(dumps(L), encoding="utf-8")
