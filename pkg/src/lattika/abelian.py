"""Subgroup lattices of finite abelian groups Z_{n1} x ... x Z_{nk}.

Subgroups are stored as bitmasks over element indices (mixed-radix
encoding of the tuples), which keeps closure and sum computations cheap.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from lattika import coclosure as cc
from lattika.errors import NoIsomorphism, SpecError, TooLarge
from lattika.fixtures import FIXTURES
from lattika.lattice import Lattice, from_covers

DEFAULT_MAX_SIZE = 10_000


def max_size(override: int | None = None) -> int:
    if override is not None:
        return int(override)
    return int(os.environ.get("LATTIKA_MAX_SIZE", DEFAULT_MAX_SIZE))


def parse_group_spec(spec: str) -> tuple[int, ...]:
    """``"2x4"`` -> ``(2, 4)``."""
    try:
        orders = tuple(int(p) for p in str(spec).lower().replace("×", "x").split("x") if p.strip())
    except ValueError:
        raise SpecError(f"bad group spec {spec!r}; expected e.g. '2x4'") from None
    if not orders or any(n < 1 for n in orders):
        raise SpecError(f"bad group spec {spec!r}")
    return orders


@dataclass(frozen=True, eq=False)
class AbelianGroup:
    cyclic_orders: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cyclic_orders", tuple(int(n) for n in self.cyclic_orders))
        if not self.cyclic_orders or any(n < 1 for n in self.cyclic_orders):
            raise SpecError("cyclic orders must be positive integers")

    @classmethod
    def parse(cls, spec: str) -> "AbelianGroup":
        return cls(parse_group_spec(spec))

    @property
    def order(self) -> int:
        out = 1
        for n in self.cyclic_orders:
            out *= n
        return out

    def __len__(self):
        return self.order

    @cached_property
    def elements(self) -> list[tuple[int, ...]]:
        return list(product(*(range(n) for n in self.cyclic_orders)))

    @cached_property
    def _index(self) -> dict[tuple[int, ...], int]:
        return {x: i for i, x in enumerate(self.elements)}

    def encode(self, x: Sequence[int]) -> int:
        return self._index[tuple(v % n for v, n in zip(x, self.cyclic_orders))]

    def decode(self, i: int) -> tuple[int, ...]:
        return self.elements[i]

    @property
    def zero(self) -> tuple[int, ...]:
        return tuple(0 for _ in self.cyclic_orders)

    def add(self, x, y) -> tuple[int, ...]:
        return tuple((a + b) % n for a, b, n in zip(x, y, self.cyclic_orders))

    def neg(self, x) -> tuple[int, ...]:
        return tuple(-a % n for a, n in zip(x, self.cyclic_orders))

    def scale(self, r: int, x) -> tuple[int, ...]:
        return tuple(r * a % n for a, n in zip(x, self.cyclic_orders))

    @cached_property
    def add_index(self):
        """``add_index[i][j]`` is the index of the sum of elements i and j."""
        els, enc = self.elements, self._index
        orders = self.cyclic_orders
        return [[enc[tuple((a + b) % n for a, b, n in zip(x, y, orders))] for y in els] for x in els]

    def spec(self) -> str:
        return "x".join(str(n) for n in self.cyclic_orders)


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def _members(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _closure_mask(add, seed: Iterable[int]) -> int:
    """Bitmask of the subgroup generated by element indices ``seed``."""
    gens = sorted(set(seed))
    found = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for s in frontier:
            row = add[s]
            for g in gens:
                t = row[g]
                if t not in found:
                    found.add(t)
                    nxt.append(t)
        frontier = nxt
    return _mask(found)


def _sum_mask(add, h: int, k: int) -> int:
    if h & k == k:
        return h
    if h & k == h:
        return k
    hs, ks = _members(h), _members(k)
    out = 0
    for x in hs:
        row = add[x]
        for y in ks:
            out |= 1 << row[y]
    return out


def enumerate_submodules(n_elements: int, cyclic, add) -> list[int]:
    """All submodules of a finite module as bitmasks.

    ``cyclic`` lists the cyclic submodules (one per element) and ``add`` is
    the element addition table; every submodule is a sum of cyclic ones, so
    saturating under pairwise sums is complete.
    """
    subs = set(cyclic)
    subs.add(1)  # the zero submodule, element index 0
    frontier = list(subs)
    base = sorted(set(cyclic))
    while frontier:
        nxt = []
        for h in frontier:
            for k in base:
                s = _sum_mask(add, h, k)
                if s not in subs:
                    subs.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted(subs)


def inclusion_lattice(masks: Sequence[int], labels: Sequence[str]) -> Lattice:
    """Lattice of the given bitmask family ordered by inclusion (via its covers)."""
    n = len(masks)
    below = [[j for j in range(n) if j != i and masks[j] & masks[i] == masks[j]] for i in range(n)]
    bsets = [set(b) for b in below]
    covers = []
    for i in range(n):
        for j in below[i]:
            if not any(j in bsets[k] for k in below[i]):
                covers.append((j, i))
    return from_covers(n, covers, labels)


def _canonical_order(masks: Iterable[int], key_elements) -> list[int]:
    def key(m):
        mem = _members(m)
        return (len(mem), sorted(key_elements(i) for i in mem))

    return sorted(set(masks), key=key)


def _fmt(x) -> str:
    return "(" + ",".join(str(v) for v in x) + ")"


def generator_label(g: AbelianGroup, mask: int) -> str:
    """``<(1,0),(0,2)>``-style label built from a greedy lexicographic generating set."""
    if mask == 1:
        return "0"
    add = g.add_index
    members = _members(mask)
    for i in members:
        if _closure_mask(add, [i]) == mask:
            return "<" + _fmt(g.decode(i)) + ">"
    gens: list[int] = []
    span = 1
    for i in members:
        if not span >> i & 1:
            gens.append(i)
            span = _closure_mask(add, gens)
            if span == mask:
                break
    return "<" + ",".join(_fmt(g.decode(i)) for i in gens) + ">"


@dataclass(frozen=True, eq=False)
class SubgroupLattice:
    """All subgroups of ``group`` in canonical order, with their lattice.

    ``subgroups[i]`` is the frozenset of element tuples of lattice element i.
    """

    group: AbelianGroup
    masks: tuple[int, ...]
    lattice: Lattice

    @cached_property
    def subgroups(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(self.group.decode(i) for i in _members(m)) for m in self.masks)

    @cached_property
    def _by_mask(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.masks)}

    def index_of(self, elements: Iterable[Sequence[int]]) -> int:
        return self._by_mask[_mask(self.group.encode(x) for x in elements)]

    def index_of_mask(self, mask: int) -> int:
        return self._by_mask[mask]

    def __len__(self):
        return len(self.masks)


def subgroups(g: AbelianGroup, max_elements: int | None = None) -> SubgroupLattice:
    """Enumerate every subgroup of ``g`` and build the inclusion lattice.

    Raises :class:`TooLarge` above the size bound and
    :class:`~lattika.errors.DegenerateLattice` for the trivial group.
    """
    bound = max_size(max_elements)
    if g.order > bound:
        raise TooLarge(f"group of order {g.order} exceeds the bound {bound}")
    add = g.add_index
    cyclic = [_closure_mask(add, [i]) for i in range(g.order)]
    masks = _canonical_order(enumerate_submodules(g.order, cyclic, add), g.decode)
    labels = [generator_label(g, m) for m in masks]
    return SubgroupLattice(g, tuple(masks), inclusion_lattice(masks, labels))


def generated_subgroup(g: AbelianGroup, seed: Iterable[Sequence[int]]) -> frozenset[tuple[int, ...]]:
    mask = _closure_mask(g.add_index, [g.encode(x) for x in seed])
    return frozenset(g.decode(i) for i in _members(mask))


def subgroup_sum(g: AbelianGroup, h: Iterable, k: Iterable) -> frozenset[tuple[int, ...]]:
    hm = _mask(g.encode(x) for x in h)
    km = _mask(g.encode(x) for x in k)
    return frozenset(g.decode(i) for i in _members(_sum_mask(g.add_index, hm, km)))


def isomorphisms(L: Lattice, M: Lattice) -> Iterable[tuple[int, ...]]:
    """Yield order isomorphisms L -> M (as image tuples) in lexicographic order."""
    if L.n != M.n:
        return
    n = L.n
    # elements of L ordered by height so that lower elements are placed first
    height = [int(L.order[:, i].sum()) for i in range(n)]
    order = sorted(range(n), key=lambda i: (height[i], i))
    m_height = [int(M.order[:, i].sum()) for i in range(n)]
    img = [-1] * n
    used = [False] * n

    def place(k):
        if k == n:
            yield tuple(img)
            return
        x = order[k]
        for y in range(n):
            if used[y] or m_height[y] != height[x]:
                continue
            ok = True
            for j in range(k):
                z = order[j]
                if bool(L.order[z, x]) != bool(M.order[img[z], y]) or bool(L.order[x, z]) != bool(M.order[y, img[z]]):
                    ok = False
                    break
            if ok:
                img[x] = y
                used[y] = True
                yield from place(k + 1)
                used[y] = False
                img[x] = -1

    yield from place(0)


# Stated facts about the two example lattices, as (kind, args...) in fixture labels.
FIXTURE_FACTS = {
    "SG": [
        ("cosmall", "0", "H1"),
        ("cosmall", "H2", "H4"),
        ("coclosed", ("0", "H2", "H3", "G")),
        ("coclosures", "H1", ("0",)),
        ("coclosures", "H4", ("H2",)),
    ],
    "SGprime": [
        ("cosmall", "0'", "H3'"),
        ("cosmall", "H1'", "H4'"),
        ("cosmall", "H2'", "H4'"),
        ("coclosed", ("0'", "H1'", "H2'", "H5'", "H6'", "G'")),
        ("coclosures", "H3'", ("0'",)),
        ("coclosures", "H4'", ("H1'", "H2'")),
    ],
}


def check_fixture_facts(L: Lattice, fixture: str) -> list[tuple[str, bool]]:
    """Evaluate the stated facts of ``fixture`` on a lattice carrying its labels."""
    out = []
    for fact in FIXTURE_FACTS[fixture]:
        kind = fact[0]
        if kind == "cosmall":
            a, b = L.index(fact[1]), L.index(fact[2])
            out.append((f"{fact[2]} cosmall in [{fact[1]},1]", cc.is_cosmall(L, a, b)))
        elif kind == "coclosed":
            want = {L.index(x) for x in fact[1]}
            out.append(("coclosed set", cc.coclosed_set(L) == want))
        else:
            a = L.index(fact[1])
            want = {L.index(x) for x in fact[2]}
            out.append((f"coclosures({fact[1]})", cc.coclosures(L, a) == want))
    return out


def match_fixture(sl: SubgroupLattice | Lattice, fixture: str) -> dict[int, str]:
    """Map each lattice index to its fixture label via the first consistent isomorphism."""
    try:
        target = FIXTURES[fixture]()
    except KeyError:
        raise SpecError(f"unknown fixture {fixture!r}; choose from {sorted(FIXTURES)}") from None
    L = sl.lattice if isinstance(sl, SubgroupLattice) else sl
    for iso in isomorphisms(L, target):
        relabelled = relabel(L, [target.label(iso[i]) for i in L])
        if all(ok for _, ok in check_fixture_facts(relabelled, fixture)):
            return {i: target.label(iso[i]) for i in L}
    raise NoIsomorphism(f"lattice with {L.n} elements is not isomorphic to {fixture}")


def relabel(L: Lattice, labels: Sequence[str]) -> Lattice:
    """Same lattice with new labels."""
    return Lattice(tuple(labels), L.order, L.meet_table, L.join_table, L.bottom, L.top)
