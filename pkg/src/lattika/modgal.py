"""Finite Z_n-modules, Hom-modules and the trace Galois connection.

For modules M, N over R = Z_n with S = End_R(M), the connection runs from
the lattice of S-submodules of Hom_R(M, N) to the submodule lattice of N:

    alpha(Y) = M Y = sum of the images f(M), f in Y
    beta(X)  = Hom_R(M, X) = {f : f(M) is contained in X}

A homomorphism is stored as the tuple of images of the standard generators
of M (one per nontrivial cyclic factor), each image an element index of
the target carrier.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd, lcm
from itertools import product

from lattika import coclosure as cc
from lattika.abelian import (
    AbelianGroup,
    _closure_mask,
    _mask,
    _members,
    _canonical_order,
    enumerate_submodules,
    inclusion_lattice,
    max_size,
    parse_group_spec,
    subgroups,
)
from lattika.errors import PreconditionFailed, RingMismatch, SpecError, TooLarge
from lattika.galois import GaloisConnection, connect, galois_elements, main_correspondence
from lattika.galois import MonotoneMap, verify_supplemented_lifting_transfer
from lattika.hollow import hollow_dimension, verify_dimension_transfer
from lattika.lattice import Lattice
from lattika.verdict import Verdict

QUASI_PROJECTIVE_BOUND = 64


@dataclass(frozen=True, eq=False)
class FiniteModule:
    """A module over Z_n given by its cyclic decomposition."""

    ring_modulus: int
    carrier: AbelianGroup

    def __post_init__(self):
        n = int(self.ring_modulus)
        object.__setattr__(self, "ring_modulus", n)
        if n < 1:
            raise SpecError("ring modulus must be positive")
        for m in self.carrier.cyclic_orders:
            if n % m:
                raise RingMismatch(f"Z_{m} is not a module over Z_{n}")

    @classmethod
    def parse(cls, ring: int, spec: str) -> "FiniteModule":
        """``"2x4"`` for Z_2 + Z_4, ``"R"`` / ``"R2"`` / ``"R^2"`` for free modules."""
        s = str(spec).strip().replace("^", "")
        if s.upper().startswith("R"):
            k = int(s[1:] or 1)
            if k < 1:
                raise SpecError(f"bad free rank in {spec!r}")
            return cls.free(ring, k)
        return cls(ring, AbelianGroup(parse_group_spec(s)))

    @classmethod
    def free(cls, ring: int, rank: int = 1) -> "FiniteModule":
        return cls(ring, AbelianGroup((int(ring),) * rank))

    @property
    def is_free(self) -> bool:
        return all(m == self.ring_modulus for m in self.carrier.cyclic_orders)

    @property
    def is_zero(self) -> bool:
        return self.carrier.order == 1

    @property
    def order(self) -> int:
        return self.carrier.order

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """Indices of the factors with order > 1 (only these generate)."""
        return tuple(i for i, m in enumerate(self.carrier.cyclic_orders) if m > 1)

    @cached_property
    def gen_orders(self) -> tuple[int, ...]:
        return tuple(self.carrier.cyclic_orders[i] for i in self.generators)

    def spec(self) -> str:
        return f"Z_{self.ring_modulus}:{self.carrier.spec()}"

    def submodule_lattice(self):
        return subgroups(self.carrier)


def _element_order(g: AbelianGroup, i: int) -> int:
    x = g.decode(i)
    out = 1
    for v, n in zip(x, g.cyclic_orders):
        if v:
            out = lcm(out, n // gcd(v, n))
    return out


@dataclass(frozen=True, eq=False)
class HomModule:
    """All R-linear maps ``source -> target``, in lexicographic order of generator images."""

    source: FiniteModule
    target: FiniteModule
    maps: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.maps)

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {f: i for i, f in enumerate(self.maps)}

    def apply(self, f: tuple[int, ...], m: int) -> int:
        """Image of source element index ``m`` under ``f``."""
        src, tgt = self.source.carrier, self.target.carrier
        x = src.decode(m)
        acc = tgt.zero
        for coeff, img in zip((x[i] for i in self.source.generators), f):
            if coeff:
                acc = tgt.add(acc, tgt.scale(coeff, tgt.decode(img)))
        return tgt.encode(acc)

    def image_mask(self, f) -> int:
        return _closure_mask(self.target.carrier.add_index, f)

    @cached_property
    def add_table(self) -> list[list[int]]:
        add = self.target.carrier.add_index
        idx = self.index
        return [[idx[tuple(add[a][b] for a, b in zip(f, g))] for g in self.maps] for f in self.maps]

    def compose(self, f: tuple[int, ...], s: tuple[int, ...]) -> tuple[int, ...]:
        """``f o s`` for an endomorphism ``s`` of the source."""
        return tuple(self.apply(f, si) for si in s)

    @cached_property
    def endo_ring(self) -> "HomModule":
        return hom_module(self.source, self.source)

    def act(self, s, f):
        """Left action of S = End(M) on Hom(M, X): ``s . f = f o s``."""
        return self.compose(f, s)


def hom_module(M: FiniteModule, X: FiniteModule, max_elements: int | None = None) -> HomModule:
    """Enumerate Hom_R(M, X) through images of M's standard generators.

    A generator of order m may go to any x with ``m x = 0``.
    """
    if M.ring_modulus != X.ring_modulus:
        raise RingMismatch(f"modules over Z_{M.ring_modulus} and Z_{X.ring_modulus}")
    bound = max_size(max_elements)
    if M.order > bound or X.order > bound:
        raise TooLarge(f"module order exceeds the bound {bound}")
    g = X.carrier
    orders = [_element_order(g, i) for i in range(g.order)]
    choices = [[i for i in range(g.order) if m % orders[i] == 0] for m in M.gen_orders]
    count = 1
    for c in choices:
        count *= len(c)
    if count > bound:
        raise TooLarge(f"Hom-set has {count} maps, above the bound {bound}")
    return HomModule(M, X, tuple(product(*choices)))


def trace(M: FiniteModule, X: FiniteModule) -> frozenset[tuple[int, ...]]:
    """Submodule of X generated by the images of all maps M -> X."""
    hom = hom_module(M, X)
    seeds = {i for f in hom.maps for i in f}
    mask = _closure_mask(X.carrier.add_index, seeds)
    return frozenset(X.carrier.decode(i) for i in _members(mask))


def is_M_generated(M: FiniteModule, N: FiniteModule) -> bool:
    return len(trace(M, N)) == N.order


def is_quasi_projective(M: FiniteModule, max_elements: int = QUASI_PROJECTIVE_BOUND) -> bool:
    """Every map M -> M/K lifts along M -> M/K, checked for every submodule K."""
    if M.order > max_elements:
        raise TooLarge(f"quasi-projectivity check limited to |M| <= {max_elements}")
    g = M.carrier
    if g.order == 1:
        return True
    add = g.add_index
    end = hom_module(M, M, max_elements=max(max_elements, 10_000)).maps
    orders = M.gen_orders
    for K in subgroups(g).masks:
        ks = _members(K)
        rep = [min(add[x][k] for k in ks) for x in range(g.order)]
        reps = sorted(set(rep))
        # r is a valid generator image in M/K iff m * r lies in K
        targets = []
        for m in orders:
            ok = []
            for r in reps:
                acc = 0
                for _ in range(m):
                    acc = add[acc][r]
                if K >> acc & 1:
                    ok.append(r)
            targets.append(ok)
        wanted = 1
        for t in targets:
            wanted *= len(t)
        lifted = {tuple(rep[x] for x in s) for s in end}
        if len(lifted) != wanted:
            return False
    return True


@dataclass(frozen=True, eq=False)
class TraceConnection:
    M: FiniteModule
    N: FiniteModule
    hom: HomModule
    hom_masks: tuple[int, ...]
    n_masks: tuple[int, ...]
    connection: GaloisConnection

    @property
    def lattice_hom(self) -> Lattice:
        return self.connection.A

    @property
    def lattice_N(self) -> Lattice:
        return self.connection.B

    def hom_submodule(self, i: int) -> frozenset[tuple[int, ...]]:
        return frozenset(self.hom.maps[j] for j in _members(self.hom_masks[i]))

    def n_submodule(self, i: int) -> frozenset[tuple[int, ...]]:
        g = self.N.carrier
        return frozenset(g.decode(j) for j in _members(self.n_masks[i]))

    @cached_property
    def all_hom_galois(self) -> bool:
        return self.connection.all_domain_galois


def _s_submodules(hom: HomModule) -> list[int]:
    """All S-submodules of Hom(M, X) as bitmasks over map indices."""
    end = hom.endo_ring.maps
    idx = hom.index
    cyclic = [_mask(idx[hom.compose(f, s)] for s in end) for f in hom.maps]
    return enumerate_submodules(len(hom.maps), cyclic, hom.add_table)


def build_trace_connection(M: FiniteModule, N: FiniteModule, max_elements: int | None = None) -> TraceConnection:
    """Construct both submodule lattices and the connection between them.

    Preconditions (raising :class:`PreconditionFailed`): same ring, M and N
    nonzero, M quasi-projective (free modules skip the brute-force check),
    and N generated by M.
    """
    if M.ring_modulus != N.ring_modulus:
        raise RingMismatch(f"modules over Z_{M.ring_modulus} and Z_{N.ring_modulus}")
    if M.is_zero:
        raise PreconditionFailed("M is the zero module")
    if N.is_zero:
        raise PreconditionFailed("N is the zero module")
    if not M.is_free and not is_quasi_projective(M):
        raise PreconditionFailed("M is not quasi-projective")
    if not is_M_generated(M, N):
        raise PreconditionFailed("N is not M-generated")

    hom = hom_module(M, N, max_elements)
    n_sl = subgroups(N.carrier, max_elements)
    n_lat = n_sl.lattice
    g = N.carrier

    hom_masks = _canonical_order(_s_submodules(hom), lambda i: hom.maps[i])
    nmask_index = {m: i for i, m in enumerate(n_sl.masks)}

    alpha_vals = []
    for ym in hom_masks:
        seeds = {i for j in _members(ym) for i in hom.maps[j]}
        alpha_vals.append(nmask_index[_closure_mask(g.add_index, seeds)])

    hom_index = {m: i for i, m in enumerate(hom_masks)}
    beta_vals = []
    for xm in n_sl.masks:
        inside = [j for j, f in enumerate(hom.maps) if all(xm >> i & 1 for i in f)]
        beta_vals.append(hom_index[_mask(inside)])

    labels = _hom_labels(hom, hom_masks, alpha_vals, n_lat)
    hom_lat = inclusion_lattice(hom_masks, labels)
    gc = connect(
        MonotoneMap(hom_lat, n_lat, tuple(alpha_vals)),
        MonotoneMap(n_lat, hom_lat, tuple(beta_vals)),
        f"trace[{M.spec()} -> {N.spec()}]",
    )
    return TraceConnection(M, N, hom, tuple(hom_masks), tuple(n_sl.masks), gc)


def _hom_labels(hom, masks, alpha_vals, n_lat) -> list[str]:
    # Hom(M,X) names Y = Hom(M, MY); fall back to an index when that is ambiguous
    seen: dict[str, int] = {}
    out = []
    for i, a in enumerate(alpha_vals):
        base = f"Hom(M,{n_lat.label(a)})"
        if base in seen:
            base = f"{base}#{i}"
        seen[base] = i
        out.append(base)
    return out


@dataclass(frozen=True)
class TraceReport:
    trace_connection: TraceConnection
    verdicts: tuple[Verdict, ...]
    correspondence: object
    hdim_hom: int
    hdim_N: int
    coclosed_hom: int
    coclosed_N: int

    @property
    def passed(self) -> bool:
        return all(v.ok for v in self.verdicts) and self.correspondence.verified

    def to_json(self) -> dict:
        tc = self.trace_connection
        gc = tc.connection
        return {
            "ring": tc.M.ring_modulus,
            "M": tc.M.carrier.spec(),
            "N": tc.N.carrier.spec(),
            "hom_size": len(tc.hom),
            "endo_ring_size": len(tc.hom.endo_ring),
            "lattice_hom_size": tc.lattice_hom.n,
            "lattice_N_size": tc.lattice_N.n,
            "flags": gc.flags(),
            "hdim_hom": self.hdim_hom,
            "hdim_N": self.hdim_N,
            "coclosed_hom": self.coclosed_hom,
            "coclosed_N": self.coclosed_N,
            "verdicts": [v.to_json() for v in self.verdicts],
            "correspondence": self.correspondence.to_json(gc),
            "passed": self.passed,
        }


def verify_trace_connection(M: FiniteModule, N: FiniteModule, max_elements: int | None = None) -> TraceReport:
    """Run the dimension, supplemented/lifting and correspondence checks on the trace connection."""
    tc = build_trace_connection(M, N, max_elements)
    gc = tc.connection
    A, B = gc.A, gc.B
    verdicts = []

    verdicts.append(Verdict("hom-submodules-galois", gc.all_domain_galois))
    tr = _closure_mask(tc.N.carrier.add_index, {i for f in tc.hom.maps for i in f})
    verdicts.append(Verdict("alpha-full-is-trace", tc.n_masks[gc.alpha[A.top]] == tr))

    gb = galois_elements(gc, "codomain")
    add = tc.N.carrier.add_index
    gen_ok = True
    for x in B:
        xm = tc.n_masks[x]
        seeds = {i for f in tc.hom.maps if all(xm >> j & 1 for j in f) for i in f}
        if (_closure_mask(add, seeds) == xm) != (x in gb):
            gen_ok = False
    verdicts.append(Verdict("galois-iff-M-generated", gen_ok))

    verdicts.extend(verify_dimension_transfer(gc))
    verdicts.extend(verify_supplemented_lifting_transfer(gc))
    report = main_correspondence(gc, "auto")
    verdicts.append(Verdict("correspondence-condition", report.condition_used == "every-element-galois"))
    verdicts.append(
        Verdict("correspondence-restrictions", all(report.psi[b] == gc.beta[b] for b in report.psi))
    )
    return TraceReport(
        trace_connection=tc,
        verdicts=tuple(verdicts),
        correspondence=report,
        hdim_hom=hollow_dimension(A).dimension,
        hdim_N=hollow_dimension(B).dimension,
        coclosed_hom=len(cc.coclosed_set(A)),
        coclosed_N=len(cc.coclosed_set(B)),
    )
