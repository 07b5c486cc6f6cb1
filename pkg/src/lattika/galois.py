"""Monotone Galois connections between finite bounded lattices.

A connection ``(alpha, beta)`` from A to B satisfies
``alpha(a) <= b  <=>  a <= beta(b)``. This module validates connections,
classifies them (cosmall, UCC cosmall), checks the cosmall-transfer lemmas,
and builds the coclosed-element correspondences together with their
verification verdicts.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping

import numpy as np

from lattika import coclosure as cc
from lattika.errors import CoclosureNotUnique, GaloisError, HypothesesNotMet, NotAdjoint, NotMonotone
from lattika.lattice import Lattice, is_modular, pick_witness
from lattika.verdict import Verdict

# hypothesis names used in verdicts and HypothesesNotMet
ALPHA_TOP = "alpha(1)=1"
BETA_SUPREMA = "beta preserves finite suprema"
COSMALL = "cosmall connection"
UCC_COSMALL = "UCC cosmall connection"
ALL_GALOIS = "every element of the domain is Galois"
DOMAIN_MODULAR = "domain modular"
CODOMAIN_MODULAR = "codomain modular"
DOMAIN_AMPLY = "domain amply supplemented"
DOMAIN_UCC = "domain UCC"
COMPLEMENTS_GALOIS = "all domain complements are Galois"
BETA_INJECTIVE = "beta injective"


@dataclass(frozen=True, eq=False)
class MonotoneMap:
    domain: Lattice
    codomain: Lattice
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) != self.domain.n:
            raise GaloisError(f"map has {len(vals)} values for a domain of size {self.domain.n}")
        if any(not 0 <= v < self.codomain.n for v in vals):
            raise GaloisError("map value out of range")
        img = np.asarray(vals)
        bad = self.domain.order & ~self.codomain.order[img[:, None], img[None, :]]
        if bad.any():
            a, b = np.argwhere(bad)[0]
            raise NotMonotone((self.domain.label(a), self.domain.label(b)))

    def __call__(self, x: int) -> int:
        return self.values[x]

    def __getitem__(self, x: int) -> int:
        return self.values[x]

    @classmethod
    def from_labels(cls, domain, codomain, mapping: Mapping[str, str], default="identity"):
        """Build from a label table; unlisted elements map to the same label in the codomain."""
        vals = []
        for a in domain:
            lab = domain.label(a)
            if lab in mapping:
                vals.append(codomain.index(mapping[lab]))
            elif default == "identity":
                vals.append(codomain.index(lab))
            else:
                raise GaloisError(f"no image given for {lab!r}")
        return cls(domain, codomain, tuple(vals))

    def image(self) -> frozenset[int]:
        return frozenset(self.values)

    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    def to_labels(self) -> dict[str, str]:
        return {self.domain.label(a): self.codomain.label(v) for a, v in enumerate(self.values)}


@dataclass(frozen=True, eq=False)
class GaloisConnection:
    """A validated adjoint pair; build it with :func:`connect`."""

    alpha: MonotoneMap
    beta: MonotoneMap
    name: str = field(default="", compare=False)

    @property
    def A(self) -> Lattice:
        return self.alpha.domain

    @property
    def B(self) -> Lattice:
        return self.alpha.codomain

    def ba(self, a: int) -> int:
        return self.beta[self.alpha[a]]

    def ab(self, b: int) -> int:
        return self.alpha[self.beta[b]]

    @cached_property
    def alpha_preserves_top(self) -> bool:
        return self.alpha[self.A.top] == self.B.top

    @cached_property
    def beta_preserves_finite_suprema(self) -> bool:
        return beta_suprema_failure(self) is None

    @cached_property
    def beta_injective(self) -> bool:
        return self.beta.is_injective()

    @cached_property
    def all_domain_galois(self) -> bool:
        return all(self.ba(a) == a for a in self.A)

    @cached_property
    def cosmall(self) -> bool:
        return cosmall_connection_witness(self) is None

    @cached_property
    def ucc_cosmall(self) -> bool:
        return self.cosmall and ucc_witness(self) is None

    def flags(self) -> dict[str, bool]:
        return {
            "alpha_preserves_top": self.alpha_preserves_top,
            "beta_preserves_finite_suprema": self.beta_preserves_finite_suprema,
            "beta_injective": self.beta_injective,
            "every_domain_element_galois": self.all_domain_galois,
            "cosmall": self.cosmall,
            "ucc_cosmall": self.ucc_cosmall,
        }

    def base_missing(self) -> list[str]:
        out = []
        if not self.alpha_preserves_top:
            out.append(ALPHA_TOP)
        if not self.beta_preserves_finite_suprema:
            out.append(BETA_SUPREMA)
        return out


def adjunction_failure(alpha: MonotoneMap, beta: MonotoneMap) -> tuple[int, int] | None:
    A, B = alpha.domain, alpha.codomain
    av = np.asarray(alpha.values)
    bv = np.asarray(beta.values)
    lhs = B.order[av, :]  # alpha(a) <= b
    rhs = A.order[:, bv]  # a <= beta(b)
    bad = np.argwhere(lhs != rhs)
    if bad.size == 0:
        return None
    a, b = bad[0]
    return int(a), int(b)


def connect(alpha: MonotoneMap, beta: MonotoneMap, name: str = "") -> GaloisConnection:
    """Validate ``(alpha, beta)`` as a Galois connection from ``alpha.domain``.

    Raises :class:`NotAdjoint` with the first violating ``(a, b)`` pair.
    """
    if beta.domain is not alpha.codomain or beta.codomain is not alpha.domain:
        raise GaloisError("beta must map the codomain of alpha back to its domain")
    bad = adjunction_failure(alpha, beta)
    if bad is not None:
        a, b = bad
        raise NotAdjoint((alpha.domain.label(a), alpha.codomain.label(b)))
    return GaloisConnection(alpha, beta, name)


def connection(A: Lattice, B: Lattice, alpha_values, beta_values, name: str = "") -> GaloisConnection:
    return connect(MonotoneMap(A, B, tuple(alpha_values)), MonotoneMap(B, A, tuple(beta_values)), name)


def from_label_tables(A, B, alpha: Mapping[str, str], beta: Mapping[str, str], name="") -> GaloisConnection:
    """Connection from label tables in which unlisted elements are fixed."""
    return connect(MonotoneMap.from_labels(A, B, alpha), MonotoneMap.from_labels(B, A, beta), name)


def upper_adjoint(alpha: MonotoneMap) -> MonotoneMap:
    """``beta(b) = join{a : alpha(a) <= b}``; only an adjoint when alpha preserves joins."""
    A, B = alpha.domain, alpha.codomain
    av = np.asarray(alpha.values)
    vals = [A.join_all(np.flatnonzero(B.order[av, b]).tolist()) for b in B]
    return MonotoneMap(B, A, tuple(vals))


def lower_adjoint(beta: MonotoneMap) -> MonotoneMap:
    """``alpha(a) = meet{b : a <= beta(b)}``; only an adjoint when beta preserves meets."""
    B, A = beta.domain, beta.codomain
    bv = np.asarray(beta.values)
    vals = [B.meet_all(np.flatnonzero(A.order[a, bv]).tolist()) for a in A]
    return MonotoneMap(A, B, tuple(vals))


def identity_connection(L: Lattice) -> GaloisConnection:
    ident = MonotoneMap(L, L, tuple(range(L.n)))
    return connect(ident, ident, "identity")


def beta_suprema_failure(gc: GaloisConnection) -> tuple[int, int] | None:
    A, B = gc.A, gc.B
    bv = np.asarray(gc.beta.values)
    lhs = bv[B.join_table]
    rhs = A.join_table[bv[:, None], bv[None, :]]
    bad = np.argwhere(lhs != rhs)
    return None if bad.size == 0 else (int(bad[0][0]), int(bad[0][1]))


def galois_elements(gc: GaloisConnection, side: str = "domain") -> frozenset[int]:
    if side == "domain":
        return frozenset(a for a in gc.A if gc.ba(a) == a)
    if side == "codomain":
        return frozenset(b for b in gc.B if gc.ab(b) == b)
    raise ValueError(f"side must be 'domain' or 'codomain', not {side!r}")


def cosmall_connection_witness(gc: GaloisConnection) -> int | None:
    """An a in A whose closure ``beta(alpha(a))`` is not cosmall in [a, 1]."""
    cs = gc.A.cosmall
    return pick_witness(gc.A, [a for a in gc.A if not cs[a, gc.ba(a)]])


def is_cosmall_connection(gc: GaloisConnection) -> bool:
    return gc.cosmall


def ucc_witness(gc: GaloisConnection) -> int | None:
    """A coclosed a that is not the unique coclosure of ``beta(alpha(a))``."""
    A = gc.A
    bad = [a for a in cc.coclosed_set(A) if cc.coclosures(A, gc.ba(a)) != {a}]
    return pick_witness(A, bad)


def is_ucc_cosmall(gc: GaloisConnection) -> bool:
    return gc.ucc_cosmall


def _require(missing):
    if missing:
        raise HypothesesNotMet(missing)


def verify_galois_lemma(gc: GaloisConnection) -> list[Verdict]:
    """The standard adjunction facts, checked exhaustively."""
    A, B = gc.A, gc.B
    out = []
    bad = [a for a in A if gc.alpha[gc.beta[gc.alpha[a]]] != gc.alpha[a]]
    bad_b = [b for b in B if gc.beta[gc.alpha[gc.beta[b]]] != gc.beta[b]]
    ce = None
    if bad or bad_b:
        ce = {"a": A.names(bad)[:1], "b": B.names(bad_b)[:1]}
    out.append(Verdict("alpha-beta-alpha", not bad and not bad_b, counterexample=ce))

    av = np.asarray(gc.alpha.values)
    bv = np.asarray(gc.beta.values)
    joins_ok = np.array_equal(av[A.join_table], B.join_table[av[:, None], av[None, :]])
    meets_ok = np.array_equal(bv[B.meet_table], A.meet_table[bv[:, None], bv[None, :]])
    out.append(Verdict("alpha-preserves-joins", joins_ok and gc.alpha[A.bottom] == B.bottom))
    out.append(Verdict("beta-preserves-meets", meets_ok and gc.beta[B.top] == A.top))

    ga, gb = galois_elements(gc, "domain"), galois_elements(gc, "codomain")
    inverse = all(gc.alpha[a] in gb and gc.beta[gc.alpha[a]] == a for a in ga) and all(
        gc.beta[b] in ga and gc.alpha[gc.beta[b]] == b for b in gb
    )
    out.append(Verdict("galois-restrictions-inverse", inverse))
    return out


def verify_transfer(gc: GaloisConnection) -> list[Verdict]:
    """Cosmall-transfer clauses with their hypotheses reported, never raised."""
    A, B = gc.A, gc.B
    base = gc.base_missing()
    out = []

    bad = [b for b in B if not B.cosmall[gc.ab(b), b]]
    w = pick_witness(B, bad)
    out.append(Verdict.clause("codomain-cosmall-over-closure", w is None, base, B, w, key="b"))

    gb = galois_elements(gc, "codomain")
    w = pick_witness(B, cc.coclosed_set(B) - gb)
    out.append(Verdict.clause("coclosed-codomain-galois", w is None, base, B, w, key="b"))

    full = base + ([] if gc.cosmall else [COSMALL])
    ce = None
    for a in A:
        for a2 in A.up(a):
            if bool(A.cosmall[a, a2]) != bool(B.cosmall[gc.alpha[a], gc.alpha[a2]]):
                ce = {"a": A.label(a), "a_prime": A.label(a2)}
                break
        if ce:
            break
    out.append(Verdict("domain-cosmall-transfer", ce is None, not full, tuple(full), ce))

    ce = None
    for b in B:
        for b2 in B.up(b):
            if bool(B.cosmall[b, b2]) != bool(A.cosmall[gc.beta[b], gc.beta[b2]]):
                ce = {"b": B.label(b), "b_prime": B.label(b2)}
                break
        if ce:
            break
    out.append(Verdict("codomain-cosmall-transfer", ce is None, not full, tuple(full), ce))
    return out


@dataclass(frozen=True)
class ComplementCorrespondence:
    domain_set: frozenset[int]
    codomain_set: frozenset[int]
    beta_preserves: bool
    alpha_preserves: bool | None
    bijection: bool | None
    order_preserving: bool | None

    def to_json(self, gc: GaloisConnection) -> dict:
        return {
            "domain_complement_galois": gc.A.names(self.domain_set),
            "codomain_complement_galois": gc.B.names(self.codomain_set),
            "beta_preserves": self.beta_preserves,
            "alpha_preserves": self.alpha_preserves,
            "bijection": self.bijection,
            "order_preserving": self.order_preserving,
        }


def complement_correspondence(gc: GaloisConnection) -> ComplementCorrespondence:
    """Restrict alpha and beta to complement Galois elements.

    ``alpha_preserves`` and the bijection verdicts are only evaluated when
    beta is injective; otherwise they are ``None``.
    """
    A, B = gc.A, gc.B
    ga, gb = galois_elements(gc, "domain"), galois_elements(gc, "codomain")
    comp_a = cc.complement_set(A)
    missing = gc.base_missing()
    if not comp_a <= ga:
        missing.append(COMPLEMENTS_GALOIS)
    _require(missing)

    dom = comp_a & ga
    cod = cc.complement_set(B) & gb
    beta_ok = all(gc.beta[b] in dom for b in cod)
    if not gc.beta_injective:
        return ComplementCorrespondence(dom, cod, beta_ok, None, None, None)
    alpha_ok = all(gc.alpha[a] in cod for a in dom)
    inverse = (
        alpha_ok
        and beta_ok
        and all(gc.beta[gc.alpha[a]] == a for a in dom)
        and all(gc.alpha[gc.beta[b]] == b for b in cod)
    )
    mono = _order_preserving(A, B, dom, gc.alpha.values) and _order_preserving(B, A, cod, gc.beta.values)
    return ComplementCorrespondence(dom, cod, beta_ok, alpha_ok, inverse, mono)


def _order_preserving(X, Y, dom, f) -> bool:
    dom = sorted(dom)
    return all(Y.leq(f[x], f[y]) for x in dom for y in dom if X.leq(x, y))


CONDITION_GALOIS = "every-element-galois"
CONDITION_AMPLY = "amply-supplemented-modular-ucc-cosmall"
CONDITION_RAW = "raw-thm-main"


@dataclass(frozen=True)
class CorrespondenceReport:
    """Coclosed-element correspondence between the two lattices.

    ``set_A`` holds the coclosed a with alpha(a) coclosed; ``set_B`` the
    coclosed b whose image beta(b) has a unique coclosure. ``phi`` is alpha
    restricted to ``set_A`` and ``psi`` sends b to the unique coclosure of
    beta(b). ``set_A_unique`` is the alternative domain set (coclosed a with
    alpha(a) having a unique coclosure) used by the coclosure-valued phi.
    """

    condition_used: str
    set_A: frozenset[int]
    set_B: frozenset[int]
    phi: dict[int, int]
    psi: dict[int, int]
    mutually_inverse: bool
    order_preserving: bool
    order_preservation_required: bool
    sets_are_coclosed: bool
    set_A_unique: frozenset[int]
    phi_unique_well_defined: bool
    unique_form_consistent: bool
    coclosed_galois_A: frozenset[int]
    coclosed_galois_B: frozenset[int]
    coclosed_galois_bijection: bool

    @property
    def verified(self) -> bool:
        ok = self.mutually_inverse and self.unique_form_consistent
        if self.order_preservation_required:
            ok = ok and self.order_preserving
        if self.condition_used != CONDITION_RAW:
            ok = ok and self.sets_are_coclosed
        return ok

    def to_json(self, gc: GaloisConnection) -> dict:
        A, B = gc.A, gc.B
        return {
            "condition_used": self.condition_used,
            "set_A": A.names(self.set_A),
            "set_B": B.names(self.set_B),
            "phi": {A.label(a): B.label(b) for a, b in sorted(self.phi.items())},
            "psi": {B.label(b): A.label(a) for b, a in sorted(self.psi.items())},
            "mutually_inverse": self.mutually_inverse,
            "order_preserving": self.order_preserving,
            "order_preservation_required": self.order_preservation_required,
            "sets_are_coclosed": self.sets_are_coclosed,
            "set_A_unique": A.names(self.set_A_unique),
            "phi_unique_well_defined": self.phi_unique_well_defined,
            "unique_form_consistent": self.unique_form_consistent,
            "coclosed_galois_A": A.names(self.coclosed_galois_A),
            "coclosed_galois_B": B.names(self.coclosed_galois_B),
            "coclosed_galois_bijection": self.coclosed_galois_bijection,
            "verified": self.verified,
        }


def amply_condition_missing(gc: GaloisConnection) -> list[str]:
    missing = []
    if not cc.is_amply_supplemented(gc.A):
        missing.append(DOMAIN_AMPLY)
    if not is_modular(gc.A):
        missing.append(DOMAIN_MODULAR)
    if not gc.ucc_cosmall:
        missing.append(UCC_COSMALL)
    return missing


def main_correspondence(gc: GaloisConnection, mode: str = "auto") -> CorrespondenceReport:
    """Build and verify the coclosed-element correspondence.

    ``mode="thm-main"`` needs a UCC cosmall connection and uses the sets as
    defined. ``mode="auto"`` first tries "every domain element is Galois",
    then "domain amply supplemented modular and UCC cosmall"; in both cases
    the sets must be exactly the coclosed elements of A and B.
    """
    A, B = gc.A, gc.B
    missing = gc.base_missing()
    if mode == "thm-main":
        if not gc.ucc_cosmall:
            missing.append(UCC_COSMALL)
        _require(missing)
        condition = CONDITION_RAW
    elif mode == "auto":
        _require(missing)
        if gc.all_domain_galois:
            condition = CONDITION_GALOIS
        else:
            _require(amply_condition_missing(gc))
            condition = CONDITION_AMPLY
    else:
        raise ValueError(f"unknown mode {mode!r}")

    coc_a, coc_b = cc.coclosed_set(A), cc.coclosed_set(B)
    cl_a, cl_b = cc.coclosure_map(A), cc.coclosure_map(B)

    set_A = frozenset(a for a in coc_a if gc.alpha[a] in coc_b)
    set_B = frozenset(b for b in coc_b if len(cl_a[gc.beta[b]]) == 1)
    if condition != CONDITION_RAW and set_B != coc_b:
        b = min(coc_b - set_B)
        raise CoclosureNotUnique(B.label(b), A.names(cl_a[gc.beta[b]]))

    phi = {a: gc.alpha[a] for a in sorted(set_A)}
    psi = {b: next(iter(cl_a[gc.beta[b]])) for b in sorted(set_B)}
    inverse = (
        all(phi[a] in psi and psi[phi[a]] == a for a in phi)
        and all(psi[b] in phi and phi[psi[b]] == b for b in psi)
    )
    mono = _order_preserving(A, B, set_A, phi) and _order_preserving(B, A, set_B, psi)
    required = gc.all_domain_galois or (
        cc.is_amply_supplemented(A) and is_modular(A) and cc.is_ucc(A) and gc.cosmall
    )

    set_A_unique = frozenset(a for a in coc_a if len(cl_b[gc.alpha[a]]) == 1)
    phi_u_ok = all(next(iter(cl_b[gc.alpha[a]])) in set_B for a in set_A_unique)
    consistent = phi_u_ok == (set_A_unique == set_A)

    ga, gb = galois_elements(gc, "domain"), galois_elements(gc, "codomain")
    cg_a, cg_b = coc_a & ga, coc_b & gb
    cg_bij = len(cg_a) == len(cg_b) and {gc.alpha[a] for a in cg_a} == set(cg_b)

    return CorrespondenceReport(
        condition_used=condition,
        set_A=set_A,
        set_B=set_B,
        phi=phi,
        psi=psi,
        mutually_inverse=inverse,
        order_preserving=mono,
        order_preservation_required=required,
        sets_are_coclosed=set_A == coc_a and set_B == coc_b,
        set_A_unique=set_A_unique,
        phi_unique_well_defined=phi_u_ok,
        unique_form_consistent=consistent,
        coclosed_galois_A=cg_a,
        coclosed_galois_B=cg_b,
        coclosed_galois_bijection=cg_bij,
    )


@dataclass(frozen=True)
class CorollaryCheck:
    """Both sides of the restriction criterion, evaluated independently.

    ``maps_are_restrictions``: psi(b) equals beta(b) on every coclosed b.
    ``coclosed_are_galois``: every coclosed element of A is Galois.
    """

    maps_are_restrictions: bool
    coclosed_are_galois: bool
    restriction_witness: str | None
    galois_witness: str | None

    @property
    def pair(self) -> tuple[bool, bool]:
        return self.maps_are_restrictions, self.coclosed_are_galois

    @property
    def equivalent(self) -> bool:
        return self.maps_are_restrictions == self.coclosed_are_galois

    def to_json(self) -> dict:
        return {
            "maps_are_restrictions": self.maps_are_restrictions,
            "coclosed_are_galois": self.coclosed_are_galois,
            "restriction_witness": self.restriction_witness,
            "galois_witness": self.galois_witness,
            "equivalent": self.equivalent,
        }


def corollary_equivalence(gc: GaloisConnection) -> CorollaryCheck:
    A, B = gc.A, gc.B
    missing = gc.base_missing() + amply_condition_missing(gc)
    _require(missing)
    report = main_correspondence(gc, "thm-main")
    coc_b = cc.coclosed_set(B)
    bad_r = [b for b in coc_b if report.psi.get(b) != gc.beta[b]]
    bad_r += [a for a in report.phi if report.phi[a] != gc.alpha[a]]
    ga = galois_elements(gc, "domain")
    bad_g = cc.coclosed_set(A) - ga
    wr = pick_witness(B, bad_r)
    wg = pick_witness(A, bad_g)
    return CorollaryCheck(
        maps_are_restrictions=not bad_r,
        coclosed_are_galois=not bad_g,
        restriction_witness=None if wr is None else B.label(wr),
        galois_witness=None if wg is None else A.label(wg),
    )


def verify_supplemented_lifting_transfer(gc: GaloisConnection, strict: bool = True) -> list[Verdict]:
    A, B = gc.A, gc.B
    missing = gc.base_missing()
    if not is_modular(A):
        missing.append(DOMAIN_MODULAR)
    if not is_modular(B):
        missing.append(CODOMAIN_MODULAR)
    if not gc.all_domain_galois:
        missing.append(ALL_GALOIS)
    if strict:
        _require(missing)
    ca, cb = cc.classify(A), cc.classify(B)
    m = tuple(missing)
    out = [
        Verdict("supplemented-iff", ca.supplemented == cb.supplemented, not m, m),
        Verdict("lifting-codomain-to-domain", (not cb.lifting) or ca.lifting, not m, m),
    ]
    m2 = m + (() if gc.beta_injective else (BETA_INJECTIVE,))
    out.append(Verdict("lifting-domain-to-codomain", (not ca.lifting) or cb.lifting, not m2, m2))
    return out
