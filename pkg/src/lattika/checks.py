"""Run every applicable theorem clause on a single connection.

``check_connection`` never raises on unmet hypotheses: each clause comes
back as a :class:`Verdict` with ``hypotheses_met`` set accordingly, so the
same routine drives both the property suite and the ablation experiments.
"""
from __future__ import annotations

from lattika import coclosure as cc
from lattika import galois as gl
from lattika.errors import CoclosureNotUnique, HypothesesNotMet
from lattika.hollow import verify_dimension_transfer
from lattika.verdict import Verdict


def _complement_verdict(gc) -> Verdict:
    try:
        rep = gl.complement_correspondence(gc)
    except HypothesesNotMet as exc:
        return Verdict("complement-correspondence", False, False, exc.missing)
    holds = rep.beta_preserves
    if rep.bijection is not None:
        holds = holds and rep.alpha_preserves and rep.bijection and rep.order_preserving
    return Verdict("complement-correspondence", bool(holds))


def _raw_correspondence_verdict(gc) -> Verdict:
    missing = gc.base_missing() + ([] if gc.ucc_cosmall else [gl.UCC_COSMALL])
    if missing:
        return Verdict("correspondence-unique-coclosure", False, False, tuple(missing))
    rep = gl.main_correspondence(gc, "thm-main")
    holds = rep.mutually_inverse and rep.unique_form_consistent
    if rep.order_preservation_required:
        holds = holds and rep.order_preserving
    return Verdict("correspondence-unique-coclosure", holds)


def _condition_correspondence_verdict(gc) -> Verdict:
    name = "correspondence-coclosed"
    missing = gc.base_missing()
    if not missing and not gc.all_domain_galois:
        missing = gl.amply_condition_missing(gc)
    if missing:
        return Verdict(name, False, False, tuple(missing))
    try:
        rep = gl.main_correspondence(gc, "auto")
    except CoclosureNotUnique as exc:
        return Verdict(name, False, counterexample={"b": exc.element})
    return Verdict(name, rep.verified, counterexample={"condition": rep.condition_used})


def _corollary_verdict(gc) -> Verdict:
    try:
        chk = gl.corollary_equivalence(gc)
    except HypothesesNotMet as exc:
        return Verdict("restriction-iff-coclosed-galois", False, False, exc.missing)
    ce = None if chk.equivalent else chk.to_json()
    return Verdict("restriction-iff-coclosed-galois", chk.equivalent, counterexample=ce)


def check_connection(gc: gl.GaloisConnection, lattice_lemmas: bool = False) -> list[Verdict]:
    """All clause verdicts for ``gc``; pass ``lattice_lemmas`` to include the single-lattice ones."""
    out = []
    if lattice_lemmas:
        out += [_prefixed("domain", v) for v in cc.verify_lemmas(gc.A)]
        out += [_prefixed("codomain", v) for v in cc.verify_lemmas(gc.B)]
    out += gl.verify_galois_lemma(gc)
    out += gl.verify_transfer(gc)
    out.append(_complement_verdict(gc))
    out += gl.verify_supplemented_lifting_transfer(gc, strict=False)
    out.append(_raw_correspondence_verdict(gc))
    out.append(_condition_correspondence_verdict(gc))
    out.append(_corollary_verdict(gc))
    out += verify_dimension_transfer(gc, strict=False)
    return out


def _prefixed(side, v: Verdict) -> Verdict:
    return Verdict(f"{side}:{v.name}", v.holds, v.hypotheses_met, v.missing, v.counterexample)


def violations(verdicts) -> list[Verdict]:
    return [v for v in verdicts if v.violated]
