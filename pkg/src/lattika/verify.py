"""The golden suite: every worked example checked clause by clause.

``golden_suite()`` returns plain dictionaries with label-valued expected and
actual results, so the JSON rendering is stable across runs.
"""
from __future__ import annotations

from lattika import coclosure as cc
from lattika import fixtures
from lattika import galois as gl
from lattika.abelian import AbelianGroup, check_fixture_facts, match_fixture, relabel, subgroups
from lattika.errors import LattikaError, NoIsomorphism
from lattika.hollow import hollow_dimension
from lattika.lattice import chain, interval
from lattika.modgal import FiniteModule, verify_trace_connection

TRACE_CASES = [(4, "R", "2x4"), (6, "R", "6"), (4, "R2", "2x4")]


class _Suite:
    def __init__(self):
        self.rows = []

    def check(self, group, clause, expected, actual):
        self.rows.append(
            {"group": group, "clause": clause, "expected": expected, "actual": actual, "pass": expected == actual}
        )


def _raises(fn, *args):
    try:
        fn(*args)
    except LattikaError as exc:
        return type(exc).__name__
    return None


def _fixture_checks(s: _Suite):
    for spec, name in (("3x4", "SG"), ("2x4", "SGprime")):
        group = f"subgroups {spec}"
        sl = subgroups(AbelianGroup.parse(spec))
        target = fixtures.FIXTURES[name]()
        s.check(group, "subgroup count", target.n, sl.lattice.n)
        try:
            mapping = match_fixture(sl, name)
        except NoIsomorphism:
            s.check(group, f"isomorphic to {name}", True, False)
            continue
        s.check(group, f"isomorphic to {name}", True, True)
        L = relabel(sl.lattice, [mapping[i] for i in sl.lattice])
        for fact, ok in check_fixture_facts(L, name):
            s.check(group, fact, True, ok)
    s.check("subgroups 2x2", "not isomorphic to SGprime", "NoIsomorphism",
            _raises(match_fixture, subgroups(AbelianGroup.parse("2x2")), "SGprime"))

    G = fixtures.SG()
    cls = cc.classify(G)
    s.check("S(G)", "coclosed set", ["0", "H2", "H3", "G"], G.names(cls.coclosed_set))
    s.check("S(G)", "ucc", True, cls.ucc)
    s.check("S(G)", "lifting", True, cls.lifting)
    s.check("S(G)", "interval [H2,G]", ["H2", "H4", "G"], G.names(interval(G, G.index("H2"), G.top).members))
    s.check("S(G)", "H2 cosmall in [0,G]", False, cc.is_cosmall(G, G.bottom, G.index("H2")))
    P = fixtures.SGprime()
    cls = cc.classify(P)
    s.check("S(G')", "coclosed set", ["0'", "H1'", "H2'", "H5'", "H6'", "G'"], P.names(cls.coclosed_set))
    s.check("S(G')", "ucc", False, cls.ucc)
    s.check("S(G')", "H4' ^ H5'", "H3'", P.label(P.meet(P.index("H4'"), P.index("H5'"))))


def _example1_checks(s: _Suite):
    gc = fixtures.example1()
    A, B = gc.A, gc.B
    g = "example 1"
    s.check(g, "adjoint pair", True, gl.adjunction_failure(gc.alpha, gc.beta) is None)
    swapped = (fixtures.EXAMPLE1_BETA, fixtures.EXAMPLE1_ALPHA)
    s.check(g, "swapped maps rejected", "NotAdjoint", _raises(gl.from_label_tables, A, B, *swapped))
    s.check(g, "domain Galois elements", ["H1", "H3", "H4", "G"], A.names(gl.galois_elements(gc, "domain")))
    s.check(g, "codomain Galois elements", ["0", "H2", "H3", "G"], B.names(gl.galois_elements(gc, "codomain")))
    s.check(g, "cosmall connection", True, gl.is_cosmall_connection(gc))
    s.check(g, "UCC cosmall connection", True, gl.is_ucc_cosmall(gc))
    for v in gl.verify_transfer(gc):
        s.check(g, f"transfer {v.name}", True, v.holds and v.hypotheses_met)
    rep = gl.main_correspondence(gc, "auto")
    s.check(g, "correspondence condition", gl.CONDITION_AMPLY, rep.condition_used)
    s.check(g, "phi", {"0": "0", "H2": "H3", "H3": "H2", "G": "G"}, rep.to_json(gc)["phi"])
    s.check(g, "psi", {"0": "0", "H2": "H3", "H3": "H2", "G": "G"}, rep.to_json(gc)["psi"])
    s.check(g, "mutually inverse", True, rep.mutually_inverse)
    s.check(g, "order preserving", True, rep.order_preserving)
    s.check(g, "complement correspondence", "HypothesesNotMet", _raises(gl.complement_correspondence, gc))


def _example2_checks(s: _Suite):
    gc = fixtures.example2()
    B = gc.B
    g = "example 2"
    s.check(g, "cosmall connection", False, gl.is_cosmall_connection(gc))
    w = gl.cosmall_connection_witness(gc)
    s.check(g, "cosmall witness", "H3", None if w is None else gc.A.label(w))
    s.check(g, "beta(alpha(H3))", "G", gc.A.label(gc.ba(gc.A.index("H3"))))
    first = gl.verify_transfer(gc)[0]
    s.check(g, "b cosmall in [alpha beta(b),1] fails", "H2", (first.counterexample or {}).get("b"))
    s.check(g, "hypothesis missing", [gl.BETA_SUPREMA], list(first.missing))
    gb = gl.galois_elements(gc, "codomain")
    h4 = B.index("H4")
    s.check(g, "H4 Galois in codomain", True, h4 in gb)
    s.check(g, "H4 coclosed", False, cc.is_coclosed(B, h4))


def _example3_checks(s: _Suite):
    g = "example 3"
    s.check(g, "tables as printed rejected", "NotMonotone", _raises(fixtures.example3_literal))
    gc = fixtures.example3()
    A = gc.A
    s.check(g, "adjoint pair", True, gl.adjunction_failure(gc.alpha, gc.beta) is None)
    s.check(g, "cosmall connection", True, gl.is_cosmall_connection(gc))
    s.check(g, "UCC cosmall connection", False, gl.is_ucc_cosmall(gc))
    w = gl.ucc_witness(gc)
    s.check(g, "UCC witness", "H1'", None if w is None else A.label(w))
    if w is not None:
        s.check(g, "coclosures of beta alpha(H1')", ["H1'", "H2'"], A.names(cc.coclosures(A, gc.ba(w))))


def _remark_checks(s: _Suite):
    gc = fixtures.example1()
    g = "remark"
    rep = gl.main_correspondence(gc, "auto")
    s.check(g, "coclosed Galois in domain", 2, len(rep.coclosed_galois_A))
    s.check(g, "coclosed Galois in codomain", 4, len(rep.coclosed_galois_B))
    s.check(g, "bijection between coclosed Galois sets", False, rep.coclosed_galois_bijection)
    chk = gl.corollary_equivalence(gc)
    s.check(g, "corollary pair", [False, False], list(chk.pair))
    s.check(g, "restriction witness", "H3", chk.restriction_witness)
    s.check(g, "beta(H3)", "H4", gc.A.label(gc.beta[gc.B.index("H3")]))
    s.check(g, "H4 coclosed", False, cc.is_coclosed(gc.A, gc.A.index("H4")))
    s.check(g, "Galois witness", "H2", chk.galois_witness)


def _hollow_checks(s: _Suite):
    s.check("hollow", "hdim S(G)", 2, hollow_dimension(fixtures.SG()).dimension)
    s.check("hollow", "hdim S(G')", 2, hollow_dimension(fixtures.SGprime()).dimension)
    for k in (2, 3, 5):
        s.check("hollow", f"hdim chain of {k}", 1, hollow_dimension(chain(k)).dimension)


def _trace_checks(s: _Suite):
    for ring, m, n in TRACE_CASES:
        g = f"trace Z{ring} M={m} N={n}"
        rep = verify_trace_connection(FiniteModule.parse(ring, m), FiniteModule.parse(ring, n))
        for v in rep.verdicts:
            s.check(g, v.name, True, v.ok)
        s.check(g, "correspondence verified", True, rep.correspondence.verified)
        s.check(g, "hdim equal", rep.hdim_N, rep.hdim_hom)
        s.check(g, "coclosed counts equal", rep.coclosed_N, rep.coclosed_hom)
        if (ring, m, n) == (4, "R", "2x4"):
            s.check(g, "coclosed submodules of N", 6, rep.coclosed_N)


def golden_suite() -> list[dict]:
    s = _Suite()
    _fixture_checks(s)
    _example1_checks(s)
    _example2_checks(s)
    _example3_checks(s)
    _remark_checks(s)
    _hollow_checks(s)
    _trace_checks(s)
    return s.rows


def summary(rows) -> dict:
    failed = [r for r in rows if not r["pass"]]
    return {"clauses": rows, "total": len(rows), "failed": len(failed), "ok": not failed}
