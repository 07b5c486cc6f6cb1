import pytest

from lattika import coclosure as cc
from lattika import fixtures
from lattika import galois as gl
from lattika.corpus import lattices, pentagon
from lattika.errors import HypothesesNotMet, NotAdjoint, NotMonotone
from lattika.lattice import chain


def labels(L, xs):
    return L.names(xs)


def test_identity_connection_flags(corpus_lattices):
    for L in corpus_lattices.values():
        gc = gl.identity_connection(L)
        assert all(gc.flags().values())
        assert gl.galois_elements(gc, "domain") == frozenset(L)
        assert gl.galois_elements(gc, "codomain") == frozenset(L)


def test_example1_valid(ex1):
    assert gl.adjunction_failure(ex1.alpha, ex1.beta) is None
    assert labels(ex1.A, gl.galois_elements(ex1, "domain")) == ["H1", "H3", "H4", "G"]
    assert labels(ex1.B, gl.galois_elements(ex1, "codomain")) == ["0", "H2", "H3", "G"]
    assert gl.is_cosmall_connection(ex1)
    assert gl.is_ucc_cosmall(ex1)


def test_example1_swapped_not_adjoint(G):
    with pytest.raises(NotAdjoint) as exc:
        gl.from_label_tables(G, G, fixtures.EXAMPLE1_BETA, fixtures.EXAMPLE1_ALPHA)
    a, b = exc.value.pair
    assert isinstance(a, str) and isinstance(b, str)


def test_not_monotone(G):
    with pytest.raises(NotMonotone):
        gl.MonotoneMap.from_labels(G, G, {"H1": "G"})


def test_adjunction_equivalent_forms(ex1):
    A = ex1.A
    for a in A:
        assert A.leq(a, ex1.ba(a))
    for b in ex1.B:
        assert ex1.B.leq(ex1.ab(b), b)
    assert ex1.alpha[A.bottom] == ex1.B.bottom
    assert ex1.beta[ex1.B.top] == A.top


def test_adjoints_recover_each_other(ex1):
    assert gl.upper_adjoint(ex1.alpha).values == ex1.beta.values
    assert gl.lower_adjoint(ex1.beta).values == ex1.alpha.values


def test_galois_lemma_example1(ex1):
    assert all(v.holds for v in gl.verify_galois_lemma(ex1))


def test_example2(ex2):
    assert not gl.is_cosmall_connection(ex2)
    assert ex2.A.label(gl.cosmall_connection_witness(ex2)) == "H3"
    assert ex2.A.label(ex2.ba(ex2.A.index("H3"))) == "G"
    assert not ex2.beta_preserves_finite_suprema
    assert ex2.alpha_preserves_top


def test_example2_transfer_failure(ex2):
    first = gl.verify_transfer(ex2)[0]
    assert first.name == "codomain-cosmall-over-closure"
    assert not first.holds
    assert first.counterexample == {"b": "H2"}
    assert first.missing == (gl.BETA_SUPREMA,)
    assert not first.violated


def test_example2_galois_not_coclosed(ex2):
    gb = gl.galois_elements(ex2, "codomain")
    h4 = ex2.B.index("H4")
    assert h4 in gb and not cc.is_coclosed(ex2.B, h4)


def test_example1_transfer(ex1):
    vs = gl.verify_transfer(ex1)
    assert [v.name for v in vs] == [
        "codomain-cosmall-over-closure",
        "coclosed-codomain-galois",
        "domain-cosmall-transfer",
        "codomain-cosmall-transfer",
    ]
    assert all(v.holds and v.hypotheses_met for v in vs)
    i = ex1.B.index
    assert ex1.ab(i("H1")) == i("0")
    assert ex1.B.cosmall[i("0"), i("H1")]


def test_identity_transfer(G):
    assert all(v.holds for v in gl.verify_transfer(gl.identity_connection(G)))


def test_example3_literal_rejected():
    with pytest.raises(NotMonotone):
        fixtures.example3_literal()


def test_example3(ex3):
    P = ex3.A
    assert gl.is_cosmall_connection(ex3)
    assert not gl.is_ucc_cosmall(ex3)
    w = gl.ucc_witness(ex3)
    assert P.label(w) == "H1'"
    assert P.label(ex3.ba(w)) == "H4'"
    assert labels(P, cc.coclosures(P, ex3.ba(w))) == ["H1'", "H2'"]


def test_example3_agrees_with_printed_tables_where_monotone(ex3):
    # the repaired alpha differs from the printed one only at H2'
    P = ex3.A
    printed = gl.MonotoneMap.from_labels(P, P, {}).to_labels()
    printed.update(fixtures.EXAMPLE3_ALPHA_LITERAL)
    diff = {k for k, v in ex3.alpha.to_labels().items() if printed[k] != v}
    assert diff == {"H2'"}


def test_complement_correspondence_identity(G):
    rep = gl.complement_correspondence(gl.identity_connection(G))
    assert labels(G, rep.domain_set) == ["0", "H2", "H3", "G"]
    assert rep.bijection and rep.order_preserving and rep.alpha_preserves and rep.beta_preserves


def test_complement_correspondence_two_chain():
    L = chain(2)
    rep = gl.complement_correspondence(gl.identity_connection(L))
    assert rep.domain_set == rep.codomain_set == {0, 1}


def test_complement_correspondence_example1_fails(ex1):
    with pytest.raises(HypothesesNotMet) as exc:
        gl.complement_correspondence(ex1)
    assert gl.COMPLEMENTS_GALOIS in exc.value.missing


def test_complement_correspondence_non_injective_beta():
    # on a chain only the bounds are complements, so beta may collapse the rest
    L = chain(4)
    gc = gl.connection(L, L, [0, 2, 2, 3], [0, 0, 2, 3])
    assert not gc.beta_injective
    rep = gl.complement_correspondence(gc)
    assert rep.beta_preserves
    assert rep.alpha_preserves is None and rep.bijection is None


def test_main_correspondence_example1(ex1):
    rep = gl.main_correspondence(ex1, "auto")
    assert rep.condition_used == gl.CONDITION_AMPLY
    doc = rep.to_json(ex1)
    assert doc["phi"] == {"0": "0", "H2": "H3", "H3": "H2", "G": "G"}
    assert doc["psi"] == {"0": "0", "H2": "H3", "H3": "H2", "G": "G"}
    assert rep.mutually_inverse and rep.order_preserving and rep.sets_are_coclosed
    assert rep.verified


def test_main_correspondence_identity(G):
    gc = gl.identity_connection(G)
    rep = gl.main_correspondence(gc)
    assert rep.condition_used == gl.CONDITION_GALOIS
    assert rep.phi == {a: a for a in cc.coclosed_set(G)}
    assert rep.psi == rep.phi


def test_main_correspondence_thm_mode(ex1):
    rep = gl.main_correspondence(ex1, "thm-main")
    assert rep.condition_used == gl.CONDITION_RAW
    assert rep.mutually_inverse
    assert rep.set_A_unique == rep.set_A and rep.phi_unique_well_defined and rep.unique_form_consistent


def test_main_correspondence_needs_hypotheses(ex2, ex3):
    with pytest.raises(HypothesesNotMet):
        gl.main_correspondence(ex2)
    with pytest.raises(HypothesesNotMet):
        gl.main_correspondence(ex3, "thm-main")
    with pytest.raises(ValueError):
        gl.main_correspondence(gl.identity_connection(chain(2)), "other")


def test_remark(ex1):
    rep = gl.main_correspondence(ex1)
    assert len(rep.coclosed_galois_A) == 2 and len(rep.coclosed_galois_B) == 4
    assert not rep.coclosed_galois_bijection


def test_corollary_example1(ex1):
    chk = gl.corollary_equivalence(ex1)
    assert chk.pair == (False, False)
    assert chk.restriction_witness == "H3"
    assert chk.galois_witness == "H2"
    assert chk.equivalent


def test_corollary_identity(corpus_lattices):
    for name in ("SG", "chain3", "bool2", "M3"):
        gc = gl.identity_connection(corpus_lattices[name])
        assert gl.corollary_equivalence(gc).pair == (True, True)


def test_corollary_needs_ucc(ex3):
    with pytest.raises(HypothesesNotMet):
        gl.corollary_equivalence(ex3)


def test_supplemented_lifting_identity(Gp):
    vs = gl.verify_supplemented_lifting_transfer(gl.identity_connection(Gp))
    assert all(v.holds and v.hypotheses_met for v in vs)


def test_supplemented_lifting_two_chain():
    vs = gl.verify_supplemented_lifting_transfer(gl.identity_connection(chain(2)))
    assert all(v.ok for v in vs)


def test_supplemented_lifting_strict(ex1):
    with pytest.raises(HypothesesNotMet):
        gl.verify_supplemented_lifting_transfer(ex1)
    vs = gl.verify_supplemented_lifting_transfer(ex1, strict=False)
    assert all(not v.hypotheses_met for v in vs)


def test_beta_suprema_failure(ex2):
    a, b = gl.beta_suprema_failure(ex2)
    B = ex2.B
    assert ex2.beta[B.join(a, b)] != ex2.A.join(ex2.beta[a], ex2.beta[b])
    assert gl.beta_suprema_failure(gl.identity_connection(B)) is None


def test_connection_between_different_lattices():
    A, B = chain(3), chain(2)
    gc = gl.connection(A, B, [0, 0, 1], [1, 2])
    assert gc.alpha_preserves_top and gc.beta_injective
    assert gl.galois_elements(gc, "domain") == {1, 2}
    with pytest.raises(NotAdjoint):
        gl.connection(A, B, [0, 1, 1], [1, 2])


def test_non_modular_domain_reports_hypotheses():
    N5 = pentagon()
    gc = gl.identity_connection(N5)
    vs = gl.verify_supplemented_lifting_transfer(gc, strict=False)
    assert all(gl.DOMAIN_MODULAR in v.missing for v in vs)


def test_flags_json(ex1):
    f = ex1.flags()
    assert f == {
        "alpha_preserves_top": True,
        "beta_injective": False,
        "beta_preserves_finite_suprema": True,
        "cosmall": True,
        "every_domain_element_galois": False,
        "ucc_cosmall": True,
    }


def test_lattices_present(corpus_lattices):
    assert {"SG", "SGprime", "N5"} <= set(corpus_lattices)
    assert len(lattices()) >= 20
