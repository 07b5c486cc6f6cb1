import pytest

from lattika import coclosure as cc
from lattika.corpus import lattices, modular_lattices, pentagon
from lattika.errors import NotComparable
from lattika.lattice import chain, is_modular

CORPUS = sorted(lattices().items())


def names(L, xs):
    return L.names(xs)


def test_cosmall_examples(G):
    i = G.index
    assert cc.is_cosmall(G, i("0"), i("H1"))
    assert cc.is_cosmall(G, i("H2"), i("H4"))
    assert not cc.is_cosmall(G, i("0"), i("H2"))
    assert G.label(cc.cosmall_witness(G, i("0"), i("H2"))) == "H3"
    assert cc.cosmall_witness(G, i("0"), i("H1")) is None


def test_cosmall_reflexive(corpus_lattices):
    for L in corpus_lattices.values():
        assert all(cc.is_cosmall(L, a, a) for a in L)


def test_cosmall_needs_comparable(G):
    with pytest.raises(NotComparable):
        cc.is_cosmall(G, G.index("H2"), G.index("H3"))


@pytest.mark.parametrize("name,L", CORPUS)
def test_cosmall_matrix_matches_definition(name, L):
    for a in L:
        for a2 in L.up(a):
            direct = all(L.join(a, x) == L.top for x in L if L.join(a2, x) == L.top)
            assert bool(L.cosmall[a, a2]) == direct


def test_small_elements(G):
    assert cc.is_small(G, G.index("H1"))
    assert not cc.is_small(G, G.index("H2"))


def test_coclosed_sets(G, Gp):
    assert names(G, cc.coclosed_set(G)) == ["0", "H2", "H3", "G"]
    assert names(Gp, cc.coclosed_set(Gp)) == ["0'", "H1'", "H2'", "H5'", "H6'", "G'"]


def test_bottom_always_coclosed(corpus_lattices):
    for L in corpus_lattices.values():
        assert cc.is_coclosed(L, L.bottom)


def test_coclosures(G, Gp):
    assert names(G, cc.coclosures(G, G.index("H4"))) == ["H2"]
    assert names(G, cc.coclosures(G, G.index("H1"))) == ["0"]
    assert names(Gp, cc.coclosures(Gp, Gp.index("H4'"))) == ["H1'", "H2'"]
    assert names(Gp, cc.coclosures(Gp, Gp.index("H3'"))) == ["0'"]
    assert cc.unique_coclosure(Gp, Gp.index("H4'")) is None
    assert G.label(cc.unique_coclosure(G, G.index("H4"))) == "H2"


def test_coclosed_is_own_coclosure(corpus_lattices):
    for L in corpus_lattices.values():
        for a in cc.coclosed_set(L):
            assert a in cc.coclosures(L, a)


def test_complements(G):
    i = G.index
    assert cc.is_complement(G, i("H2"))
    assert G.label(cc.complement_witness(G, i("H2"))) == "H3"
    assert not cc.is_complement(G, i("H1"))
    assert cc.complement_witness(G, i("H1")) is None
    assert G.top in cc.complements(G, G.bottom) and G.bottom in cc.complements(G, G.top)
    assert names(G, cc.complement_set(G)) == ["0", "H2", "H3", "G"]


def test_supplements(G):
    i = G.index
    assert cc.is_supplement_of(G, G.top, G.bottom)
    assert cc.is_supplement_of(G, i("H3"), i("H2"))
    assert not cc.is_supplement_of(G, i("H4"), i("H2"))
    assert not cc.is_supplement_of(G, i("H4"), i("H3"))
    assert G.label(cc.supplement_failure(G, i("H4"), i("H3"))) == "H2"
    assert cc.is_supplement(G, i("H3"))


def test_classify_sg(G):
    c = cc.classify(G)
    assert (c.modular, c.supplemented, c.amply_supplemented, c.ucc, c.lifting) == (True,) * 5
    assert all(len(v) == 1 for v in c.coclosure_map.values())


def test_classify_sgprime(Gp):
    c = cc.classify(Gp)
    assert c.ucc is False
    assert c.supplemented and c.amply_supplemented and c.lifting


def test_classify_two_chain():
    c = cc.classify(chain(2))
    assert c.supplemented and c.amply_supplemented and c.ucc and c.lifting


def test_classify_json_is_label_keyed(Gp):
    doc = cc.classify(Gp).to_json(Gp)
    assert doc["coclosures"]["H4'"] == ["H1'", "H2'"]
    assert doc["ucc"] is False


def test_three_chain():
    c = cc.classify(chain(3))
    assert c.supplemented
    assert c.coclosed_set == {0, 2}
    assert c.amply_supplemented and c.lifting


@pytest.mark.parametrize("name,L", CORPUS)
def test_classifier_invariants(name, L):
    c = cc.classify(L)
    assert c.ucc == all(len(v) == 1 for v in c.coclosure_map.values())
    if c.modular:
        assert (not c.lifting) or c.amply_supplemented
        assert (not c.amply_supplemented) or c.supplemented


@pytest.mark.parametrize("name,L", sorted(modular_lattices().items()))
def test_lemmas_hold_on_modular_corpus(name, L):
    for v in cc.verify_lemmas(L):
        assert v.ok, (name, v)
        if v.name in ("cosmall-transitivity", "complements-coclosed", "supplements-coclosed"):
            assert v.hypotheses_met


def test_lemmas_gated_on_pentagon():
    N5 = pentagon()
    assert not is_modular(N5)
    vs = {v.name: v for v in cc.verify_lemmas(N5)}
    assert vs["cosmall-transitivity"].hypotheses_met
    assert not vs["complements-coclosed"].hypotheses_met
    assert vs["complements-coclosed"].missing == ("modular",)


def test_pentagon_complement_not_coclosed():
    # without modularity a complement need not be coclosed
    N5 = pentagon()
    i = N5.index
    assert cc.is_complement(N5, i("b"))
    assert not cc.is_coclosed(N5, i("b"))
