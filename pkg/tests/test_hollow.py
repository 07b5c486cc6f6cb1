from itertools import permutations

import pytest

from lattika import fixtures
from lattika import galois as gl
from lattika.corpus import lattices, modular_lattices, pentagon
from lattika.errors import ContainsTop, HypothesesNotMet, NotModular
from lattika.hollow import (
    hollow_dimension,
    independent_sets,
    is_meet_independent,
    is_meet_independent_chain_form,
    verify_dimension_transfer,
)
from lattika.lattice import chain

from oracles import hollow_dimension_naive, independence_table, subsets

SMALL = sorted((k, L) for k, L in lattices().items() if L.n <= 10)
MODULAR = sorted(modular_lattices().items())


def test_singletons(corpus_lattices):
    for L in corpus_lattices.values():
        assert is_meet_independent(L, [])
        assert all(is_meet_independent(L, [y]) for y in L if y != L.top)


def test_contains_top(Gp):
    with pytest.raises(ContainsTop):
        is_meet_independent(Gp, [Gp.top])
    with pytest.raises(ContainsTop):
        is_meet_independent_chain_form(Gp, [Gp.bottom, Gp.top])


def test_sgprime_examples(Gp):
    i = Gp.index
    assert is_meet_independent(Gp, [i("H5'"), i("H6'")])
    assert not is_meet_independent(Gp, [i("H4'"), i("H5'"), i("H6'")])
    assert is_meet_independent_chain_form(Gp, [i("H5'"), i("H6'")])
    assert is_meet_independent_chain_form(Gp, [i("H6'"), i("H5'")])


@pytest.mark.parametrize("name,L", SMALL)
def test_independence_matches_oracle(name, L):
    for Y, expected in independence_table(L).items():
        assert is_meet_independent(L, Y) == expected, (name, L.names(Y))


@pytest.mark.parametrize("name,L", MODULAR)
def test_chain_form_any_order_on_modular(name, L):
    proper = [x for x in L if x != L.top]
    for Y in subsets(proper, 1):
        if len(Y) > 4:
            break
        full = is_meet_independent(L, Y)
        for order in permutations(Y):
            assert is_meet_independent_chain_form(L, order) == full, (name, L.names(order))


def test_chain_form_rejects_repeats(G):
    assert not is_meet_independent_chain_form(G, [1, 1])


@pytest.mark.parametrize("name,L", SMALL)
def test_pruning_sound(name, L):
    table = independence_table(L)
    for Y, ok in table.items():
        if ok:
            assert all(table[S] for S in subsets(Y))


@pytest.mark.parametrize("name,L", SMALL)
def test_levels_complete(name, L):
    found = {s for level in independent_sets(L) for s in level}
    expected = {Y for Y, ok in independence_table(L).items() if ok}
    assert found == expected


def test_chains_have_dimension_one():
    for k in range(2, 8):
        rep = hollow_dimension(chain(k))
        assert rep.dimension == 1
        assert rep.witness == (0,)


def test_fixture_dimensions(G, Gp):
    rep = hollow_dimension(G)
    assert rep.dimension == 2
    assert G.names(rep.witness) == ["H2", "H3"]
    assert is_meet_independent(G, rep.witness)
    assert hollow_dimension(Gp).dimension == 2


@pytest.mark.parametrize("name,L", [(k, L) for k, L in MODULAR if L.n <= 10])
def test_dimension_matches_oracle(name, L):
    rep = hollow_dimension(L)
    assert rep.dimension == hollow_dimension_naive(L)
    assert len(rep.witness) == rep.dimension


def test_cosmall_meet_witness(Gp):
    rep = hollow_dimension(Gp)
    meet = Gp.meet_all(rep.cosmall_meet_witness)
    assert Gp.cosmall[Gp.bottom, meet]


def test_boolean_dimension(corpus_lattices):
    assert hollow_dimension(corpus_lattices["bool3"]).dimension == 3
    assert hollow_dimension(corpus_lattices["M4"]).dimension == 2


def test_not_modular():
    with pytest.raises(NotModular):
        hollow_dimension(pentagon())


def test_required_hypotheses(ex2):
    with pytest.raises(HypothesesNotMet):
        verify_dimension_transfer(ex2)
    vs = verify_dimension_transfer(ex2, strict=False)
    assert all(not v.hypotheses_met for v in vs)


def test_transfer_identity(G):
    vs = verify_dimension_transfer(gl.identity_connection(G))
    assert all(v.holds and v.hypotheses_met for v in vs)
    assert vs[1].counterexample == {"hdim_domain": 2, "hdim_codomain": 2}


def test_transfer_example1(ex1):
    vs = {v.name: v for v in verify_dimension_transfer(ex1)}
    assert vs["hdim-inequality"].holds
    assert vs["hdim-inequality"].counterexample == {"hdim_domain": 2, "hdim_codomain": 2}
    assert not vs["hdim-equality"].hypotheses_met
    assert vs["independent-image"].holds


def test_report_json(Gp):
    doc = hollow_dimension(Gp).to_json(Gp)
    assert doc["dimension"] == 2 and len(doc["witness"]) == 2
    assert fixtures.SGprime() is Gp
