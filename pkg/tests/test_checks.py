from collections import Counter

from lattika import fixtures
from lattika.checks import check_connection, violations
from lattika.corpus import (
    automorphism_connections,
    compose,
    connections,
    lattices,
    projection_connection,
    quotient_connection,
    random_connections,
)
from lattika.lattice import chain


def test_corpus_size_and_determinism():
    cs = connections()
    assert len(cs) >= 200
    again = random_connections(20)
    assert [g.alpha.values for g in again] == [g.alpha.values for g in random_connections(20)]
    assert len({g.name for g in cs}) == len(cs)


def test_corpus_exercises_every_clause():
    applicable = Counter()
    for gc in connections():
        for v in check_connection(gc):
            if v.hypotheses_met:
                applicable[v.name] += 1
    for name in (
        "codomain-cosmall-over-closure",
        "domain-cosmall-transfer",
        "complement-correspondence",
        "correspondence-unique-coclosure",
        "correspondence-coclosed",
        "restriction-iff-coclosed-galois",
        "supplemented-iff",
        "hdim-equality",
        "independent-image",
    ):
        assert applicable[name] >= 20, name


def test_quotient_connection():
    G = fixtures.SG()
    gc = quotient_connection(G, G.index("H1"))
    assert gc.B.labels == ("H1", "H3", "H4", "G")
    assert gc.alpha_preserves_top and gc.beta_preserves_finite_suprema and gc.beta_injective
    assert violations(check_connection(gc)) == []


def test_projection_and_composition():
    gc = projection_connection(chain(2), chain(3))
    assert gc.A.n == 6 and gc.B.n == 2
    assert gc.all_domain_galois is False
    two = compose(fixtures.example1(), fixtures.example1())
    assert [two.alpha[a] for a in two.A] == [fixtures.example1().alpha[fixtures.example1().alpha[a]] for a in two.A]


def test_automorphisms():
    autos = automorphism_connections(lattices()["M3"])
    assert len(autos) == 6
    for gc in autos:
        assert gc.beta_injective and gc.all_domain_galois


def test_lattice_lemmas_flag():
    gc = fixtures.example1()
    names = [v.name for v in check_connection(gc, lattice_lemmas=True)]
    assert "domain:cosmall-transitivity" in names and "codomain:coclosure-monotone" in names
