from itertools import combinations, product
from math import gcd

import pytest

from lattika import coclosure as cc
from lattika.abelian import (
    AbelianGroup,
    check_fixture_facts,
    generated_subgroup,
    isomorphisms,
    match_fixture,
    parse_group_spec,
    relabel,
    subgroup_sum,
    subgroups,
)
from lattika.errors import DegenerateLattice, LattikaError, NoIsomorphism, TooLarge
from lattika.lattice import is_modular


def divisors(n):
    return sum(1 for d in range(1, n + 1) if n % d == 0)


def brute_force_subgroups(g):
    elems = g.elements
    zero = g.zero
    out = set()
    rest = [x for x in elems if x != zero]
    for k in range(len(rest) + 1):
        for combo in combinations(rest, k):
            s = frozenset(combo) | {zero}
            if all(g.add(x, y) in s for x in s for y in s):
                out.add(s)
    return out


def test_parse_spec():
    assert parse_group_spec("2x4") == (2, 4)
    assert parse_group_spec("12") == (12,)
    for bad in ("", "2xa", "0x3"):
        with pytest.raises(LattikaError):
            parse_group_spec(bad)


def test_group_basics():
    g = AbelianGroup.parse("2x4")
    assert g.order == len(g.elements) == 8
    x, y = (1, 3), (1, 2)
    assert g.add(x, y) == (0, 1)
    assert g.add(x, g.neg(x)) == g.zero
    assert g.scale(3, x) == (1, 1)
    for a in g.elements:
        assert g.decode(g.encode(a)) == a
    assert g.spec() == "2x4"


def test_group_laws():
    g = AbelianGroup.parse("2x3")
    E = g.elements
    for a, b, c in product(E, E, E):
        assert g.add(g.add(a, b), c) == g.add(a, g.add(b, c))
        assert g.add(a, b) == g.add(b, a)


@pytest.mark.parametrize("spec", ["2", "4", "6", "2x2", "2x4", "3x3", "8", "2x2x2"])
def test_matches_brute_force(spec):
    g = AbelianGroup.parse(spec)
    assert set(subgroups(g).subgroups) == brute_force_subgroups(g)


@pytest.mark.parametrize("m,n", [(2, 3), (3, 4), (4, 9), (5, 8), (9, 10), (7, 12)])
def test_coprime_count(m, n):
    assert gcd(m, n) == 1
    assert len(subgroups(AbelianGroup((m, n)))) == divisors(m) * divisors(n)


@pytest.mark.parametrize("k,count", [(1, 2), (2, 5), (3, 16), (4, 67)])
def test_elementary_abelian_counts(k, count):
    # sum of Gaussian binomials over GF(2)
    assert len(subgroups(AbelianGroup((2,) * k))) == count


@pytest.mark.parametrize("spec", ["2x4", "3x4", "2x2x2", "4x4", "2x6"])
def test_meet_is_intersection_join_is_sum(spec):
    g = AbelianGroup.parse(spec)
    sl = subgroups(g)
    L, S = sl.lattice, sl.subgroups
    for a, b in product(L, L):
        assert S[L.meet(a, b)] == S[a] & S[b]
        assert S[L.join(a, b)] == subgroup_sum(g, S[a], S[b])
    assert is_modular(L)


def test_canonical_order():
    sl = subgroups(AbelianGroup.parse("2x4"))
    sizes = [len(h) for h in sl.subgroups]
    assert sizes == sorted(sizes)
    assert sl.lattice.label(0) == "0"
    assert sl.subgroups[0] == {(0, 0)}


def test_generated_subgroup():
    g = AbelianGroup.parse("2x4")
    assert generated_subgroup(g, []) == {(0, 0)}
    assert generated_subgroup(g, [(1, 1)]) == {(0, 0), (1, 1), (0, 2), (1, 3)}
    klein = generated_subgroup(g, [(1, 0), (0, 2)])
    assert klein == {(0, 0), (1, 0), (0, 2), (1, 2)}


def test_index_of():
    g = AbelianGroup.parse("2x4")
    sl = subgroups(g)
    i = sl.index_of([(0, 0), (0, 2)])
    assert sl.lattice.label(i) == "<(0,2)>"


def test_trivial_group_rejected():
    with pytest.raises(DegenerateLattice):
        subgroups(AbelianGroup((1,)))


def test_size_bound(monkeypatch):
    with pytest.raises(TooLarge):
        subgroups(AbelianGroup.parse("2x4"), max_elements=4)
    monkeypatch.setenv("LATTIKA_MAX_SIZE", "5")
    with pytest.raises(TooLarge):
        subgroups(AbelianGroup.parse("2x4"))


def test_match_sg():
    sl = subgroups(AbelianGroup.parse("3x4"))
    m = match_fixture(sl, "SG")
    by_label = {lab: sl.subgroups[i] for i, lab in m.items()}
    assert {k: len(v) for k, v in by_label.items()} == {"0": 1, "H1": 2, "H2": 3, "H3": 4, "H4": 6, "G": 12}


def test_match_sg_other_primes():
    # any p != q gives the same diagram
    sl = subgroups(AbelianGroup((2, 9)))
    m = match_fixture(sl, "SG")
    assert len(sl.subgroups[[i for i, lab in m.items() if lab == "H1"][0]]) == 3


def test_match_sgprime():
    g = AbelianGroup.parse("2x4")
    sl = subgroups(g)
    m = match_fixture(sl, "SGprime")
    S = {lab: sl.subgroups[i] for i, lab in m.items()}
    assert S["H3'"] == {(0, 0), (0, 2)}
    assert S["H4'"] == {(0, 0), (1, 0), (0, 2), (1, 2)}
    assert {len(S["H5'"]), len(S["H6'"])} == {4}
    for lab in ("H5'", "H6'"):
        assert any(generated_subgroup(g, [x]) == S[lab] for x in S[lab])


def test_matched_facts_hold():
    for spec, name in (("3x4", "SG"), ("2x4", "SGprime")):
        sl = subgroups(AbelianGroup.parse(spec))
        m = match_fixture(sl, name)
        L = relabel(sl.lattice, [m[i] for i in sl.lattice])
        assert all(ok for _, ok in check_fixture_facts(L, name))


def test_no_isomorphism():
    with pytest.raises(NoIsomorphism):
        match_fixture(subgroups(AbelianGroup.parse("2x2")), "SGprime")
    with pytest.raises(NoIsomorphism):
        match_fixture(subgroups(AbelianGroup.parse("8")), "SG")
    with pytest.raises(LattikaError):
        match_fixture(subgroups(AbelianGroup.parse("2")), "nope")


def test_isomorphism_count(Gp):
    # swap H1'/H2' and independently H5'/H6'
    autos = list(isomorphisms(Gp, Gp))
    assert len(autos) == 4
    assert tuple(range(Gp.n)) in autos


def test_relabel_keeps_structure(G):
    L = relabel(G, [s.lower() for s in G.labels])
    assert L.labels[1] == "h1"
    assert cc.coclosed_set(L) == cc.coclosed_set(G)
