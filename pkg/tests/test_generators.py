import json

import pytest

import oracles
from lattika import generators
from lattika.errors import BadParams, UnknownName
from lattika.generators import LCG, Poset, build, default_catalog, downset_lattice, random_poset
from lattika.lattice import is_complemented, is_distributive
from lattika.serialize import dumps_lattice


def test_named_ex5():
    L = generators.named("ex5")
    assert L.names == ("0", "u", "v", "w", "1")
    assert is_distributive(L) and not is_complemented(L)


def test_unknown_name():
    with pytest.raises(UnknownName):
        generators.named("nope")
    with pytest.raises(UnknownName):
        build("nope:3")


def test_chain_one_point():
    L = generators.chain(1)
    assert L.n == 1 and L.bottom == L.top


def test_boolean():
    B2 = generators.boolean(2)
    assert B2.n == 4 and is_complemented(B2)
    assert generators.boolean(3).n == 8


def test_divisors():
    L = generators.divisor_lattice(12)
    assert sorted(int(x) for x in L.names) == [1, 2, 3, 4, 6, 12]
    assert is_distributive(L)
    assert generators.divisor_lattice(1).n == 1
    assert oracles.isomorphic(generators.divisor_lattice(30), generators.boolean(3))


def test_downsets_small_posets():
    anti = downset_lattice(Poset(["x", "y"], []))
    assert oracles.isomorphic(anti, generators.boolean(2))
    two = downset_lattice(Poset(["x", "y"], [("x", "y")]))
    assert oracles.isomorphic(two, generators.chain(3))


def test_downsets_of_lambda_poset_match_ex5():
    # two minimal elements below one maximal element
    lam = downset_lattice(Poset(["x", "y", "z"], [("x", "z"), ("y", "z")]))
    assert oracles.isomorphic(lam, generators.named("ex5"))


def test_downsets_of_v_poset_give_the_dual():
    # one minimal element below two maximal ones: 0 < d < a, b < 1 shape
    v = downset_lattice(Poset(["x", "y", "z"], [("x", "y"), ("x", "z")]))
    assert v.n == 5 and is_distributive(v)
    assert not oracles.isomorphic(v, generators.named("ex5"))
    top_covers = sum(1 for a, b in v.covers if b == v.top)
    assert top_covers == 2


def test_random_poset_deterministic():
    assert random_poset(5, 42) == random_poset(5, 42)
    for seed in range(10):
        p = random_poset(1, seed)
        assert list(p.names) == ["p0"] and list(p.covers) == []


def test_random_downsets_are_distributive():
    for seed in range(200):
        L = downset_lattice(random_poset(5, seed))
        assert is_distributive(L)


def test_random_poset_bounds():
    with pytest.raises(BadParams):
        random_poset(0, 1)
    with pytest.raises(BadParams):
        random_poset(7, 1)


def test_lcg_reference_values():
    rng = LCG(0)
    assert rng.next() == 1442695040888963407
    assert rng.next() == (6364136223846793005 * 1442695040888963407 + 1442695040888963407) % 2**64


def test_build_descriptors():
    assert build("chain:5").n == 5
    assert build("boolean:3").n == 8
    assert build("divisors:60").n == 12
    assert build("ex5") == generators.named("ex5")
    assert build("random:5,42") == build("random:5,42")
    with pytest.raises(BadParams):
        build("chain:x")


def test_catalog_shape(catalog):
    ids = [e.id for e in catalog]
    assert ids == sorted(ids) and len(set(ids)) == len(ids)
    assert len(catalog) == 5 + 3 + 3 + 4 + 100
    assert {"ex5", "m3", "n5", "chain-02", "boolean-03", "divisors-60"} <= set(ids)
    assert all(e.lattice.n <= 32 for e in catalog)


def test_catalog_deterministic(catalog):
    again = default_catalog()
    assert [dumps_lattice(e.lattice) for e in again] == [dumps_lattice(e.lattice) for e in catalog]


def test_seed_env(monkeypatch):
    monkeypatch.setenv("LATTIKA_SEED", "7")
    assert generators.default_seed() == 7
    monkeypatch.setenv("LATTIKA_SEED", "seven")
    with pytest.raises(BadParams):
        generators.default_seed()
    monkeypatch.delenv("LATTIKA_SEED")
    assert generators.default_seed() == generators.DEFAULT_SEED


def test_every_catalog_lattice_validates(catalog):
    for e in catalog:
        L = e.lattice
        assert all(L.up[L.bottom] >> x & 1 for x in range(L.n))
        assert all(L.up[x] >> L.top & 1 for x in range(L.n))
        assert json.loads(dumps_lattice(L))["name"] == e.id


def test_random_entries_are_distributive(catalog):
    for e in catalog:
        if e.id.startswith("random-"):
            assert is_distributive(e.lattice)
