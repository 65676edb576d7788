import pytest

import oracles
from lattika import generators
from lattika.constructions import (
    ProductLattice,
    all_homs,
    image_filter,
    kernel,
    make_hom,
    preimage_filter,
    product,
    product_s_filter_check,
    product_s_filter_sides,
    quotient,
    quotient_s_filter,
)
from lattika.errors import (
    ArityMismatch,
    BadParams,
    CheckFailed,
    KernelNotContained,
    ModulusNotContained,
    NotAHom,
    NotComplemented,
    NotOnto,
    NotTopPreserving,
    QuotientOrderIllDefined,
    TooLarge,
)
from lattika.filters import all_filters, filter_masks
from lattika.sfilters import all_vee_closed_sets, is_s_filter, is_vee_closed


def M(L, *labels):
    return L.mask(labels)


@pytest.fixture
def b2_to_c2(b2):
    C2 = generators.chain(2)
    # x maps to 1 exactly when x >= a
    return make_hom(b2, C2, {"0": "0", "a": "1", "b": "0", "1": "1"})


def test_identity_hom(ex5):
    psi = make_hom(ex5, ex5, list(range(ex5.n)))
    assert psi.top_preserving and psi.onto
    assert kernel(psi).labels() == ["1"]
    for F in all_filters(ex5):
        assert preimage_filter(psi, F) == F


def test_swap_automorphism(ex5):
    make_hom(ex5, ex5, {"0": "0", "u": "v", "v": "u", "w": "w", "1": "1"})


def test_not_a_hom(ex5):
    C2 = generators.chain(2)
    with pytest.raises(NotAHom) as exc:
        make_hom(ex5, C2, {"0": "0", "u": "1", "v": "1", "w": "1", "1": "1"})
    assert exc.value.law == "meet"
    with pytest.raises(BadParams):
        make_hom(ex5, C2, [0, 1])


def test_b2_to_chain(b2, b2_to_c2):
    psi = b2_to_c2
    assert psi.onto and psi.top_preserving
    assert kernel(psi).labels() == ["a", "1"]
    C2 = psi.codomain
    q2 = M(C2, "1")
    pre = preimage_filter(psi, q2)
    assert pre.labels() == ["a", "1"]
    S = M(b2, "0", "b")
    assert C2.labels(psi.image(S)) == ["0"]
    assert is_s_filter(C2, psi.image(S), q2) and is_s_filter(b2, S, pre)
    img = image_filter(psi, M(b2, "a", "1"), S)
    assert img.labels() == ["1"]
    assert is_s_filter(C2, psi.image(S), img)


def test_constant_top_kernel(ex5):
    C2 = generators.chain(2)
    psi = make_hom(ex5, C2, [1] * ex5.n)
    assert kernel(psi).mask == ex5.full
    low = make_hom(ex5, C2, [0] * ex5.n)
    with pytest.raises(NotTopPreserving):
        kernel(low)


def test_image_filter_errors(ex5, b2, b2_to_c2):
    ident = make_hom(ex5, ex5, list(range(ex5.n)))
    with pytest.raises(NotComplemented):
        image_filter(ident, M(ex5, "v", "w", "1"), M(ex5, "0", "u"))
    B = generators.boolean(2)
    into = make_hom(generators.chain(2), B, [0, 3])
    with pytest.raises(NotOnto):
        image_filter(into, 2, 1)
    C2 = generators.chain(2)
    not_onto = make_hom(b2, C2, [1, 1, 1, 1])
    with pytest.raises(NotOnto):
        image_filter(not_onto, M(b2, "1"), M(b2, "0"))
    with pytest.raises(KernelNotContained):
        image_filter(b2_to_c2, M(b2, "1"), M(b2, "0"))


def test_identity_image(b2):
    ident = make_hom(b2, b2, list(range(4)))
    S = M(b2, "0", "b")
    q = M(b2, "a", "1")
    assert image_filter(ident, q, S).mask == q


def test_all_homs_brute_force(b2):
    C2 = generators.chain(2)
    homs = list(all_homs(b2, C2))
    # constants plus the two projections
    assert sorted(h.mapping for h in homs) == sorted([(0, 0, 0, 0), (1, 1, 1, 1), (0, 1, 0, 1), (0, 0, 1, 1)])


def test_quotient_examples(ex5):
    Q = quotient(ex5, M(ex5, "1"))
    assert Q.quotient.n == ex5.n and oracles.isomorphic(Q.quotient, ex5)
    Q = quotient(ex5, M(ex5, "w", "1"))
    assert sorted(Q.quotient.names) == sorted(["{0}", "{u}", "{v}", "{w,1}"])
    assert oracles.isomorphic(Q.quotient, generators.boolean(2))
    assert Q.cls(ex5.elem("w")) == Q.cls(ex5.elem("1"))
    one = quotient(ex5, ex5.full)
    assert one.quotient.n == 1


def test_quotient_non_distributive_raises(m3):
    with pytest.raises(QuotientOrderIllDefined):
        quotient(m3, M(m3, "a", "1"))


def test_quotient_s_filter_examples(b2):
    S, q = M(b2, "0", "b"), M(b2, "a", "1")
    Q = quotient(b2, M(b2, "1"))
    got = quotient_s_filter(Q, S, q)
    assert is_s_filter(Q.quotient, Q.bar(S), got)
    with pytest.raises(ModulusNotContained):
        quotient_s_filter(quotient(b2, M(b2, "b", "1")), S, q)


def test_quotient_invariants(catalog):
    for e in catalog:
        L = e.lattice
        if not L.distributive:
            continue
        for p in filter_masks(L):
            Q = quotient(L, p)
            QL = Q.quotient
            assert kernel(Q.projection).mask == p
            for u in range(L.n):
                assert (Q.cls(u) == QL.top) == bool(p >> u & 1)
                for v in range(L.n):
                    assert QL.join[Q.cls(u)][Q.cls(v)] == Q.cls(L.join[u][v])
                    assert QL.meet[Q.cls(u)][Q.cls(v)] == Q.cls(L.meet[u][v])
            if L.n <= 8:
                for X in all_vee_closed_sets(L):
                    assert is_vee_closed(QL, Q.bar(X))


def test_product_examples():
    C2, C3 = generators.chain(2), generators.chain(3)
    P = product([C2, C2])
    assert oracles.isomorphic(P.lattice, generators.boolean(2))
    grid = product([C2, C3]).lattice
    assert grid.n == 6 and grid.distributive
    ex5 = generators.named("ex5")
    assert oracles.isomorphic(product([ex5, generators.chain(1)]).lattice, ex5)
    assert P.lattice.names[P.element((1, 0))] == "(1,0)"


def test_product_errors():
    C2 = generators.chain(2)
    with pytest.raises(BadParams):
        ProductLattice([C2])
    with pytest.raises(TooLarge):
        ProductLattice([generators.chain(9)] * 2)
    P = ProductLattice([C2, C2])
    with pytest.raises(ArityMismatch):
        P.product_set([1])
    with pytest.raises(ArityMismatch):
        product_s_filter_sides(P, [1], [2, 2])


def test_product_is_componentwise(small_catalog):
    small = [e.lattice for e in small_catalog if e.lattice.n <= 4][:8]
    for A in small:
        for B in small:
            P = ProductLattice([A, B])
            L = P.lattice
            for x in range(L.n):
                for y in range(L.n):
                    (a1, b1), (a2, b2) = P.coords(x), P.coords(y)
                    assert P.coords(L.join[x][y]) == (A.join[a1][a2], B.join[b1][b2])
                    assert P.coords(L.meet[x][y]) == (A.meet[a1][a2], B.meet[b1][b2])
                    assert bool(L.up[x] >> y & 1) == (
                        bool(A.up[a1] >> a2 & 1) and bool(B.up[b1] >> b2 & 1)
                    )


def test_product_s_filter_examples():
    C2 = generators.chain(2)
    zero, one = M(C2, "0"), M(C2, "1")
    assert product_s_filter_check([C2, C2], [zero, zero], [one, one]) is True
    both = M(C2, "0", "1")
    assert product_s_filter_sides([C2, C2], [zero, both], [one, one]) == (False, False)


def test_product_with_an_improper_component_breaks_the_biconditional():
    C2 = generators.chain(2)
    zero = M(C2, "0")
    lhs, rhs = product_s_filter_sides([C2, C2], [zero, zero], [M(C2, "1"), C2.full])
    assert (lhs, rhs) == (True, False)
    with pytest.raises(CheckFailed):
        product_s_filter_check([C2, C2], [zero, zero], [M(C2, "1"), C2.full])
