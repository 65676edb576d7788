"""Homomorphisms, quotients by a filter, and finite products of lattices."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .bits import is_subset, iter_bits
from .errors import (
    ArityMismatch,
    BadParams,
    CheckFailed,
    KernelNotContained,
    ModulusNotContained,
    NotAHom,
    NotALattice,
    NotAnSFilter,
    NotComplemented,
    NotOnto,
    NotTopPreserving,
    QuotientOrderIllDefined,
    TooLarge,
)
from .filters import FilterSet, Subset, _mask, is_filter
from .lattice import MAX_ELEMENTS, Elem, Lattice
from .sfilters import VeeClosedSet, is_s_filter, is_vee_closed


@dataclass(frozen=True, eq=False)
class LatticeHom:
    domain: Lattice
    codomain: Lattice
    mapping: tuple[Elem, ...]

    def __call__(self, x: Elem) -> Elem:
        return self.mapping[x]

    @property
    def top_preserving(self) -> bool:
        return self.mapping[self.domain.top] == self.codomain.top

    @cached_property
    def onto(self) -> bool:
        return len(set(self.mapping)) == self.codomain.n

    def image(self, X: Subset) -> int:
        out = 0
        for x in iter_bits(_mask(X)):
            out |= 1 << self.mapping[x]
        return out

    def preimage(self, Y: Subset) -> int:
        ym = _mask(Y)
        out = 0
        for x, y in enumerate(self.mapping):
            if ym >> y & 1:
                out |= 1 << x
        return out


def _hom_violation(L1: Lattice, L2: Lattice, f: Sequence[Elem]) -> tuple | None:
    j1, m1, j2, m2 = L1.join, L1.meet, L2.join, L2.meet
    for u in range(L1.n):
        fu = f[u]
        for v in range(u + 1, L1.n):
            fv = f[v]
            if f[j1[u][v]] != j2[fu][fv]:
                return (u, v, "join")
            if f[m1[u][v]] != m2[fu][fv]:
                return (u, v, "meet")
    return None


def make_hom(L1: Lattice, L2: Lattice, mapping: Sequence[Elem] | dict) -> LatticeHom:
    """Validate ``mapping`` (by index or by label dict) as a lattice homomorphism."""
    if isinstance(mapping, dict):
        f = [L2.elem(mapping[name]) for name in L1.names]
    else:
        f = list(mapping)
    if len(f) != L1.n or any(not 0 <= y < L2.n for y in f):
        raise BadParams("mapping must send every domain element into the codomain")
    bad = _hom_violation(L1, L2, f)
    if bad is not None:
        u, v, law = bad
        raise NotAHom(
            f"{law} not preserved at ({L1.names[u]}, {L1.names[v]})",
            (L1.names[u], L1.names[v]), law,
        )
    return LatticeHom(L1, L2, tuple(f))


def all_homs(L1: Lattice, L2: Lattice) -> Iterator[LatticeHom]:
    """Every homomorphism ``L1 -> L2`` by brute force over all maps."""
    for f in itertools.product(range(L2.n), repeat=L1.n):
        if _hom_violation(L1, L2, f) is None:
            yield LatticeHom(L1, L2, f)


def kernel(psi: LatticeHom) -> FilterSet:
    if not psi.top_preserving:
        raise NotTopPreserving("kernel needs a top-preserving homomorphism")
    return FilterSet(psi.domain, psi.preimage(1 << psi.codomain.top))


def preimage_filter(psi: LatticeHom, q2: Subset) -> FilterSet:
    if not psi.top_preserving:
        raise NotTopPreserving("preimage_filter needs a top-preserving homomorphism")
    return FilterSet(psi.domain, psi.preimage(q2))


def image_filter(psi: LatticeHom, q1: Subset, S: Subset) -> FilterSet:
    """``psi(q1)`` under the exact hypotheses of the image-transport result."""
    L1 = psi.domain
    qm = _mask(q1)
    if not L1.complemented:
        raise NotComplemented("domain lattice is not complemented")
    if not psi.onto:
        raise NotOnto("homomorphism is not onto")
    if not psi.top_preserving:
        raise NotTopPreserving("homomorphism does not preserve top")
    if not is_subset(kernel(psi).mask, qm):
        raise KernelNotContained("kernel is not contained in the filter")
    if not is_s_filter(L1, S, qm):
        raise NotAnSFilter(f"{L1.fmt(qm)} is not an S-filter")
    return FilterSet(psi.codomain, psi.image(qm))


# -- quotient by a filter -----------------------------------------------------


@dataclass(frozen=True, eq=False)
class QuotientLattice:
    base: Lattice
    modulus: FilterSet
    classes: tuple[int, ...]
    quotient: Lattice
    projection: LatticeHom

    def cls(self, u: Elem) -> Elem:
        return self.projection.mapping[u]

    def bar(self, S: Subset) -> VeeClosedSet:
        return VeeClosedSet(self.quotient, self.projection.image(S))


def _related(L: Lattice, p: int, u: Elem, v: Elem) -> bool:
    mu, mv = L.meet[u], L.meet[v]
    lhs = {mu[x] for x in iter_bits(p)}
    return any(mv[y] in lhs for y in iter_bits(p))


def quotient(L: Lattice, p: Subset) -> QuotientLattice:
    """``L / p`` with ``u ~ v`` iff ``u ^ x == v ^ y`` for some ``x, y`` in p."""
    pm = _mask(p)
    if not is_filter(L, pm):
        raise BadParams(f"{L.fmt(pm)} is not a filter")
    cls = [-1] * L.n
    classes: list[int] = []
    for u in range(L.n):
        if cls[u] >= 0:
            continue
        members = 1 << u
        for v in range(u + 1, L.n):
            if cls[v] < 0 and _related(L, pm, u, v):
                members |= 1 << v
        for v in iter_bits(members):
            cls[v] = len(classes)
        classes.append(members)
    # every member must be related to every other (transitivity of ~)
    for c in classes:
        ms = list(iter_bits(c))
        for i, u in enumerate(ms):
            for v in ms[i + 1:]:
                if not _related(L, pm, u, v):
                    raise QuotientOrderIllDefined(
                        "relation is not transitive", (L.names[u], L.names[v])
                    )

    k = len(classes)
    # [A] <= [B] iff some representatives satisfy u <= v
    up = [0] * k
    for a, A in enumerate(classes):
        reach = 0
        for u in iter_bits(A):
            reach |= L.up[u]
        for b, B in enumerate(classes):
            if reach & B:
                up[a] |= 1 << b
    for a in range(k):
        for b in iter_bits(up[a]):
            if b != a and up[b] >> a & 1:
                raise QuotientOrderIllDefined(
                    "quotient order is not antisymmetric",
                    (L.fmt(classes[a]), L.fmt(classes[b])),
                )
            if not is_subset(up[b], up[a]):
                raise QuotientOrderIllDefined(
                    "quotient order is not transitive",
                    (L.fmt(classes[a]), L.fmt(classes[b])),
                )
    labels = [L.fmt(c) for c in classes]
    try:
        Q = Lattice(labels, up, name=f"{L.name}/{L.fmt(pm)}" if L.name else "")
    except NotALattice as exc:
        raise QuotientOrderIllDefined(f"quotient is not a lattice: {exc}", exc.witness) from None

    for u in range(L.n):
        for v in range(u + 1, L.n):
            if cls[L.join[u][v]] != Q.join[cls[u]][cls[v]]:
                raise QuotientOrderIllDefined(
                    "class of a join differs from the join of classes", (L.names[u], L.names[v])
                )
            if cls[L.meet[u][v]] != Q.meet[cls[u]][cls[v]]:
                raise QuotientOrderIllDefined(
                    "class of a meet differs from the meet of classes", (L.names[u], L.names[v])
                )
    if classes[cls[L.top]] != pm:
        raise QuotientOrderIllDefined("top class differs from the modulus", (L.fmt(pm),))
    proj = LatticeHom(L, Q, tuple(cls))
    return QuotientLattice(L, FilterSet(L, pm), tuple(classes), Q, proj)


def quotient_s_filter(Q: QuotientLattice, S: Subset, q: Subset) -> FilterSet:
    """The image ``q / p`` of an S-filter containing the modulus."""
    L = Q.base
    qm = _mask(q)
    if not is_subset(Q.modulus.mask, qm):
        raise ModulusNotContained("modulus is not contained in q")
    if not L.complemented:
        raise NotComplemented("base lattice is not complemented")
    if not is_s_filter(L, S, qm):
        raise NotAnSFilter(f"{L.fmt(qm)} is not an S-filter")
    return FilterSet(Q.quotient, Q.projection.image(qm))


# -- products -----------------------------------------------------------------


class ProductLattice:
    """Componentwise product of two or more lattices."""

    def __init__(self, factors: Sequence[Lattice]):
        if len(factors) < 2:
            raise BadParams("a product needs at least two factors")
        size = 1
        for F in factors:
            size *= F.n
        if size > MAX_ELEMENTS:
            raise TooLarge(f"product has {size} elements, limit is {MAX_ELEMENTS}")
        self.factors = tuple(factors)
        self.tuples = list(itertools.product(*(range(F.n) for F in factors)))
        self.index = {t: i for i, t in enumerate(self.tuples)}
        up = []
        for t in self.tuples:
            m = 0
            for j, s in enumerate(self.tuples):
                if all(F.up[a] >> b & 1 for F, a, b in zip(factors, t, s)):
                    m |= 1 << j
            up.append(m)
        labels = [
            "(" + ",".join(F.names[a] for F, a in zip(factors, t)) + ")" for t in self.tuples
        ]
        name = " x ".join(F.name for F in factors) if all(F.name for F in factors) else ""
        self.lattice = Lattice(labels, up, name=name)
        self.projections = tuple(
            LatticeHom(self.lattice, F, tuple(t[i] for t in self.tuples))
            for i, F in enumerate(factors)
        )

    def element(self, coords: Sequence[Elem]) -> Elem:
        return self.index[tuple(coords)]

    def coords(self, e: Elem) -> tuple[Elem, ...]:
        return self.tuples[e]

    def embed(self, k: int, x: Elem, fill: str = "bottom") -> Elem:
        """The tuple with ``x`` in slot ``k`` and bottom (or top) elsewhere."""
        base = [getattr(F, fill) for F in self.factors]
        base[k] = x
        return self.element(base)

    def product_set(self, masks: Sequence[Subset]) -> int:
        if len(masks) != len(self.factors):
            raise ArityMismatch(f"expected {len(self.factors)} component sets, got {len(masks)}")
        ms = [_mask(m) for m in masks]
        out = 0
        for i, t in enumerate(self.tuples):
            if all(m >> a & 1 for m, a in zip(ms, t)):
                out |= 1 << i
        return out


def product(lattices: Sequence[Lattice]) -> ProductLattice:
    return ProductLattice(lattices)


def product_s_filter_sides(
    factors: ProductLattice | Sequence[Lattice],
    S_list: Sequence[Subset],
    q_list: Sequence[Subset],
) -> tuple[bool, bool]:
    """(product filter is a product-S-filter, every component is an S_i-filter)."""
    P = factors if isinstance(factors, ProductLattice) else ProductLattice(factors)
    k = len(P.factors)
    if len(S_list) != k or len(q_list) != k:
        raise ArityMismatch(f"expected {k} join-closed sets and {k} filters")
    for F, S in zip(P.factors, S_list):
        if not is_vee_closed(F, S):
            raise BadParams(f"{F.fmt(_mask(S))} is not join-closed")
    for F, q in zip(P.factors, q_list):
        if not is_filter(F, q):
            raise BadParams(f"{F.fmt(_mask(q))} is not a filter")
    lhs = is_s_filter(P.lattice, P.product_set(S_list), P.product_set(q_list))
    rhs = all(is_s_filter(F, S, q) for F, S, q in zip(P.factors, S_list, q_list))
    return lhs, rhs


def product_s_filter_check(
    factors: ProductLattice | Sequence[Lattice],
    S_list: Sequence[Subset],
    q_list: Sequence[Subset],
) -> bool:
    lhs, rhs = product_s_filter_sides(factors, S_list, q_list)
    if lhs != rhs:
        raise CheckFailed(f"product side is {lhs} but componentwise side is {rhs}")
    return lhs
