"""Join-closed sets, S-filters, saturation, and the S-filter theorems' checkers."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .bits import canonical_key, is_subset, iter_bits
from .errors import (
    DecompositionMismatch,
    DisjointnessViolated,
    EmptyFamily,
    NonDistributive,
    NotAllSFilters,
    NotAnSFilter,
    SaturationNotFilter,
    SNotContained,
    TooLarge,
)
from .filters import (
    ElementSet,
    FilterSet,
    Subset,
    _mask,
    filter_masks,
    is_filter,
    join_set,
    min_primes_over,
    residual_elem_set,
)
from .lattice import Lattice


class VeeClosedSet(ElementSet):
    """A subset containing bottom and closed under join."""

    __slots__ = ()


def is_vee_closed(L: Lattice, X: Subset) -> bool:
    m = _mask(X)
    if not m >> L.bottom & 1:
        return False
    members = list(iter_bits(m))
    join = L.join
    for i, a in enumerate(members):
        row = join[a]
        for b in members[i + 1:]:
            if not m >> row[b] & 1:
                return False
    return True


def vee_closure(L: Lattice, X: Subset) -> VeeClosedSet:
    """Smallest join-closed set containing ``X`` and bottom."""
    m = _mask(X) | 1 << L.bottom
    while True:
        grown = join_set(L, m, m) | m
        if grown == m:
            return VeeClosedSet(L, m)
        m = grown


def iter_vee_closed_masks(L: Lattice, budget: int | None = None):
    """Yield every join-closed set (as a mask) exactly once, unordered.

    Close-by-one search: extending a closed set ``C`` by ``i`` gives the
    closure ``C | {i v c : c in C}``; a branch is kept only when it adds no
    element below ``i`` that ``C`` lacked.
    """
    join, n = L.join, L.n
    stack = [(1 << L.bottom, 0)]
    count = 0
    while stack:
        C, start = stack.pop()
        count += 1
        if budget is not None and count > budget:
            raise TooLarge(f"{L.name or 'lattice'} has more than {budget} join-closed sets")
        yield C
        members = list(iter_bits(C))
        for i in range(start, n):
            if C >> i & 1:
                continue
            row = join[i]
            D = C
            for c in members:
                D |= 1 << row[c]
            low = (1 << i) - 1
            if D & low == C & low:
                stack.append((D, i + 1))


def all_vee_closed_sets(L: Lattice, budget: int | None = None) -> list[VeeClosedSet]:
    masks = sorted(iter_vee_closed_masks(L, budget), key=canonical_key)
    return [VeeClosedSet(L, m) for m in masks]


@lru_cache(maxsize=4096)
def _s_violators(L: Lattice, q: int) -> int:
    """Elements ``u`` admitting some ``v`` with ``u v v`` in q but ``v`` not in q."""
    out = 0
    join = L.join
    for u in range(L.n):
        row = join[u]
        for v in range(L.n):
            if q >> row[v] & 1 and not q >> v & 1:
                out |= 1 << u
                break
    return out


def is_s_filter(L: Lattice, S: Subset, q: Subset) -> bool:
    """Proper filter q with: u in S and u v v in q imply v in q.

    ``S`` may be any subset (images of join-closed sets need not contain bottom).
    """
    qm = _mask(q)
    if qm >> L.bottom & 1 or not is_filter(L, qm):
        return False
    return _mask(S) & _s_violators(L, qm) == 0


def all_s_filters(L: Lattice, S: Subset) -> list[FilterSet]:
    sm = _mask(S)
    return [FilterSet(L, F) for F in filter_masks(L) if is_s_filter(L, sm, F)]


def saturate(L: Lattice, S: Subset, p: Subset) -> ElementSet:
    """``{a : a v t in p for some t in S}`` as a raw subset (may fail to be a filter)."""
    pm = _mask(p)
    ts = list(iter_bits(_mask(S)))
    out = 0
    join = L.join
    for a in range(L.n):
        row = join[a]
        for t in ts:
            if pm >> row[t] & 1:
                out |= 1 << a
                break
    return ElementSet(L, out)


def smallest_s_filter(L: Lattice, S: Subset, p: Subset) -> FilterSet:
    pm, sm = _mask(p), _mask(S)
    if pm & sm:
        raise DisjointnessViolated(f"filter {L.fmt(pm)} meets S = {L.fmt(sm)}")
    if not L.distributive:
        raise NonDistributive("smallest_s_filter requires a distributive lattice")
    sat = saturate(L, sm, pm).mask
    if not is_filter(L, sat):
        raise SaturationNotFilter(f"saturation {L.fmt(sat)} is not a filter", sat)
    return FilterSet(L, sat)


# -- pair characterization ----------------------------------------------------


@lru_cache(maxsize=64)
def _filter_pair_joins(L: Lattice) -> tuple[tuple[int, int, int], ...]:
    fs = filter_masks(L)
    return tuple((r, p, join_set(L, r, p)) for r in fs for p in fs)


@lru_cache(maxsize=4096)
def _dangerous_pairs(L: Lattice, q: int) -> tuple[tuple[int, int], ...]:
    """Filter pairs (r, p) with r v p inside q but p not inside q."""
    return tuple(
        (r, p) for r, p, rp in _filter_pair_joins(L)
        if is_subset(rp, q) and not is_subset(p, q)
    )


def check_pair_characterization(
    L: Lattice, S: Subset, q: Subset
) -> tuple[bool, tuple[FilterSet, FilterSet] | None]:
    """For all filters r, p: r v p inside q and r meeting S imply p inside q.

    Returns ``(holds, witness)`` where the witness is the first failing ``(r, p)``.
    """
    sm, qm = _mask(S), _mask(q)
    for r, p in _dangerous_pairs(L, qm):
        if r & sm:
            return False, (FilterSet(L, r), FilterSet(L, p))
    return True, None


def check_ghasem_equivalences(L: Lattice, S: Subset, q: Subset) -> tuple[bool, bool, bool]:
    """(q is an S-filter, q == (q : t) for all t in S, saturation of q == q)."""
    sm, qm = _mask(S), _mask(q)
    s_filter = is_s_filter(L, sm, qm)
    residuals_fixed = all(residual_elem_set(L, qm, t) == qm for t in iter_bits(sm))
    saturation_fixed = saturate(L, sm, qm).mask == qm
    return s_filter, residuals_fixed, saturation_fixed


# -- prime avoidance ----------------------------------------------------------


@dataclass
class AvoidanceVerdict:
    hypotheses_hold: bool
    failed: list[str] = field(default_factory=list)
    conclusion: bool | None = None

    @property
    def violated(self) -> bool:
        return self.hypotheses_hold and self.conclusion is False


def prime_avoidance_check(
    L: Lattice, S: Subset, p: Subset, qs: Sequence[Subset]
) -> AvoidanceVerdict:
    """Evaluate the S-filter prime-avoidance statement on one ordered family.

    ``qs[0]`` is the distinguished member that must be an S-filter; every
    other member must meet S.
    """
    if not qs:
        raise EmptyFamily("prime avoidance needs at least one covering filter")
    sm, pm = _mask(S), _mask(p)
    qms = [_mask(x) for x in qs]
    failed = []
    for name, m in [("p", pm)] + [(f"q{i + 1}", x) for i, x in enumerate(qms)]:
        if not is_filter(L, m) or m >> L.bottom & 1:
            failed.append(f"{name} proper filter")
    union = 0
    for x in qms:
        union |= x
    if not is_subset(pm, union):
        failed.append("cover")
    else:
        for i in range(len(qms)):
            rest = 0
            for j, x in enumerate(qms):
                if j != i:
                    rest |= x
            if is_subset(pm, rest):
                failed.append("irredundant")
                break
    if not is_s_filter(L, sm, qms[0]):
        failed.append("q1 S-filter")
    if any(not x & sm for x in qms[1:]):
        failed.append("others meet S")
    if failed:
        return AvoidanceVerdict(False, failed)
    return AvoidanceVerdict(True, [], is_subset(pm, qms[0]))


def intersect_s_filters(L: Lattice, S: Subset, qs: Sequence[Subset]) -> FilterSet:
    if not qs:
        raise EmptyFamily("intersection of an empty family")
    sm = _mask(S)
    acc = L.full
    for q in qs:
        qm = _mask(q)
        if not is_s_filter(L, sm, qm):
            raise NotAllSFilters(f"{L.fmt(qm)} is not an S-filter")
        acc &= qm
    return FilterSet(L, acc)


def find_prime_s_filter_containing(L: Lattice, S: Subset, F: Subset) -> FilterSet:
    """A filter containing F, disjoint from S, and maximal with that property.

    Ties between maximal candidates go to the first in canonical order.  On
    distributive lattices the result is prime, hence an S-filter; callers
    that cannot assume distributivity should check.
    """
    sm, fm = _mask(S), _mask(F)
    if fm & sm:
        raise DisjointnessViolated(f"filter {L.fmt(fm)} meets S = {L.fmt(sm)}")
    sigma = [G for G in filter_masks(L) if is_subset(fm, G) and not G & sm]
    maximal = [G for G in sigma if not any(H != G and is_subset(G, H) for H in sigma)]
    return FilterSet(L, min(maximal, key=canonical_key))


def maximal_s_filters(L: Lattice, S: Subset) -> list[FilterSet]:
    fs = [F.mask for F in all_s_filters(L, S)]
    return [
        FilterSet(L, F) for F in fs
        if not any(G != F and is_subset(F, G) for G in fs)
    ]


def check_min_primes_s(L: Lattice, S: Subset, q: Subset) -> bool:
    sm, qm = _mask(S), _mask(q)
    if not is_s_filter(L, sm, qm):
        raise NotAnSFilter(f"{L.fmt(qm)} is not an S-filter")
    return all(is_s_filter(L, sm, P) for P in min_primes_over(L, qm))


# -- S-complete sets ----------------------------------------------------------


def is_s_vee_closed(L: Lattice, S: Subset, Sp: Subset) -> bool:
    sm, spm = _mask(S), _mask(Sp)
    if not sm & spm & ~(1 << L.bottom):
        return False
    join = L.join
    others = list(iter_bits(spm))
    for t in iter_bits(sm & spm):
        row = join[t]
        for t2 in others:
            if not spm >> row[t2] & 1:
                return False
    return True


def is_s_complete(L: Lattice, S: Subset, Sp: Subset) -> bool:
    return is_s_vee_closed(L, S, Sp) and _join_split_closed(L, _mask(Sp))


@lru_cache(maxsize=1 << 16)
def _join_split_closed(L: Lattice, spm: int) -> bool:
    """x v y in Sp implies x in Sp and y in Sp."""
    join = L.join
    for x in range(L.n):
        row = join[x]
        for y in range(x, L.n):
            if spm >> row[y] & 1 and not (spm >> x & 1 and spm >> y & 1):
                return False
    return True


def disjoint_s_filters(L: Lattice, S: Subset, Sp: Subset) -> list[FilterSet]:
    spm = _mask(Sp)
    return [q for q in all_s_filters(L, S) if not q.mask & spm]


def union_complement(L: Lattice, family: Sequence[Subset]) -> int:
    u = 0
    for q in family:
        u |= _mask(q)
    return L.full & ~u


def s_complete_decomposition(L: Lattice, S: Subset, Sp: Subset) -> list[FilterSet] | None:
    """S-filters whose union is the complement of an S-complete ``Sp``.

    Returns ``None`` when ``Sp`` is not S-complete.
    """
    sm, spm = _mask(S), _mask(Sp)
    if not is_subset(sm, spm):
        raise SNotContained(f"S = {L.fmt(sm)} is not inside {L.fmt(spm)}")
    if not is_s_complete(L, sm, spm):
        return None
    family = disjoint_s_filters(L, sm, spm)
    rest = union_complement(L, family)
    if rest != spm:
        raise DecompositionMismatch(
            f"complement of the union is {L.fmt(rest)}, expected {L.fmt(spm)}"
        )
    return family
