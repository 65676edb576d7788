"""Filters of a finite lattice: predicates, generation, primes, residuals."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Union

from .bits import canonical_key, is_subset, iter_bits
from .errors import EmptyGeneratorSet, ImproperFilter, MixedLattices, NotAFilterResult
from .lattice import Elem, Lattice


class ElementSet:
    """A subset of one lattice's elements, stored as a bit-vector."""

    __slots__ = ("lattice", "mask")

    def __init__(self, lattice: Lattice, mask: int):
        self.lattice = lattice
        self.mask = mask

    def __contains__(self, x: Elem) -> bool:
        return bool(self.mask >> x & 1)

    def __iter__(self) -> Iterator[Elem]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ElementSet):
            return self.mask == other.mask and self.lattice == other.lattice
        return NotImplemented

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.mask))

    def __le__(self, other: "ElementSet") -> bool:
        return is_subset(self.mask, _mask(other))

    def __lt__(self, other: "ElementSet") -> bool:
        m = _mask(other)
        return self.mask != m and is_subset(self.mask, m)

    def labels(self) -> list[str]:
        return self.lattice.labels(self.mask)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.lattice.fmt(self.mask)})"


class FilterSet(ElementSet):
    __slots__ = ()

    @property
    def proper(self) -> bool:
        return not self.mask >> self.lattice.bottom & 1


Subset = Union[int, ElementSet]


def _mask(x: Subset) -> int:
    return x.mask if isinstance(x, ElementSet) else x


def _same_lattice(L: Lattice, *sets: Subset) -> None:
    for s in sets:
        if isinstance(s, ElementSet) and s.lattice is not L and s.lattice != L:
            raise MixedLattices("sets belong to different lattices")


def is_filter(L: Lattice, X: Subset) -> bool:
    """Nonempty, closed under meet, and upward closed."""
    return _is_filter(L, _mask(X))


@lru_cache(maxsize=1 << 16)
def _is_filter(L: Lattice, m: int) -> bool:
    if m == 0:
        return False
    up, meet = L.up, L.meet
    members = list(iter_bits(m))
    for a in members:
        if up[a] & ~m:
            return False
    for i, a in enumerate(members):
        row = meet[a]
        for b in members[i + 1:]:
            if not m >> row[b] & 1:
                return False
    return True


def generate_filter(L: Lattice, X: Subset | Iterable[Elem]) -> FilterSet:
    """The least filter containing ``X``: everything above a finite meet of members."""
    m = _mask(X) if isinstance(X, (int, ElementSet)) else sum(1 << e for e in set(X))
    if m == 0:
        raise EmptyGeneratorSet("cannot generate a filter from the empty set")
    it = iter_bits(m)
    acc = next(it)
    for b in it:
        acc = L.meet[acc][b]
    return FilterSet(L, L.up[acc])


def principal(L: Lattice, a: Elem) -> FilterSet:
    return FilterSet(L, L.up[a])


def all_filters(L: Lattice) -> list[FilterSet]:
    """Every filter of ``L`` in canonical (size, value) order.

    A finite lattice's filters are exactly its principal filters.
    """
    return [FilterSet(L, m) for m in filter_masks(L)]


@lru_cache(maxsize=256)
def filter_masks(L: Lattice) -> tuple[int, ...]:
    return tuple(sorted(set(L.up), key=canonical_key))


def proper_filters(L: Lattice) -> list[FilterSet]:
    return [F for F in all_filters(L) if F.proper]


def is_proper(L: Lattice, F: Subset) -> bool:
    return not _mask(F) >> L.bottom & 1


def is_prime_filter(L: Lattice, F: Subset) -> bool:
    m = _mask(F)
    if not is_filter(L, m) or m >> L.bottom & 1:
        return False
    join = L.join
    outside = list(iter_bits(L.full & ~m))
    for i, u in enumerate(outside):
        row = join[u]
        for v in outside[i:]:
            if m >> row[v] & 1:
                return False
    return True


def is_maximal_filter(L: Lattice, F: Subset) -> bool:
    m = _mask(F)
    if not is_filter(L, m) or m >> L.bottom & 1:
        return False
    return all(H == L.full for H in filter_masks(L) if H != m and is_subset(m, H))


def prime_filters(L: Lattice) -> list[FilterSet]:
    return [FilterSet(L, m) for m in _prime_masks(L)]


@lru_cache(maxsize=256)
def _prime_masks(L: Lattice) -> tuple[int, ...]:
    return tuple(m for m in filter_masks(L) if is_prime_filter(L, m))


def join_set(L: Lattice, F: Subset, G: Subset) -> int:
    """The raw elementwise join ``{a v b : a in F, b in G}``."""
    out = 0
    join = L.join
    gs = list(iter_bits(_mask(G)))
    for a in iter_bits(_mask(F)):
        row = join[a]
        for b in gs:
            out |= 1 << row[b]
    return out


def filter_join(L: Lattice, F: Subset, G: Subset) -> FilterSet:
    _same_lattice(L, F, G)
    out = join_set(L, F, G)
    if not is_filter(L, out):
        raise NotAFilterResult(f"elementwise join {L.fmt(out)} is not a filter", out)
    return FilterSet(L, out)


def residual_set(L: Lattice, q: Subset, p: Subset) -> int:
    """Raw ``{x : x v w in q for every w in p}``."""
    return _residual(L, _mask(q), _mask(p))


@lru_cache(maxsize=1 << 16)
def _residual(L: Lattice, qm: int, pm: int) -> int:
    ps = list(iter_bits(pm))
    out = 0
    for x in range(L.n):
        row = L.join[x]
        if all(qm >> row[w] & 1 for w in ps):
            out |= 1 << x
    return out


def residual_filter(L: Lattice, q: Subset, p: Subset) -> FilterSet:
    _same_lattice(L, q, p)
    out = residual_set(L, q, p)
    if not is_filter(L, out):
        raise NotAFilterResult(f"residual {L.fmt(out)} is not a filter", out)
    return FilterSet(L, out)


def residual_elem_set(L: Lattice, q: Subset, t: Elem) -> int:
    """Raw ``{x : x v t in q}``."""
    return _residual_elem(L, _mask(q), t)


@lru_cache(maxsize=1 << 16)
def _residual_elem(L: Lattice, qm: int, t: Elem) -> int:
    row = L.join[t]
    out = 0
    for x in range(L.n):
        if qm >> row[x] & 1:
            out |= 1 << x
    return out


def residual_elem(L: Lattice, q: Subset, t: Elem) -> FilterSet:
    out = residual_elem_set(L, q, t)
    if not is_filter(L, out):
        raise NotAFilterResult(f"residual {L.fmt(out)} is not a filter", out)
    return FilterSet(L, out)


def min_primes_over(L: Lattice, F: Subset) -> list[FilterSet]:
    """Prime filters containing ``F`` that are minimal among such primes."""
    m = _mask(F)
    if m >> L.bottom & 1:
        raise ImproperFilter("min_primes_over needs a proper filter")
    over = [P for P in _prime_masks(L) if is_subset(m, P)]
    minimal = [
        P for P in over
        if not any(Q != P and is_subset(Q, P) for Q in over)
    ]
    return [FilterSet(L, P) for P in sorted(minimal, key=canonical_key)]
