"""Finite bounded lattices with precomputed order, meet and join tables.

Elements are identified by position (``0 .. n-1``); labels are only used
for input and output.  Subsets of elements are ints used as bit-vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .bits import iter_bits, to_mask
from .errors import BadParams, CyclicCovers, NotALattice, TooLarge, Unbounded

MAX_ELEMENTS = 64

Elem = int


@dataclass(frozen=True)
class Poset:
    """A finite poset given by element labels and cover pairs ``(lower, upper)``."""

    names: tuple[str, ...]
    covers: tuple[tuple[str, str], ...] = field(default_factory=tuple)

    def __init__(self, names: Iterable[str], covers: Iterable[Sequence[str]] = ()):
        object.__setattr__(self, "names", tuple(str(x) for x in names))
        object.__setattr__(self, "covers", tuple((str(a), str(b)) for a, b in covers))

    def up_masks(self) -> list[int]:
        """Reflexive-transitive closure as a list of up-set masks."""
        return _closure(self.names, self.covers)


def _closure(names: Sequence[str], covers: Iterable[tuple[str, str]]) -> list[int]:
    n = len(names)
    index = {}
    for i, name in enumerate(names):
        if name in index:
            raise BadParams(f"duplicate element label {name!r}")
        index[name] = i
    succ = [0] * n
    for lo, hi in covers:
        if lo not in index or hi not in index:
            missing = lo if lo not in index else hi
            raise BadParams(f"cover ({lo}, {hi}) references unknown label {missing!r}")
        if lo == hi:
            raise CyclicCovers(f"self-loop cover on {lo!r}")
        succ[index[lo]] |= 1 << index[hi]

    up = [(1 << i) | succ[i] for i in range(n)]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = up[i]
            for j in iter_bits(up[i] & ~(1 << i)):
                acc |= up[j]
            if acc != up[i]:
                up[i] = acc
                changed = True
    for i in range(n):
        for j in iter_bits(up[i] & ~(1 << i)):
            if up[j] >> i & 1:
                raise CyclicCovers(f"cycle through {names[i]!r} and {names[j]!r}")
    return up


class Lattice:
    """An immutable, fully validated finite bounded lattice.

    ``up[a]`` / ``down[a]`` are the masks of elements above / below ``a``;
    ``meet[a][b]`` and ``join[a][b]`` are table lookups.
    """

    def __init__(self, names: Sequence[str], up: Sequence[int], name: str = ""):
        n = len(names)
        if n > MAX_ELEMENTS:
            raise TooLarge(f"{n} elements exceeds the limit of {MAX_ELEMENTS}")
        if n == 0:
            raise Unbounded("empty poset has no bottom or top")
        if len(set(names)) != n:
            raise BadParams("element labels must be distinct")
        self.name = name
        self.n = n
        self.names: tuple[str, ...] = tuple(names)
        self.index = {x: i for i, x in enumerate(self.names)}
        self.full = (1 << n) - 1
        self.up: tuple[int, ...] = tuple(up)
        down = [0] * n
        for a in range(n):
            for b in iter_bits(self.up[a]):
                down[b] |= 1 << a
        self.down: tuple[int, ...] = tuple(down)

        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for a in range(n):
            meet[a][a] = join[a][a] = a
            for b in range(a + 1, n):
                m = _extremum(self.down, self.down[a] & self.down[b])
                if m is None:
                    raise NotALattice(
                        f"{names[a]!r} and {names[b]!r} have no greatest lower bound",
                        (names[a], names[b]),
                    )
                j = _extremum(self.up, self.up[a] & self.up[b])
                if j is None:
                    raise NotALattice(
                        f"{names[a]!r} and {names[b]!r} have no least upper bound",
                        (names[a], names[b]),
                    )
                meet[a][b] = meet[b][a] = m
                join[a][b] = join[b][a] = j
        self.meet: tuple[tuple[int, ...], ...] = tuple(map(tuple, meet))
        self.join: tuple[tuple[int, ...], ...] = tuple(map(tuple, join))

        bottom = [a for a in range(n) if self.up[a] == self.full]
        top = [a for a in range(n) if self.down[a] == self.full]
        if not bottom or not top:
            raise Unbounded("lattice lacks a bottom or top element")
        self.bottom: Elem = bottom[0]
        self.top: Elem = top[0]
        self._hash = hash((self.names, self.up))

    # -- labels <-> elements ------------------------------------------------

    def elem(self, label: str) -> Elem:
        try:
            return self.index[str(label)]
        except KeyError:
            raise BadParams(f"unknown element label {label!r}") from None

    def mask(self, labels: Iterable[str]) -> int:
        return to_mask(self.elem(x) for x in labels)

    def labels(self, mask: int) -> list[str]:
        return [self.names[i] for i in iter_bits(mask)]

    def fmt(self, mask: int) -> str:
        return "{" + ",".join(self.labels(mask)) + "}"

    # -- structure ----------------------------------------------------------

    @property
    def leq_matrix(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(
            tuple(bool(self.up[a] >> b & 1) for b in range(self.n)) for a in range(self.n)
        )

    @cached_property
    def covers(self) -> tuple[tuple[Elem, Elem], ...]:
        out = []
        for a in range(self.n):
            for b in iter_bits(self.up[a] & ~(1 << a)):
                if self.up[a] & self.down[b] == (1 << a) | (1 << b):
                    out.append((a, b))
        return tuple(out)

    @cached_property
    def distributive(self) -> bool:
        return _check_distributive(self)

    @cached_property
    def modular(self) -> bool:
        mt, jn, up = self.meet, self.join, self.up
        for a in range(self.n):
            for c in iter_bits(up[a]):
                for b in range(self.n):
                    if jn[a][mt[b][c]] != mt[jn[a][b]][c]:
                        return False
        return True

    @cached_property
    def complemented(self) -> bool:
        return all(complements(self, a) for a in range(self.n))

    @property
    def is_trivial(self) -> bool:
        return self.n == 1

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.names == other.names and self.up == other.up

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<Lattice{tag} n={self.n}>"


def _extremum(cone: Sequence[int], bounds: int) -> int | None:
    """The element of ``bounds`` whose cone is exactly ``bounds``, if any."""
    for g in iter_bits(bounds):
        if cone[g] == bounds:
            return g
    return None


def _check_distributive(L: Lattice) -> bool:
    mt, jn, n = L.meet, L.join, L.n
    for a in range(n):
        ma = mt[a]
        for b in range(n):
            mab = ma[b]
            jb = jn[b]
            for c in range(b + 1, n):
                if ma[jb[c]] != jn[mab][ma[c]]:
                    return False
    return True


def lattice_from_covers(poset: Poset, name: str = "") -> Lattice:
    """Build and validate the lattice whose order is generated by ``poset.covers``."""
    if len(poset.names) > MAX_ELEMENTS:
        raise TooLarge(f"{len(poset.names)} elements exceeds the limit of {MAX_ELEMENTS}")
    return Lattice(poset.names, poset.up_masks(), name=name)


def leq(L: Lattice, a: Elem, b: Elem) -> bool:
    return bool(L.up[a] >> b & 1)


def meet(L: Lattice, a: Elem, b: Elem) -> Elem:
    return L.meet[a][b]


def join(L: Lattice, a: Elem, b: Elem) -> Elem:
    return L.join[a][b]


def is_distributive(L: Lattice) -> bool:
    """True iff ``a ^ (b v c) == (a ^ b) v (a ^ c)`` for every triple."""
    return L.distributive


def is_modular(L: Lattice) -> bool:
    return L.modular


def complements(L: Lattice, a: Elem) -> set[Elem]:
    ja, ma = L.join[a], L.meet[a]
    return {v for v in range(L.n) if ja[v] == L.top and ma[v] == L.bottom}


def is_complemented(L: Lattice) -> bool:
    return L.complemented


def is_l_domain(L: Lattice) -> bool:
    """No two elements below top join to top."""
    top = L.top
    for a in range(L.n):
        if a == top:
            continue
        row = L.join[a]
        for b in range(a, L.n):
            if b != top and row[b] == top:
                return False
    return True


def has_forbidden_sublattice(L: Lattice) -> bool:
    """Search for a pentagon or diamond sublattice (the M3/N5 criterion).

    Used only to cross-check the triple-based distributivity test.
    """
    mt, jn, n = L.meet, L.join, L.n
    for x in range(n):
        for y in range(x + 1, n):
            if L.up[x] >> y & 1 or L.up[y] >> x & 1:
                continue
            lo, hi = mt[x][y], jn[x][y]
            for z in range(n):
                if z in (x, y, lo, hi):
                    continue
                # diamond: x, y, z pairwise with common meet and join
                if (
                    mt[x][z] == lo and mt[y][z] == lo
                    and jn[x][z] == hi and jn[y][z] == hi
                ):
                    return True
                # pentagon: z strictly above x, incomparable to y, x v y = z v y, x ^ y = z ^ y
                if (
                    z != x and L.up[x] >> z & 1
                    and not (L.up[y] >> z & 1 or L.up[z] >> y & 1)
                    and mt[z][y] == lo and jn[z][y] == hi
                ):
                    return True
    return False
