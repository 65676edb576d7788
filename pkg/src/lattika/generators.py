"""Lattice catalog: named fixtures, parametric families, Birkhoff lattices."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator

from .bits import canonical_key, iter_bits
from .errors import BadParams, TooLarge, UnknownName
from .lattice import MAX_ELEMENTS, Lattice, Poset, lattice_from_covers

# Knuth's MMIX linear congruential generator (mod 2**64).
LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
_MASK64 = (1 << 64) - 1

DEFAULT_SEED = 20250101
RANDOM_COUNT = 100
RANDOM_MAX_POSET = 5


class LCG:
    """64-bit LCG; each draw advances the state once and returns it."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (LCG_MULTIPLIER * self.state + LCG_INCREMENT) & _MASK64
        return self.state

    def bit(self) -> int:
        return self.next() >> 63


def chain(n: int) -> Lattice:
    if n < 1:
        raise BadParams("chain length must be >= 1")
    if n > MAX_ELEMENTS:
        raise TooLarge(f"chain({n}) exceeds {MAX_ELEMENTS} elements")
    names = [str(i) for i in range(n)]
    return lattice_from_covers(Poset(names, zip(names, names[1:])), name=f"chain-{n}")


def _boolean_label(bits: int, k: int) -> str:
    if bits == 0:
        return "0"
    if bits == (1 << k) - 1:
        return "1"
    return "".join(chr(ord("a") + i) for i in iter_bits(bits))


def boolean(k: int) -> Lattice:
    """The Boolean lattice of subsets of ``k`` atoms named ``a, b, c, ...``."""
    if k < 0:
        raise BadParams("boolean rank must be >= 0")
    if 1 << k > MAX_ELEMENTS:
        raise TooLarge(f"boolean({k}) exceeds {MAX_ELEMENTS} elements")
    size = 1 << k
    names = [_boolean_label(x, k) for x in range(size)]
    up = [sum(1 << y for y in range(size) if x & y == x) for x in range(size)]
    return Lattice(names, up, name=f"boolean-{k}")


_NAMED = {
    # 0 < u, v < w < 1 with u v v = w and u ^ v = 0
    "ex5": (["0", "u", "v", "w", "1"],
            [("0", "u"), ("0", "v"), ("u", "w"), ("v", "w"), ("w", "1")]),
    "m3": (["0", "a", "b", "c", "1"],
           [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")]),
    "n5": (["0", "a", "b", "c", "1"],
           [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")]),
}


def named(name: str) -> Lattice:
    try:
        names, covers = _NAMED[name]
    except KeyError:
        raise UnknownName(f"unknown named lattice {name!r}; known: {sorted(_NAMED)}") from None
    return lattice_from_covers(Poset(names, covers), name=name)


def divisor_lattice(n: int) -> Lattice:
    if n < 1:
        raise BadParams("divisor_lattice needs n >= 1")
    divs = [d for d in range(1, n + 1) if n % d == 0]
    if len(divs) > MAX_ELEMENTS:
        raise TooLarge(f"{n} has more than {MAX_ELEMENTS} divisors")
    up = [sum(1 << j for j, e in enumerate(divs) if e % d == 0) for d in divs]
    return Lattice([str(d) for d in divs], up, name=f"divisors-{n}")


def downset_lattice(poset: Poset, name: str = "") -> Lattice:
    """All down-sets of ``poset`` ordered by inclusion (always distributive)."""
    up = poset.up_masks()
    k = len(poset.names)
    down = [0] * k
    for a in range(k):
        for b in iter_bits(up[a]):
            down[b] |= 1 << a
    sets = []
    # grow down-sets by adding elements whose strict down-set is already present
    seen = {0}
    frontier = [0]
    while frontier:
        d = frontier.pop()
        sets.append(d)
        if len(seen) > MAX_ELEMENTS:
            raise TooLarge(f"poset has more than {MAX_ELEMENTS} down-sets")
        for x in range(k):
            if not d >> x & 1 and down[x] & ~(1 << x) & ~d == 0:
                e = d | (1 << x)
                if e not in seen:
                    seen.add(e)
                    frontier.append(e)
    sets.sort(key=canonical_key)
    labels = ["{" + ",".join(poset.names[i] for i in iter_bits(d)) + "}" for d in sets]
    ups = [sum(1 << j for j, e in enumerate(sets) if d & e == d) for d in sets]
    return Lattice(labels, ups, name=name)


def random_poset(n: int, seed: int) -> Poset:
    """Deterministic random poset on ``p0 .. p{n-1}``.

    Each pair ``i < j`` (in lexicographic order) becomes a relation ``pi < pj``
    when the top bit of the next LCG draw is set; the result is the transitive
    closure, returned as its cover relation.
    """
    if not 1 <= n <= 6:
        raise BadParams("random_poset supports 1 <= n <= 6")
    rng = LCG(seed)
    names = [f"p{i}" for i in range(n)]
    rel = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.bit():
                rel.append((names[i], names[j]))
    up = Poset(names, rel).up_masks()
    covers = []
    for i in range(n):
        strict = up[i] & ~(1 << i)
        for j in iter_bits(strict):
            if not any(up[k] >> j & 1 for k in iter_bits(strict & ~(1 << j))):
                covers.append((names[i], names[j]))
    return Poset(names, covers)


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    lattice: Lattice
    provenance: str


def build(provenance: str) -> Lattice:
    """Reconstruct a lattice from its provenance descriptor, e.g. ``chain:5``."""
    family, _, arg = provenance.partition(":")
    try:
        if family == "chain":
            return chain(int(arg))
        if family == "boolean":
            return boolean(int(arg))
        if family == "divisors":
            return divisor_lattice(int(arg))
        if family == "random":
            n, seed = (int(x) for x in arg.split(","))
            return downset_lattice(random_poset(n, seed), name=f"random-{n}-{seed}")
    except ValueError:
        raise BadParams(f"bad parameters in {provenance!r}") from None
    if not arg and family in _NAMED:
        return named(family)
    raise UnknownName(f"unknown lattice descriptor {provenance!r}")


def default_seed() -> int:
    raw = os.environ.get("LATTIKA_SEED")
    if raw is None or raw == "":
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise BadParams(f"LATTIKA_SEED must be an integer, got {raw!r}") from None


def default_provenances(seed: int | None = None, random_count: int = RANDOM_COUNT) -> list[str]:
    if seed is None:
        seed = default_seed()
    out = [f"chain:{n}" for n in range(2, 7)]
    out += [f"boolean:{k}" for k in range(1, 4)]
    out += ["ex5", "m3", "n5"]
    out += [f"divisors:{m}" for m in (12, 30, 36, 60)]
    # poset sizes cycle through 1..5; seeds are consecutive from the base seed
    out += [f"random:{1 + i % RANDOM_MAX_POSET},{seed + i}" for i in range(random_count)]
    return out


def _entry_id(provenance: str, position: int) -> str:
    family, _, arg = provenance.partition(":")
    if family == "random":
        return f"random-{position:03d}"
    if family in ("chain", "boolean", "divisors"):
        return f"{family}-{int(arg):02d}"
    return family


def default_catalog(seed: int | None = None, random_count: int = RANDOM_COUNT) -> list[CatalogEntry]:
    """The verification catalog, sorted by entry id."""
    entries = []
    rand_pos = 0
    for prov in default_provenances(seed, random_count):
        if prov.startswith("random:"):
            eid = _entry_id(prov, rand_pos)
            rand_pos += 1
        else:
            eid = _entry_id(prov, 0)
        L = build(prov)
        L.name = eid
        entries.append(CatalogEntry(eid, L, prov))
    entries.sort(key=lambda e: e.id)
    return entries


def iter_catalog(entries: list[CatalogEntry], max_size: int | None = None) -> Iterator[CatalogEntry]:
    for e in entries:
        if max_size is None or e.lattice.n <= max_size:
            yield e

