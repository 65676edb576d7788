"""Exhaustive theorem sweeps over a lattice catalog, and counterexample hunting.

Every theorem is registered with the hypotheses a hunt may drop.  A sweep
walks instances in a fixed order (lattice id, S bit-pattern, filter
bit-pattern), so the first witness of any hunt is stable across machines.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .bits import is_subset, iter_bits
from .constructions import LatticeHom, ProductLattice, all_homs, product_s_filter_sides, quotient
from .errors import (
    DecompositionMismatch,
    EmptyCatalog,
    QuotientOrderIllDefined,
    TooLarge,
    UnknownHypothesis,
    UnknownTheorem,
)
from .filters import filter_masks, is_filter, is_prime_filter, min_primes_over, residual_set
from .generators import CatalogEntry
from .lattice import Lattice
from .serialize import lattice_to_doc
from .sfilters import (
    check_ghasem_equivalences,
    check_pair_characterization,
    find_prime_s_filter_containing,
    is_s_complete,
    is_s_filter,
    is_vee_closed,
    iter_vee_closed_masks,
    maximal_s_filters,
    s_complete_decomposition,
    saturate,
    union_complement,
)

DEFAULT_VC_BUDGET = 250_000
SMALL_FACTOR_SIZE = 4
DECOMPOSITION_MAX_SIZE = 6


class _Found(Exception):
    pass


class _Recorder:
    def __init__(self, first_only: bool = False):
        self.instances = 0
        self.witnesses: list[dict] = []
        self.first_only = first_only
        self.notes: dict = {}

    def hit(self) -> None:
        self.instances += 1

    def fail(self, witness: dict) -> None:
        self.witnesses.append(witness)
        if self.first_only:
            raise _Found


class _Data:
    """Per-lattice enumerations shared by all checks on that lattice."""

    def __init__(self, lattice_id: str, L: Lattice, budget: int | None):
        self.id = lattice_id
        self.L = L
        self.budget = budget
        self._s_filters: dict[int, list[int]] = {}
        self._min_primes: dict[int, list[int]] = {}

    @cached_property
    def vc(self) -> list[int]:
        return sorted(iter_vee_closed_masks(self.L, self.budget))

    @cached_property
    def filters(self) -> list[int]:
        return sorted(filter_masks(self.L))

    @cached_property
    def proper(self) -> list[int]:
        return [m for m in self.filters if not m >> self.L.bottom & 1]

    @cached_property
    def primes(self) -> list[int]:
        return [m for m in self.proper if is_prime_filter(self.L, m)]

    def s_filters(self, S: int) -> list[int]:
        got = self._s_filters.get(S)
        if got is None:
            got = [q for q in self.proper if is_s_filter(self.L, S, q)]
            self._s_filters[S] = got
        return got

    def min_primes(self, q: int) -> list[int]:
        got = self._min_primes.get(q)
        if got is None:
            got = [P.mask for P in min_primes_over(self.L, q)]
            self._min_primes[q] = got
        return got


def _witness(L: Lattice, S: int | None = None, detail: str = "", **sets: int) -> dict:
    w = {"lattice": lattice_to_doc(L)}
    if S is not None:
        w["S"] = L.labels(S)
    if sets:
        w["sets"] = {k: L.labels(v) for k, v in sets.items()}
    w["detail"] = detail
    return w


def _hom_witness(psi: LatticeHom, desc: str, S: int, detail: str, **sets: tuple[Lattice, int]) -> dict:
    L1, L2 = psi.domain, psi.codomain
    return {
        "hom": desc,
        "domain": lattice_to_doc(L1),
        "codomain": lattice_to_doc(L2),
        "mapping": {L1.names[x]: L2.names[y] for x, y in enumerate(psi.mapping)},
        "S": L1.labels(S),
        "sets": {k: lat.labels(m) for k, (lat, m) in sets.items()},
        "detail": detail,
    }


def _filter_defect(L: Lattice, m: int) -> str:
    if m == 0:
        return "empty"
    for a in iter_bits(m):
        if L.up[a] & ~m:
            b = next(iter_bits(L.up[a] & ~m))
            return f"not upward closed: {L.names[a]} <= {L.names[b]}"
    for a in iter_bits(m):
        for b in iter_bits(m):
            c = L.meet[a][b]
            if not m >> c & 1:
                return f"not meet-closed: {L.names[a]} ^ {L.names[b]} = {L.names[c]} outside"
    return "is a filter"


# -- per-lattice checks -------------------------------------------------------


def _prop1_disjoint(d: _Data, rec: _Recorder, dropped: frozenset) -> None:
    L = d.L
    for S in d.vc:
        for q in d.s_filters(S):
            rec.hit()
            if q & S:
                rec.fail(_witness(L, S, "S-filter meets S", q=q))


def _residual_closure(L: Lattice, q: int, ws: Iterable[int]) -> list[int]:
    """Every distinct (q : p) for nonempty p drawn from ``ws``.

    (q : p) is the intersection of the single-element residuals (q : w) over
    w in p, so closing those under intersection covers every subset p.
    """
    singles = {residual_set(L, q, 1 << w) for w in ws}
    seen = set(singles)
    frontier = list(singles)
    while frontier:
        nxt = []
        for a in frontier:
            for b in singles:
                c = a & b
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return sorted(seen)


def _prop1_residual(d: _Data, rec: _Recorder, dropped: frozenset) -> None:
    L = d.L
    for S in d.vc:
        for q in d.s_filters(S):
            ws = range(L.n) if "p-outside-q" in dropped else iter_bits(L.full & ~q)
            for r in _residual_closure(L, q, ws):
                rec.hit()
                if not is_filter(L, r):
                    rec.fail(_witness(L, S, f"residual {_filter_defect(L, r)}", q=q, residual=r))
                elif not is_s_filter(L, S, r):
                    rec.fail(_witness(L, S, "residual is not an S-filter", q=q, residual=r))


def _remark_prime(d: _Data, rec: _Recorder, dropped: frozenset) -> None:
    L = d.L
    cands = d.proper if "prime" in dropped else d.primes
    for S in d.vc:
        for q in cands:
            rec.hit()
            sf = is_s_filter(L, S, q)
            if sf != (not q & S):
                rec.fail(_witness(
                    L, S, f"S-filter={sf} but disjoint-from-S={not q & S}", q=q))


def _thm2_pairs(d: _Data, rec: _Recorder, dropped: frozenset) -> None:
    L = d.L
    qs = d.filters if "proper" in dropped else d.proper
    for S in d.vc:
        for q in qs:
            rec.hit()
            sf = is_s_filter(L, S, q)
            pair, wit = check_pair_characterization(L, S, q)
            if sf != pair:
                extra = {}
                if wit is not None:
                    extra = {"r": wit[0].mask, "p": wit[1].mask}
                rec.fail(_witness(L, S, f"S-filter={sf} but pair condition={pair}", q=q, **extra))


def _thm_small(d: _Data, rec: _Recorder, dropped: frozenset) -> None:
    L = d.L
    for S in d.vc:
        for p in d.filters:
            if "disjoint" not in dropped and p & S:
                continue
            rec.hit()
            sat = saturate(L, S, p).mask
            if not is_filter(L, sat):
                rec.fail(_witness(L, S, f"saturation {_filter_defect(L, sat)}", p=p, saturation=sat))
                continue
            if not is_s_filter(L, S, sat):
                rec.fail(_witness(L, S, "saturation is not an S-filter", p=p, saturation=sat))
                continue
            if not is_subset(p, sat):
                rec.fail(_witness(L, S, "saturation does not contain p", p=p, saturation=sat))
                continue
            for q in d.s_filters(S):
                if is_subset(p, q) and not is_subset(sat, q):
                    rec.fail(_witness(
                        L, S, "saturation not below an S-filter containing p",
                        p=p, saturation=sat, q=q))
                    break


def _thm_ghasem(d: _Data, rec: _Recorder, dropped: frozenset) -> None:
    L = d.L
    qs = d.filters if "proper" in dropped else d.proper
    for S in d.vc:
        for q in qs:
            rec.hit()
            flags = check_ghasem_equivalences(L, S, q)
            if len(set(flags)) > 1:
                rec.fail(_witness(
                    L, S, "S-filter / residuals fixed / saturation fixed = %s / %s / %s" % flags,
                    q=q))


def _avoidance_families(d: _Data, dropped: frozenset, max_n: int = 3):
    """S-independent part: ordered families (p, q1..qn) passing cover checks."""
    P = d.proper
    out = []
    for n in range(1, max_n + 1):
        for qs in itertools.product(P, repeat=n):
            union = 0
            for x in qs:
                union |= x
            rests = []
            for i in range(n):
                rest = 0
                for j, x in enumerate(qs):
                    if j != i:
                        rest |= x
                rests.append(rest)
            for p in P:
                if "cover" not in dropped and not is_subset(p, union):
                    continue
                if "irredundant" not in dropped and any(is_subset(p, r) for r in rests):
                    continue
                out.append((p, qs))
    return out


def _thm3_avoidance(d: _Data, rec: _Recorder, dropped: frozenset) -> None:
    L = d.L
    fams = _avoidance_families(d, dropped)
    by_n = rec.notes.setdefault("non_vacuous_by_n", {"1": 0, "2": 0, "3": 0})
    for S in d.vc:
        for p, qs in fams:
            if "q1-s-filter" not in dropped and not is_s_filter(L, S, qs[0]):
                continue
            if "others-meet-s" not in dropped and any(not x & S for x in qs[1:]):
                continue
            rec.hit()
            by_n[str(len(qs))] += 1
            if not is_subset(p, qs[0]):
                sets = {"p": p, **{f"q{i + 1}": x for i, x in enumerate(qs)}}
                rec.fail(_witness(L, S, "p is not contained in q1", **sets))


def _prop_intersection(d: _Data, rec: _Recorder, dropped: frozenset) -> None:
    L = d.L
    for S in d.vc:
        fam = d.proper if "s-filters" in dropped else d.s_filters(S)
        for i, a in enumerate(fam):
            for b in fam[i:]:
                rec.hit()
                if not is_s_filter(L, S, a & b):
                    rec.fail(_witness(L, S, "intersection is not an S-filter", q1=a, q2=b))
        if len(fam) > 2:
            rec.hit()
            acc = L.full
            for q in fam:
                acc &= q
            if not is_s_filter(L, S, acc):
                rec.fail(_witness(L, S, "intersection of the whole family is not an S-filter",
                                  intersection=acc))


def _thm_khamen(d: _Data, rec: _Recorder, dropped: frozenset) -> None:
    L = d.L
    for S in d.vc:
        for F in d.proper:
            if F & S:
                if "disjoint" not in dropped:
                    continue
                rec.hit()
                if not any(is_subset(F, q) for q in d.s_filters(S)):
                    rec.fail(_witness(L, S, "no S-filter contains F", F=F))
                continue
            rec.hit()
            q = find_prime_s_filter_containing(L, S, F).mask
            problems = []
            if not is_subset(F, q):
                problems.append("does not contain F")
            if q & S:
                problems.append("meets S")
            if not is_prime_filter(L, q):
                problems.append("not prime")
            if not is_s_filter(L, S, q):
                problems.append("not an S-filter")
            if problems:
                rec.fail(_witness(L, S, "maximal S-disjoint filter " + ", ".join(problems), F=F, q=q))


def _thm_minprime(d: _Data, rec: _Recorder, dropped: frozenset) -> None:
    L = d.L
    for S in d.vc:
        qs = d.proper if "s-filter" in dropped else d.s_filters(S)
        for q in qs:
            for P in d.min_primes(q):
                rec.hit()
                if not is_s_filter(L, S, P):
                    rec.fail(_witness(L, S, "minimal prime over q is not an S-filter", q=q, prime=P))


def _thm_maximal_prime(d: _Data, rec: _Recorder, dropped: frozenset) -> None:
    L = d.L
    for S in d.vc:
        if "maximal" in dropped:
            qs = d.s_filters(S)
        else:
            qs = [q.mask for q in maximal_s_filters(L, S)]
        for q in qs:
            rec.hit()
            if not is_prime_filter(L, q):
                rec.fail(_witness(L, S, "maximal S-filter is not prime", q=q))


def _distinct_unions(fam: Sequence[int]) -> list[int]:
    unions = {0}
    for f in fam:
        unions |= {u | f for u in unions}
    return sorted(unions)


def _prop_complete(d: _Data, rec: _Recorder, dropped: frozenset) -> None:
    L = d.L
    zero = 1 << L.bottom
    for S in d.vc:
        if "s-nontrivial" not in dropped and S == zero:
            continue
        fam = d.proper if "s-filters" in dropped else d.s_filters(S)
        for U in _distinct_unions(fam):
            rec.hit()
            Sp = L.full & ~U
            if not is_s_complete(L, S, Sp):
                rec.fail(_witness(L, S, "complement of a union of S-filters is not S-complete",
                                  union=U, complement=Sp))


def _thm_complete_decomp(d: _Data, rec: _Recorder, dropped: frozenset) -> None:
    L = d.L
    for S in d.vc:
        rest = L.full & ~S
        sub = 0
        # every Sp containing S, in increasing bit-pattern order
        while True:
            Sp = S | sub
            rec.hit()
            complete = is_s_complete(L, S, Sp)
            try:
                got = s_complete_decomposition(L, S, Sp)
            except DecompositionMismatch as exc:
                rec.fail(_witness(L, S, str(exc), Sp=Sp))
            else:
                if (got is not None) != complete:
                    rec.fail(_witness(L, S, "decomposition outcome disagrees", Sp=Sp))
                elif got is not None and union_complement(L, got) != Sp:
                    rec.fail(_witness(L, S, "complement of the union differs", Sp=Sp))
            if sub == rest:
                break
            sub = (sub - rest) & rest


def _cor_quotient(d: _Data, rec: _Recorder, dropped: frozenset) -> None:
    L = d.L
    if "complemented" not in dropped and not L.complemented:
        return
    for p in d.filters:
        try:
            Q = quotient(L, p)
        except QuotientOrderIllDefined as exc:
            rec.hit()
            rec.fail(_witness(L, None, f"quotient undefined: {exc}", p=p))
            continue
        proj = Q.projection
        QL = Q.quotient
        for S in d.vc:
            Sbar = proj.image(S)
            if not is_vee_closed(QL, Sbar):
                rec.hit()
                rec.fail(_witness(L, S, "image of S is not join-closed in the quotient", p=p))
                continue
            for q in d.s_filters(S):
                if "modulus-contained" not in dropped and not is_subset(p, q):
                    continue
                rec.hit()
                qbar = proj.image(q)
                if not is_s_filter(QL, Sbar, qbar):
                    rec.fail(_witness(L, S, "q/p is not an S-bar-filter of L/p", p=p, q=q))


# -- checks over homomorphisms and products -----------------------------------


def _distinct_small(datas: Sequence[_Data], max_size: int) -> list[_Data]:
    seen: list[Lattice] = []
    out = []
    for d in datas:
        if d.L.n <= max_size and d.L not in seen:
            seen.append(d.L)
            out.append(d)
    return out


def _generated_homs(datas: Sequence[_Data], budget: int | None):
    """(domain data, hom, descriptor) for every hom family the sweeps use."""
    cache: dict[int, _Data] = {}

    def data_for(L: Lattice, lid: str) -> _Data:
        key = id(L)
        if key not in cache:
            cache[key] = _Data(lid, L, budget)
        return cache[key]

    for d in datas:
        for p in d.filters:
            try:
                Q = quotient(d.L, p)
            except QuotientOrderIllDefined:
                continue
            yield d, Q.projection, f"{d.id} -> {d.id}/{d.L.fmt(p)}"
    small = _distinct_small(datas, SMALL_FACTOR_SIZE)
    for a in small:
        for b in small:
            if a.L.n < 2 or b.L.n < 2:
                continue
            P = ProductLattice([a.L, b.L])
            pd = data_for(P.lattice, f"{a.id} x {b.id}")
            for k, proj in enumerate(P.projections):
                yield pd, proj, f"{a.id} x {b.id} -> factor {k + 1}"
    for a in small:
        for b in small:
            for psi in all_homs(a.L, b.L):
                yield a, psi, f"{a.id} -> {b.id} {list(psi.mapping)}"


def _thm_homo_1(datas: Sequence[_Data], rec: _Recorder, dropped: frozenset, budget) -> None:
    not_vee = 0
    for d, psi, desc in _generated_homs(datas, budget):
        if "top-preserving" not in dropped and not psi.top_preserving:
            continue
        L2 = psi.codomain
        pre = {q2: psi.preimage(q2) for q2 in sorted(filter_masks(L2))}
        for S in d.vc:
            image = psi.image(S)
            if not is_vee_closed(L2, image):
                not_vee += 1
            for q2, back in pre.items():
                if not is_s_filter(L2, image, q2):
                    continue
                rec.hit()
                if not is_s_filter(d.L, S, back):
                    rec.fail(_hom_witness(psi, desc, S, "preimage is not an S-filter",
                                          q2=(L2, q2), preimage=(d.L, back)))
    rec.notes["image_of_S_not_join_closed"] = not_vee


def _thm_homo_2(datas: Sequence[_Data], rec: _Recorder, dropped: frozenset, budget) -> None:
    for d, psi, desc in _generated_homs(datas, budget):
        L1, L2 = psi.domain, psi.codomain
        if "top-preserving" not in dropped and not psi.top_preserving:
            continue
        if "complemented" not in dropped and not L1.complemented:
            continue
        if "onto" not in dropped and not psi.onto:
            continue
        ker = psi.preimage(1 << L2.top)
        for S in d.vc:
            image_S = psi.image(S)
            for q1 in d.s_filters(S):
                if "kernel-contained" not in dropped and not is_subset(ker, q1):
                    continue
                rec.hit()
                img = psi.image(q1)
                if not is_s_filter(L2, image_S, img):
                    rec.fail(_hom_witness(psi, desc, S, "image is not a psi(S)-filter",
                                          q1=(L1, q1), image=(L2, img)))


def _thm_car(datas: Sequence[_Data], rec: _Recorder, dropped: frozenset, budget) -> None:
    small = _distinct_small(datas, SMALL_FACTOR_SIZE)
    for a in small:
        for b in small:
            P = ProductLattice([a.L, b.L])
            fa = a.filters if "proper-components" in dropped else a.proper
            fb = b.filters if "proper-components" in dropped else b.proper
            for S1 in a.vc:
                for S2 in b.vc:
                    for q1 in fa:
                        for q2 in fb:
                            rec.hit()
                            lhs, rhs = product_s_filter_sides(P, [S1, S2], [q1, q2])
                            if lhs != rhs:
                                rec.fail({
                                    "factors": [lattice_to_doc(a.L), lattice_to_doc(b.L)],
                                    "S": [a.L.labels(S1), b.L.labels(S2)],
                                    "q": [a.L.labels(q1), b.L.labels(q2)],
                                    "detail": f"product side {lhs}, componentwise side {rhs}",
                                })


# -- registry -----------------------------------------------------------------


@dataclass(frozen=True)
class Theorem:
    id: str
    statement: str
    hypotheses: tuple[str, ...]
    distributive_only: bool
    check: Callable
    per_lattice: bool = True
    max_size: int | None = None


THEOREMS: dict[str, Theorem] = {}


def _register(*args, **kwargs) -> None:
    t = Theorem(*args, **kwargs)
    THEOREMS[t.id] = t


_register("prop1-disjoint", "every S-filter is disjoint from S", (), False, _prop1_disjoint)
_register("prop1-residual", "(q : p) is an S-filter when q is and p is a nonempty subset outside q",
          ("distributive", "p-outside-q"), True, _prop1_residual)
_register("remark-prime", "a prime filter is an S-filter iff it is disjoint from S",
          ("prime",), False, _remark_prime)
_register("thm2-pairs", "S-filter iff r v p inside q and r meeting S force p inside q",
          ("distributive", "proper"), True, _thm2_pairs)
_register("thm-small", "saturation is the smallest S-filter containing a disjoint filter",
          ("distributive", "disjoint"), True, _thm_small)
_register("thm-ghasem", "S-filter iff residuals by S are fixed iff saturation is fixed",
          ("proper",), False, _thm_ghasem)
_register("thm3-avoidance", "S-filter prime avoidance",
          ("cover", "irredundant", "q1-s-filter", "others-meet-s"), False, _thm3_avoidance)
_register("prop-intersection", "intersections of S-filters are S-filters",
          ("s-filters",), False, _prop_intersection)
_register("thm-khamen", "a filter disjoint from S extends to a prime S-filter",
          ("distributive", "disjoint"), True, _thm_khamen)
_register("thm-minprime", "minimal primes over an S-filter are S-filters",
          ("distributive", "s-filter"), True, _thm_minprime)
_register("thm-maximal-prime", "maximal S-filters are prime",
          ("distributive", "maximal"), True, _thm_maximal_prime)
_register("prop-complete", "complements of unions of S-filters are S-complete",
          ("s-nontrivial", "s-filters"), False, _prop_complete)
_register("thm-complete-decomp", "S-complete sets containing S are complements of S-filter unions",
          ("distributive",), True, _thm_complete_decomp, max_size=DECOMPOSITION_MAX_SIZE)
_register("thm-homo-1", "preimages of psi(S)-filters are S-filters",
          ("top-preserving",), False, _thm_homo_1, per_lattice=False)
_register("thm-homo-2", "images of kernel-containing S-filters are psi(S)-filters",
          ("top-preserving", "complemented", "onto", "kernel-contained"), False, _thm_homo_2,
          per_lattice=False)
_register("cor-quotient", "q/p is an S-bar-filter of L/p",
          ("distributive", "complemented", "modulus-contained"), True, _cor_quotient)
_register("thm-car", "a product filter is a product-S-filter iff every component is",
          ("proper-components",), False, _thm_car, per_lattice=False)


# -- reports ------------------------------------------------------------------


@dataclass
class VerificationReport:
    theorem: str
    instances: int = 0
    violations: int = 0
    witnesses: list[dict] = field(default_factory=list)
    distributive_only: bool = False
    wall_time: float = 0.0
    lattices: int = 0
    skipped: list[str] = field(default_factory=list)
    outside_scope: dict | None = None
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "instances": self.instances,
            "violations": self.violations,
            "passed": self.passed,
            "distributive_only": self.distributive_only,
            "lattices": self.lattices,
            "skipped": self.skipped,
            "witnesses": self.witnesses,
        }
        if self.outside_scope is not None:
            out["outside_scope"] = self.outside_scope
        if self.notes:
            out["notes"] = self.notes
        if timings:
            out["wall_time"] = round(self.wall_time, 3)
        return out


def reports_to_jsonl(reports: Sequence[VerificationReport], timings: bool = False) -> str:
    lines = [json.dumps(r.to_dict(timings), sort_keys=True) for r in reports]
    summary = {
        "summary": True,
        "theorems": len(reports),
        "instances": sum(r.instances for r in reports),
        "violations": sum(r.violations for r in reports),
        "passed": all(r.passed for r in reports),
    }
    lines.append(json.dumps(summary, sort_keys=True))
    return "\n".join(lines) + "\n"


def _select(theorems: str | Iterable[str] | None) -> list[Theorem]:
    if theorems is None:
        return list(THEOREMS.values())
    ids = [theorems] if isinstance(theorems, str) else list(theorems)
    out = []
    for tid in ids:
        if tid not in THEOREMS:
            raise UnknownTheorem(f"unknown theorem {tid!r}; known: {', '.join(THEOREMS)}")
        out.append(THEOREMS[tid])
    return out


def _sweep(
    thm: Theorem,
    datas: Sequence[_Data],
    rec: _Recorder,
    dropped: frozenset,
    budget: int | None,
    skipped: list[str],
) -> int:
    """Run one theorem over ``datas``; returns the number of lattices covered."""
    usable = []
    for d in datas:
        if thm.max_size is not None and d.L.n > thm.max_size:
            continue
        try:
            d.vc
        except TooLarge:
            skipped.append(d.id)
            continue
        usable.append(d)
    if thm.per_lattice:
        for d in usable:
            thm.check(d, rec, dropped)
    else:
        thm.check(usable, rec, dropped, budget)
    return len(usable)


def _in_scope(thm: Theorem, L: Lattice, dropped: frozenset) -> bool:
    return not thm.distributive_only or "distributive" in dropped or L.distributive


def run_theorem_suite(
    catalog: Sequence[CatalogEntry],
    theorem_filter: str | Iterable[str] | None = None,
    size_limit: int | None = None,
    vc_budget: int | None = DEFAULT_VC_BUDGET,
) -> list[VerificationReport]:
    """Check each selected theorem over every admissible catalog instance.

    Theorems whose proofs rely on distributivity are counted on the
    distributive sub-catalog; their behaviour on the remaining lattices is
    reported separately under ``outside_scope``.
    """
    if not catalog:
        raise EmptyCatalog("catalog is empty")
    datas = [
        _Data(e.id, e.lattice, vc_budget)
        for e in sorted(catalog, key=lambda e: e.id)
        if size_limit is None or e.lattice.n <= size_limit
    ]
    reports = []
    for thm in _select(theorem_filter):
        start = time.perf_counter()
        rep = VerificationReport(thm.id, distributive_only=thm.distributive_only)
        rec = _Recorder()
        inside = [d for d in datas if _in_scope(thm, d.L, frozenset())]
        rep.lattices = _sweep(thm, inside, rec, frozenset(), vc_budget, rep.skipped)
        rep.instances = rec.instances
        rep.witnesses = rec.witnesses
        rep.violations = len(rec.witnesses)
        rep.notes = rec.notes
        if thm.id == "thm3-avoidance":
            rep.notes["status"] = _avoidance_status(rep)
        if thm.distributive_only:
            outside = [d for d in datas if not d.L.distributive]
            orec = _Recorder()
            covered = _sweep(thm, outside, orec, frozenset(), vc_budget, [])
            rep.outside_scope = {
                "lattices": covered,
                "instances": orec.instances,
                "violations": len(orec.witnesses),
                "first_witness": orec.witnesses[0] if orec.witnesses else None,
            }
        rep.wall_time = time.perf_counter() - start
        reports.append(rep)
    return reports


def _avoidance_status(rep: VerificationReport) -> str:
    if rep.violations:
        return "violated"
    by_n = rep.notes.get("non_vacuous_by_n", {})
    parts = []
    for n in sorted(by_n):
        state = "held non-vacuously" if by_n[n] else "vacuous"
        parts.append(f"n={n}: {state}")
    return "; ".join(parts) if parts else "vacuous"


def hunt_counterexample(
    theorem: str,
    dropped_hypothesis: str | None,
    catalog: Sequence[CatalogEntry],
    vc_budget: int | None = DEFAULT_VC_BUDGET,
) -> dict | None:
    """First witness (in canonical instance order) with one hypothesis unenforced."""
    thm = _select(theorem)[0]
    dropped: frozenset = frozenset()
    if dropped_hypothesis is not None:
        if dropped_hypothesis not in thm.hypotheses:
            known = ", ".join(thm.hypotheses) or "none"
            raise UnknownHypothesis(
                f"{theorem} has no droppable hypothesis {dropped_hypothesis!r} (droppable: {known})"
            )
        dropped = frozenset([dropped_hypothesis])
    if not catalog:
        raise EmptyCatalog("catalog is empty")
    datas = [
        _Data(e.id, e.lattice, vc_budget)
        for e in sorted(catalog, key=lambda e: e.id)
        if _in_scope(thm, e.lattice, dropped)
    ]
    rec = _Recorder(first_only=True)
    try:
        if thm.per_lattice:
            for d in datas:
                _sweep(thm, [d], rec, dropped, vc_budget, [])
        else:
            _sweep(thm, datas, rec, dropped, vc_budget, [])
    except _Found:
        pass
    if rec.witnesses:
        w = dict(rec.witnesses[0])
        w["theorem"] = theorem
        w["dropped"] = dropped_hypothesis
        return w
    return None
