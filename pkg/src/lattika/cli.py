"""Command-line entry point: ``lattika <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import generators, harness
from .constructions import product, quotient
from .errors import BadParams, LattikaError
from .filters import all_filters, is_filter, is_maximal_filter, prime_filters
from .generators import CatalogEntry
from .lattice import Lattice, Poset, is_l_domain
from .serialize import dumps_lattice, emit_dot, load_lattice
from .sfilters import all_s_filters, is_s_filter, is_vee_closed, saturate


def _labels(L: Lattice, text: str) -> int:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    return L.mask(parts)


def _set_list(L: Lattice, masks) -> list[list[str]]:
    return [L.labels(m) for m in masks]


def _emit(args, payload, lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _vee_closed_arg(L: Lattice, text: str) -> int:
    S = _labels(L, text)
    if not is_vee_closed(L, S):
        raise BadParams(f"S = {L.fmt(S)} is not join-closed (it must contain bottom and all joins)")
    return S


def cmd_check(args) -> int:
    L = load_lattice(args.file)
    info = {
        "name": L.name,
        "elements": L.n,
        "covers": len(L.covers),
        "bottom": L.names[L.bottom],
        "top": L.names[L.top],
        "distributive": L.distributive,
        "modular": L.modular,
        "complemented": L.complemented,
        "l_domain": is_l_domain(L),
    }
    lines = [f"{args.file}: lattice with {L.n} elements and {len(L.covers)} covers"]
    lines += [f"  {k}: {info[k]}" for k in ("bottom", "top", "distributive", "modular",
                                             "complemented", "l_domain")]
    _emit(args, info, lines)
    return 0


def cmd_filters(args) -> int:
    L = load_lattice(args.file)
    if args.prime:
        fs = [F.mask for F in prime_filters(L)]
    elif args.maximal:
        fs = [F.mask for F in all_filters(L) if is_maximal_filter(L, F)]
    else:
        fs = [F.mask for F in all_filters(L)]
    _emit(args, _set_list(L, fs), [L.fmt(m) for m in fs])
    return 0


def cmd_sfilters(args) -> int:
    L = load_lattice(args.file)
    S = _vee_closed_arg(L, args.s)
    fs = [q.mask for q in all_s_filters(L, S)]
    _emit(args, _set_list(L, fs), [L.fmt(m) for m in fs])
    return 0


def cmd_saturate(args) -> int:
    L = load_lattice(args.file)
    S = _vee_closed_arg(L, args.s)
    p = _labels(L, args.filter)
    if not is_filter(L, p):
        raise BadParams(f"{L.fmt(p)} is not a filter")
    sat = saturate(L, S, p).mask
    info = {
        "saturation": L.labels(sat),
        "is_filter": is_filter(L, sat),
        "is_s_filter": is_s_filter(L, S, sat),
    }
    lines = [
        L.fmt(sat),
        f"  filter: {info['is_filter']}",
        f"  S-filter: {info['is_s_filter']}",
    ]
    _emit(args, info, lines)
    return 0


def cmd_quotient(args) -> int:
    L = load_lattice(args.file)
    Q = quotient(L, _labels(L, args.filter))
    _write_or_print(dumps_lattice(Q.quotient), args.output)
    return 0


def cmd_product(args) -> int:
    P = product([load_lattice(args.a), load_lattice(args.b)])
    _write_or_print(dumps_lattice(P.lattice), args.output)
    return 0


def cmd_gen(args) -> int:
    spec = args.spec
    if spec.startswith("downsets:"):
        path = spec.split(":", 1)[1]
        doc = json.loads(Path(path).read_text())
        if isinstance(doc, dict) and "elements" in doc and "covers" in doc:
            poset = Poset(doc["elements"], [tuple(c) for c in doc["covers"]])
        else:
            raise BadParams(f"{path}: expected an object with 'elements' and 'covers'")
        L = generators.downset_lattice(poset, name=Path(path).stem)
    else:
        L = generators.build(spec)
    _write_or_print(dumps_lattice(L), args.output)
    return 0


def _catalog(args) -> list[CatalogEntry]:
    if args.lattice:
        out = []
        for path in args.lattice:
            L = load_lattice(path)
            lid = L.name or Path(path).stem
            L.name = lid
            out.append(CatalogEntry(lid, L, f"file:{path}"))
        return out
    return generators.default_catalog(generators.default_seed())


def cmd_verify(args) -> int:
    reports = harness.run_theorem_suite(
        _catalog(args), theorem_filter=args.theorem, size_limit=args.max_size
    )
    if args.json is not None:
        _write_or_print(harness.reports_to_jsonl(reports, timings=args.timings),
                        None if args.json == "-" else args.json)
    if args.json is None or args.json != "-":
        for r in reports:
            status = "ok" if r.passed else "FAIL"
            line = f"{status:4} {r.theorem:20} instances={r.instances} violations={r.violations}"
            if r.outside_scope is not None:
                line += (f" [outside scope: {r.outside_scope['instances']} instances,"
                         f" {r.outside_scope['violations']} violations]")
            if args.timings:
                line += f" {r.wall_time:.2f}s"
            print(line)
    return 0 if all(r.passed for r in reports) else 1


def cmd_hunt(args) -> int:
    w = harness.hunt_counterexample(args.theorem, args.drop, _catalog(args))
    if w is None:
        print("no counterexample found")
        return 1
    print(json.dumps(w, sort_keys=True, indent=None if args.json else 2))
    return 0


def cmd_dot(args) -> int:
    L = load_lattice(args.file)
    text = emit_dot(L, args.output)
    if not args.output:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lattika",
        description="Finite lattices, filters and S-filters, with exhaustive theorem checking.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_json(p):
        p.add_argument("--json", action="store_true", help="machine-readable JSON output")
        return p

    p = with_json(sub.add_parser("check", help="validate a lattice file and print its properties"))
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = with_json(sub.add_parser("filters", help="list filters"))
    p.add_argument("file")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--prime", action="store_true", help="prime filters only")
    kind.add_argument("--maximal", action="store_true", help="maximal proper filters only")
    p.set_defaults(func=cmd_filters)

    p = with_json(sub.add_parser("sfilters", help="list S-filters for a join-closed S"))
    p.add_argument("file")
    p.add_argument("--s", required=True, help="comma-separated labels, e.g. 0,u")
    p.set_defaults(func=cmd_sfilters)

    p = with_json(sub.add_parser("saturate", help="saturation of a filter by S"))
    p.add_argument("file")
    p.add_argument("--s", required=True, help="comma-separated labels")
    p.add_argument("--filter", required=True, help="comma-separated labels, e.g. w,1")
    p.set_defaults(func=cmd_saturate)

    p = sub.add_parser("quotient", help="quotient lattice by a filter")
    p.add_argument("file")
    p.add_argument("--filter", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("product", help="direct product of two lattices")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("gen", help="generate a lattice document")
    p.add_argument("spec", help="chain:N, boolean:K, divisors:N, ex5, m3, n5, "
                                "downsets:poset.json, random:N,SEED")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="run the theorem suite over the catalog")
    p.add_argument("--theorem", action="append", choices=list(harness.THEOREMS),
                   help="restrict to one theorem (repeatable)")
    p.add_argument("--max-size", type=int)
    p.add_argument("--json", nargs="?", const="-", metavar="OUT",
                   help="write JSON-lines report to OUT (stdout if omitted)")
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock times (breaks byte-identical reports)")
    p.add_argument("--lattice", action="append", metavar="FILE",
                   help="use these lattice files instead of the default catalog")
    p.set_defaults(func=cmd_verify)

    p = with_json(sub.add_parser("hunt", help="look for a counterexample with a hypothesis dropped"))
    p.add_argument("--theorem", required=True, choices=list(harness.THEOREMS))
    p.add_argument("--drop", required=True)
    p.add_argument("--lattice", action="append", metavar="FILE")
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("dot", help="Graphviz Hasse diagram")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LattikaError as exc:
        print(f"lattika: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"lattika: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
