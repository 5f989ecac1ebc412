"""
Command-line front end.

Decision subcommands (eq, pure, member) print true/false and use the exit
code: 0 for true, 1 for false.  Usage and parse errors exit with 2.  Most
subcommands accept --json for machine-readable output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cactus, selftest, subgroups, syntax
from .presentation import abelianization, builtin
from .render import render_svg
from .rschreier import (
    build_transversal,
    rs_generators,
    rs_presentation,
    rs_relators,
    strand_images,
    verify_pj4,
)
from .subgroups import IntervalCollection


def _word_argument(parser: argparse.ArgumentParser, count: int = 1) -> None:
    parser.add_argument("-n", type=int, required=True, help="number of strands")
    names = ["word"] if count == 1 else ["word1", "word2"]
    for name in names:
        parser.add_argument(name, help="cactus word, e.g. 's(1,2) s(2,4)'")


def _print_read_result(r: cactus.ReadResult, as_json: bool) -> None:
    if as_json:
        print(json.dumps({"gauss": [list(l.labels) for l in r.gauss.letters],
                          "perm": list(r.perm.images)}))
    else:
        print(f"d = {r.gauss}")
        print(f"s = {r.perm}")


def _decision(value: bool) -> int:
    print("true" if value else "false")
    return 0 if value else 1


def _load_collection(args) -> IntervalCollection:
    if args.slice:
        i, j = (int(x) for x in args.slice.split(","))
        return IntervalCollection.slice(args.n, i, j)
    with open(args.collection, encoding="utf-8") as handle:
        pairs = json.load(handle)
    return IntervalCollection.of(args.n, [tuple(pq) for pq in pairs])


def _presentation_from_args(args):
    if getattr(args, "builtin", None):
        return builtin(args.builtin)
    with open(args.presentation, encoding="utf-8") as handle:
        return syntax.parse_presentation(handle.read())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="saguaro", description="Exact computation in cactus groups."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    canon = sub.add_parser("canon", help="canonical representative of a word")
    _word_argument(canon)
    canon.add_argument("--json", action="store_true")

    eq = sub.add_parser("eq", help="decide equality of two words")
    _word_argument(eq, count=2)

    order = sub.add_parser("order", help="order of an element, bounded search")
    _word_argument(order)
    order.add_argument("--bound", type=int, default=64)

    image = sub.add_parser("image", help="Gauss word and strand permutation")
    _word_argument(image)
    image.add_argument("--json", action="store_true")

    pure = sub.add_parser("pure", help="decide whether a word is pure")
    _word_argument(pure)

    member = sub.add_parser("member", help="membership in a symmetric-collection subgroup")
    _word_argument(member)
    group = member.add_mutually_exclusive_group(required=True)
    group.add_argument("--collection", help="JSON file with a list of [p,q] intervals")
    group.add_argument("--slice", help="leaf-number slice, e.g. 2,2")

    erase = sub.add_parser("erase", help="erase letters of small leaf number")
    _word_argument(erase)
    erase.add_argument("--min-leaf", type=int, required=True)

    decompose = sub.add_parser(
        "decompose", help="factor small-leaf content as conjugates of small letters"
    )
    _word_argument(decompose)
    decompose.add_argument("--min-leaf", type=int, required=True)
    decompose.add_argument("--json", action="store_true")

    rs = sub.add_parser("rs", help="Reidemeister-Schreier subgroup presentation")
    source = rs.add_mutually_exclusive_group(required=True)
    source.add_argument("--presentation", help="presentation file (gens:/rels: format)")
    source.add_argument("--builtin", choices=["J3", "J4"], help="builtin cactus presentation")
    rs.add_argument("--images", help="generator image file, 'name: (2,1,3,4)' per line")
    rs.add_argument("--strands", type=int, help="derive images s<pq> -> interval reversal")
    rs.add_argument("--budget", type=int, default=1000)
    rs.add_argument("--json", action="store_true")

    abel = sub.add_parser("abel", help="abelianization of a presentation")
    abel.add_argument("--presentation", required=True)
    abel.add_argument("--json", action="store_true")

    sub.add_parser("verify-pj4", help="identity suite for the pure four-strand data")

    render = sub.add_parser("render", help="render a word as SVG")
    _word_argument(render)
    render.add_argument("-o", "--output", required=True)
    render.add_argument("--labels", action="store_true")

    self_test = sub.add_parser("selftest", help="run the acceptance suite")
    self_test.add_argument("--quick", action="store_true", help="smaller random batches")

    return parser


def run(args: argparse.Namespace) -> int:
    if args.command == "canon":
        w = cactus.canonical(syntax.parse_cactus_word(args.word, args.n))
        if args.json:
            print(json.dumps({"word": [[l.p, l.q] for l in w.letters]}))
        else:
            print(syntax.format_cactus_word(w))
        return 0
    if args.command == "eq":
        u = syntax.parse_cactus_word(args.word1, args.n)
        v = syntax.parse_cactus_word(args.word2, args.n)
        return _decision(cactus.equal(u, v))
    if args.command == "order":
        if args.bound < 1:
            raise SystemExit2("--bound must be >= 1")
        got = cactus.order(syntax.parse_cactus_word(args.word, args.n), bound=args.bound)
        print("absent" if got is None else got)
        return 0
    if args.command == "image":
        r = cactus.read_diagram(syntax.parse_cactus_word(args.word, args.n))
        _print_read_result(r, args.json)
        return 0
    if args.command == "pure":
        return _decision(cactus.is_pure(syntax.parse_cactus_word(args.word, args.n)))
    if args.command == "member":
        w = syntax.parse_cactus_word(args.word, args.n)
        return _decision(subgroups.is_member(w, _load_collection(args)))
    if args.command == "erase":
        w = syntax.parse_cactus_word(args.word, args.n)
        print(syntax.format_cactus_word(subgroups.eraser_slice(args.min_leaf, w)))
        return 0
    if args.command == "decompose":
        w = syntax.parse_cactus_word(args.word, args.n)
        pieces = subgroups.kernel_decompose(args.min_leaf, w)
        if args.json:
            print(json.dumps([
                {"conjugator": [[l.p, l.q] for l in g.letters], "small": [m.p, m.q]}
                for g, m in pieces
            ]))
        else:
            for g, m in pieces:
                print(f"{syntax.format_cactus_word(g) or '1'} | {m}")
        return 0
    if args.command == "rs":
        return _run_rs(args)
    if args.command == "abel":
        pres = _presentation_from_args(args)
        rank, factors = abelianization(pres)
        if args.json:
            print(json.dumps({"rank": rank, "factors": list(factors)}))
        else:
            print(f"rank {rank}, invariant factors {list(factors)}")
        return 0
    if args.command == "verify-pj4":
        report = verify_pj4()
        for name, ok in report.checks:
            print(f"{'ok  ' if ok else 'FAIL'} {name}")
        return 0 if report.passed else 1
    if args.command == "render":
        w = syntax.parse_cactus_word(args.word, args.n)
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(render_svg(w, labels=args.labels))
        return 0
    if args.command == "selftest":
        return 0 if selftest.run(quick=args.quick) else 1
    raise AssertionError(f"unhandled command {args.command}")


def _run_rs(args: argparse.Namespace) -> int:
    pres = _presentation_from_args(args)
    if args.images:
        with open(args.images, encoding="utf-8") as handle:
            images = syntax.parse_images_file(handle.read())
    elif args.builtin:
        images = strand_images(pres, {"J3": 3, "J4": 4}[args.builtin])
    elif args.strands:
        images = strand_images(pres, args.strands)
    else:
        raise SystemExit2("rs needs --images or --strands (or --builtin)")
    transversal = build_transversal(pres, images)
    raw = rs_relators(pres, transversal)
    result = rs_presentation(pres, images, budget=args.budget)
    simplified = result.presentation
    rank, factors = abelianization(simplified)
    if args.json:
        print(json.dumps({
            "cosets": len(transversal),
            "raw_generators": [g.name for g in rs_generators(transversal)],
            "raw_relator_count": len(raw),
            "generators": list(simplified.generators),
            "relators": [[[name, e] for name, e in rel] for rel in simplified.relators],
            "abelianization": {"rank": rank, "factors": list(factors)},
            "budget_exhausted": result.budget_exhausted,
        }))
    else:
        print(f"cosets: {len(transversal)}")
        print(f"nontrivial generators: {len(rs_generators(transversal))}")
        print(f"relators before simplification: {len(raw)}")
        print(f"simplified generators: {', '.join(simplified.generators) or '(none)'}")
        for rel in simplified.relators:
            print(f"relator: {syntax.format_signed_word(rel)}")
        print(f"abelianization: rank {rank}, invariant factors {list(factors)}")
        if result.budget_exhausted:
            print("note: simplification budget exhausted")
    return 0


class SystemExit2(Exception):
    """Usage error to be reported with exit code 2."""


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors already
        return int(exc.code or 0)
    try:
        return run(args)
    except (SystemExit2, syntax.WordSyntaxError, syntax.BoundsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
