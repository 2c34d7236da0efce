"""Command-line front end.

One subcommand per library operation.  Every command builds a single
report dict, then renders it as text or, with ``--json``, dumps it
verbatim, so both outputs carry identical values.

Exit codes: 0 success, 2 parse/validation error, 3 size or search cap
exceeded, 4 requested object not found (e.g. no equivalence witness).
``--limit N`` (or the Z2Z4_LIMIT environment variable) replaces all
default caps with N.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import codes
from .audit import run_audits
from .classify import classification_report
from .codefile import ParseError, export_code, parse_code_file
from .codes import CapError, DEFAULT_AMBIENT_LIMIT, DEFAULT_ENUM_LIMIT
from .symmetry import DEFAULT_PAIR_LIMIT, find_equivalence, image_code, paut_report
from .words import ShapeError, word_str

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_NOT_FOUND = 4


class _Limits:
    def __init__(self, override: int | None):
        self.enum = override or DEFAULT_ENUM_LIMIT
        self.ambient = override or DEFAULT_AMBIENT_LIMIT
        self.pairs = override or DEFAULT_PAIR_LIMIT


def _resolve_limits(args) -> _Limits:
    override = args.limit
    if override is None:
        env = os.environ.get("Z2Z4_LIMIT", "").strip()
        if env:
            override = int(env)
    return _Limits(override)


def _emit(report: dict, args, render) -> None:
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        for line in render(report):
            print(line)


# -- subcommands --------------------------------------------------------


def _cmd_classify(args, limits) -> int:
    code = parse_code_file(args.file)
    report = classification_report(code, limits.enum)
    def render(r):
        yield f"code: alpha={r['alpha']} beta={r['beta']} size={r['size']}"
        profile = " ".join(f"{w}:{c}" for w, c in r["weight_profile"].items())
        yield f"weight profile: {profile}"
        yield f"one-weight: {r['one_weight']}"
        yield f"two-distance: {r['two_distance']}"
        if r["relative"] is None:
            yield "relative two-weight: none"
        else:
            rel = r["relative"]
            yield (
                f"relative two-weight: (m1, m) = ({rel['m1']}, {rel['m']}) "
                f"with subcode <{', '.join(rel['subcode_generators'])}>"
            )
        even = r["even_weight"]
        yield f"even weights: all_even={even['all_even']} dual_member={even['dual_member']}"
    _emit(report, args, render)
    return EXIT_OK


def _cmd_dual(args, limits) -> int:
    code = parse_code_file(args.file)
    dual = code.dual(limits.ambient)
    product = code.size(limits.enum) * dual.size(limits.enum)
    report = {
        "alpha": code.alpha,
        "beta": code.beta,
        "size": code.size(limits.enum),
        "dual_size": dual.size(limits.enum),
        "dual_generators": [word_str(g) for g in dual.generators],
        "external_size_identity": {
            "product": product,
            "ambient": code.ambient_size,
            "holds": product == code.ambient_size,
        },
    }
    def render(r):
        yield f"code: alpha={r['alpha']} beta={r['beta']} size={r['size']}"
        yield f"dual size: {r['dual_size']}"
        yield f"dual generators: {', '.join(r['dual_generators']) or '(zero code)'}"
        ident = r["external_size_identity"]
        yield (
            f"size product (external identity): {ident['product']} "
            f"vs ambient {ident['ambient']} -> {'holds' if ident['holds'] else 'FAILS'}"
        )
    _emit(report, args, render)
    return EXIT_OK


def _cmd_enumerate(args, limits) -> int:
    code = parse_code_file(args.file)
    words = [word_str(w) for w in code.codewords(limits.enum)]
    report = {"alpha": code.alpha, "beta": code.beta, "size": len(words), "codewords": words}
    def render(r):
        yield from export_code(code, limits.enum).splitlines()
    _emit(report, args, render)
    return EXIT_OK


def _cmd_gray(args, limits) -> int:
    code = parse_code_file(args.file)
    image = code.gray_image(limits.enum)
    bits = sorted("".join(map(str, w)) for w in image.words)
    report = {
        "length": image.length,
        "size": len(image),
        "linear": codes.is_linear_binary(image),
        "words": bits,
    }
    def render(r):
        yield f"gray image: length={r['length']} size={r['size']} linear={r['linear']}"
        yield from r["words"]
    _emit(report, args, render)
    return EXIT_OK


def _cmd_replicate(args, limits) -> int:
    code = parse_code_file(args.file)
    replicated = code.replicate(args.t)
    report = {
        "alpha": replicated.alpha,
        "beta": replicated.beta,
        "t": args.t,
        "size": replicated.size(limits.enum),
        "generators": [word_str(g) for g in replicated.generators],
    }
    def render(r):
        yield from export_code(replicated, limits.enum).splitlines()
    _emit(report, args, render)
    return EXIT_OK


def _cmd_paut(args, limits) -> int:
    code = parse_code_file(args.file)
    if args.formula:
        from .classify import generator_stats
        from .symmetry import paut_order_formula

        if len(code.generators) != 1:
            print("the order formula needs a single-generator code", file=sys.stderr)
            return EXIT_PARSE
        value = paut_order_formula(generator_stats(code.generators[0]), code.alpha)
        report = {"formula_order": value}
        _emit(report, args, lambda r: [f"formula order: {r['formula_order']}"])
        return EXIT_OK
    report = paut_report(code, limits.pairs, limits.enum)
    def render(r):
        yield f"PAut order: {r['order']} (full group would be {_full(r)})"
        if r["formula_order"] is not None:
            verdict = "matches" if r["formula_matches"] else "DISAGREES with"
            yield f"formula order: {r['formula_order']} ({verdict} the exhaustive scan)"
        for el in r["elements"]:
            yield f"  sigma={el['sigma']} tau={el['tau']}"
    def _full(r):
        from math import factorial

        return factorial(r["alpha"]) * factorial(r["beta"])
    _emit(report, args, render)
    return EXIT_OK


def _cmd_equiv(args, limits) -> int:
    code1 = parse_code_file(args.file1)
    code2 = parse_code_file(args.file2)
    pair = find_equivalence(code1, code2, limits.pairs, limits.enum)
    report = {
        "equivalent": pair is not None,
        "sigma": None if pair is None else list(pair.sigma),
        "tau": None if pair is None else list(pair.tau),
    }
    def render(r):
        if r["equivalent"]:
            yield f"equivalent: sigma={r['sigma']} tau={r['tau']}"
        else:
            yield "not equivalent"
    _emit(report, args, render)
    if pair is not None:
        # belt and braces: a reported witness must actually work
        assert image_code(pair, code1, limits.enum) == code2
        return EXIT_OK
    return EXIT_NOT_FOUND


def _cmd_check_theorems(args, limits) -> int:
    code = parse_code_file(args.file)
    entries = run_audits(code, t=args.t, enum_limit=limits.enum, pair_limit=limits.pairs)
    report = {
        "alpha": code.alpha,
        "beta": code.beta,
        "size": code.size(limits.enum),
        "t": args.t,
        "entries": [
            {"id": e.id, "statement": e.statement, "status": e.status, "details": e.details}
            for e in entries
        ],
    }
    def render(r):
        yield f"code: alpha={r['alpha']} beta={r['beta']} size={r['size']}"
        for e in r["entries"]:
            yield f"[{e['status']:>14}] {e['id']}: {e['statement']}"
            if e["details"]:
                yield f"{'':17}{json.dumps(e['details'])}"
    _emit(report, args, render)
    return EXIT_OK


# -- argument parsing ----------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the report as JSON")
    common.add_argument(
        "--limit",
        type=int,
        default=None,
        help="replace all default size/search caps with this value",
    )
    parser = argparse.ArgumentParser(
        prog="z2z4",
        description="Construct, enumerate and classify additive codes in Z2^alpha x Z4^beta.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="weight profile and taxonomy")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("dual", parents=[common], help="orthogonal-complement dual code")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_dual)

    p = sub.add_parser("enumerate", parents=[common], help="list every codeword")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("gray", parents=[common], help="binary Gray image")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_gray)

    p = sub.add_parser("replicate", parents=[common], help="t-fold coordinate replication")
    p.add_argument("file")
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(fn=_cmd_replicate)

    p = sub.add_parser("paut", parents=[common], help="permutation automorphism group")
    p.add_argument("file")
    p.add_argument(
        "--formula",
        action="store_true",
        help="only evaluate the single-generator order formula (skips the scan)",
    )
    p.set_defaults(fn=_cmd_paut)

    p = sub.add_parser("equiv", parents=[common], help="search for an equivalence witness")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(fn=_cmd_equiv)

    p = sub.add_parser("check-theorems", parents=[common], help="run every registered audit")
    p.add_argument("file")
    p.add_argument("--t", type=int, default=2, help="replication factor for the audit")
    p.set_defaults(fn=_cmd_check_theorems)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args, _resolve_limits(args))
    except (ParseError, ShapeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
