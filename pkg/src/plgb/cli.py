"""Command-line front end: ``plgb <command> [options]``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from fractions import Fraction

from .checks import run_suite
from .ideals import Caps, DegreeError, ResourceCapExceeded, span_ideal
from .lie import RankDefectError, format_bracket, ladder_bracket, lie_monomial_basis, monic
from .order import cmp_planar
from .poly import format_poly, parse_poly
from .prelie_basis import psi
from .trees import (Alphabet, ParseError, enumerate_binary, enumerate_nonplanar,
                    enumerate_planar, format_binary, forget_planarity, is_ladder, parse_tree)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_CAP = 4
EXIT_RANK = 5
EXIT_DEGREE = 6

log = logging.getLogger("plgb")

DEFAULT_ALPHABET = "a:1"


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


# ------------------------------------------------------------------ helpers

def _frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_caps(text):
    """``terms=K,seeds=K,degree=K`` into :class:`Caps`."""
    fields = {"terms": "max_terms", "seeds": "max_seeds", "degree": "max_degree"}
    kw = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        name, _, value = part.partition("=")
        if name not in fields:
            raise argparse.ArgumentTypeError(f"unknown cap {name!r}")
        try:
            kw[fields[name]] = int(value)
        except ValueError:
            raise argparse.ArgumentTypeError(f"cap {name} needs an integer") from None
        if kw[fields[name]] < 1:
            raise argparse.ArgumentTypeError(f"cap {name} must be positive")
    return Caps(**kw)


def positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def load_alphabet(args) -> Alphabet:
    if args.alphabet is None:
        return Alphabet.parse_inline(DEFAULT_ALPHABET)
    if os.path.exists(args.alphabet):
        try:
            return Alphabet.load(args.alphabet)
        except (KeyError, TypeError, json.JSONDecodeError) as e:
            raise CliError(f"bad alphabet file {args.alphabet}: {e}", EXIT_PARSE) from None
    # allow the inline form "x:1,y:1" for quick use
    if ":" in args.alphabet or "," in args.alphabet:
        return Alphabet.parse_inline(args.alphabet)
    raise CliError(f"alphabet file not found: {args.alphabet}", EXIT_PARSE)


def emit(args, text_lines, payload):
    if args.format == "json":
        payload = {"schema_version": SCHEMA_VERSION, "command": args.command, **payload}
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def poly_json(f, fmt=repr):
    return [[fmt(t), _frac(c)] for t, c in f.items()]


def _bases(args, alphabet, degree):
    log.info("spanning %s up to degree %d", args.ideal, degree)
    return span_ideal(args.ideal, alphabet, degree, args.caps)


# ----------------------------------------------------------------- commands

def cmd_enumerate(args):
    A = load_alphabet(args)
    kind = args.kind or "planar"
    if kind == "planar":
        trees, fmt = enumerate_planar(A, args.degree), repr
    elif kind == "nonplanar":
        trees, fmt = enumerate_nonplanar(A, args.degree), repr
    elif kind == "binary":
        # binary trees are indexed by leaf count
        trees, fmt = enumerate_binary(A, args.degree), format_binary
    else:
        raise CliError(f"enumerate does not support kind {kind!r}", EXIT_USAGE)
    names = [fmt(t) for t in trees]
    emit(args, names, {"kind": kind, "degree": args.degree, "count": len(names), "trees": names})


def _read_lines(args):
    if args.input_file:
        with open(args.input_file, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    return [ln.strip() for ln in text.splitlines() if ln.strip()]


def cmd_order(args):
    A = load_alphabet(args)
    trees = [parse_tree(ln, A) for ln in _read_lines(args)]
    if args.kind == "nonplanar":
        trees = [forget_planarity(t) for t in trees]
    trees.sort(key=lambda t: t.key)
    lines, pairs = [], []
    for i, t in enumerate(trees):
        lines.append(repr(t))
        if i + 1 < len(trees):
            d = cmp_planar(t, trees[i + 1])
            rule = d.rule_fired.name.lower()
            op = "=" if d.outcome == 0 else "<"
            lines.append(f"  {op} by {rule}")
            pairs.append({"left": repr(t), "right": repr(trees[i + 1]),
                          "outcome": d.outcome.name.lower(), "rule": rule})
    emit(args, lines, {"trees": [repr(t) for t in trees], "comparisons": pairs})


def _kind_for_ideal(ideal):
    return "nonplanar" if ideal == "I" else "planar"


def cmd_reduce(args):
    A = load_alphabet(args)
    f = parse_poly(args.input, A, _kind_for_ideal(args.ideal))
    top = max(f.degrees(), default=1)
    degree = args.max_degree or top
    if top > degree:
        raise CliError(f"input has degree {top} above --max-degree {degree}", EXIT_DEGREE)
    bases = _bases(args, A, degree)
    g = bases.can(f)
    emit(args, [repr(g)], {"ideal": args.ideal, "input": repr(f), "canonical": poly_json(g)})


def cmd_ideal_basis(args):
    A = load_alphabet(args)
    comp = _bases(args, A, args.degree).component(args.degree)
    rows = comp.rows
    emit(args, [repr(r) for r in rows],
         {"ideal": args.ideal, "degree": args.degree, "rank": comp.rank,
          "rows": [poly_json(r) for r in rows]})


def cmd_oset(args):
    A = load_alphabet(args)
    trees = _bases(args, A, args.degree).complement(args.degree)
    names = [repr(t) for t in trees]
    emit(args, names, {"ideal": args.ideal, "degree": args.degree, "count": len(names),
                       "trees": names})


def cmd_psi(args):
    A = load_alphabet(args)
    t = forget_planarity(parse_tree(args.tree, A))
    p = psi(t)
    emit(args, [repr(p)], {"tree": repr(t), "psi": poly_json(p)})


def _prelie_basis(args):
    A = load_alphabet(args)
    out = [(t, psi(t)) for t in enumerate_nonplanar(A, args.degree)]
    emit(args, [f"{t}: {p!r}" for t, p in out],
         {"kind": "prelie", "degree": args.degree, "count": len(out),
          "elements": [{"tree": repr(t), "psi": poly_json(p)} for t, p in out]})


def _word(w):
    return " ".join(g.name for g in w)


def _lie_basis(args, style):
    A = load_alphabet(args)
    degree = args.degree
    bases = span_ideal("I", A, degree, args.caps)
    trees = bases.complement(degree)
    elems = lie_monomial_basis(A, degree, bases)
    lines, records = [], []
    for t, e in zip(trees, elems):
        m = monic(e)
        rec = {"tree": repr(t), "words": {_word(w): _frac(c) for w, c in m.items()},
               "phi_scale": _frac(e.leading_term()[1])}
        if is_ladder(t):
            c, gens = ladder_bracket(t)
            rec["bracket"] = format_bracket(gens)
            rec["bracket_weight"] = _frac(c)
        records.append(rec)
        if style == "words" or "bracket" not in rec:
            lines.append(format_poly(m, _word))
        else:
            lines.append(rec["bracket"])
    emit(args, lines, {"kind": "lie", "degree": degree, "count": len(records),
                       "elements": records})


def cmd_prelie_basis(args):
    _prelie_basis(args)


def cmd_lie_basis(args):
    style = args.format
    if style in ("brackets", "words"):
        args.format = "text"
    _lie_basis(args, style)


def cmd_basis(args):
    if args.kind == "prelie":
        _prelie_basis(args)
    elif args.kind == "lie":
        _lie_basis(args, "brackets")
    else:
        raise CliError("basis needs --kind prelie or --kind lie", EXIT_USAGE)


def cmd_verify(args):
    results = run_suite(args.max_degree or 4, args.seed, args.samples)
    failed = [r for r in results if not r.ok]
    lines = [r.line() for r in results]
    lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
    emit(args, lines, {"seed": args.seed, "passed": len(results) - len(failed),
                       "failed": len(failed),
                       "checks": [{"name": r.name, "checked": r.checked,
                                   "failures": len(r.failures)} for r in results]})
    return EXIT_FAILED if failed else EXIT_OK


# ------------------------------------------------------------------ parser

def _common(formats=("text", "json"), default="text"):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", help="alphabet JSON file, or inline 'x:1,y:1' (default a:1)")
    common.add_argument("--format", choices=list(formats), default=default)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--caps", type=parse_caps, default=Caps(),
                        help="resource limits, e.g. terms=100000,seeds=500000")
    return common


def build_parser():
    common = _common()
    ideal = argparse.ArgumentParser(add_help=False)
    ideal.add_argument("--ideal", choices=["J", "J'", "I"], default="I")

    p = argparse.ArgumentParser(prog="plgb", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", parents=[common], help="list trees of one degree")
    s.add_argument("--kind", choices=["planar", "nonplanar", "binary"], default="planar")
    s.add_argument("--degree", type=positive, required=True)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("order", parents=[common], help="sort trees read from stdin")
    s.add_argument("action", choices=["sort"])
    s.add_argument("--kind", choices=["planar", "nonplanar"], default="planar")
    s.add_argument("--input-file")
    s.set_defaults(func=cmd_order)

    s = sub.add_parser("reduce", parents=[common, ideal], help="canonical form modulo an ideal")
    s.add_argument("--input", required=True)
    s.add_argument("--max-degree", type=positive)
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("ideal-basis", parents=[common, ideal], help="echelon rows of a component")
    s.add_argument("--degree", type=positive, required=True)
    s.set_defaults(func=cmd_ideal_basis)

    s = sub.add_parser("oset", parents=[common, ideal], help="trees outside the leading terms")
    s.add_argument("--degree", type=positive, required=True)
    s.set_defaults(func=cmd_oset)

    s = sub.add_parser("psi", parents=[common], help="expand the triangular pre-Lie basis map")
    s.add_argument("--tree", required=True)
    s.set_defaults(func=cmd_psi)

    s = sub.add_parser("prelie-basis", parents=[common], help="pre-Lie monomial basis")
    s.add_argument("--degree", type=positive, required=True)
    s.set_defaults(func=cmd_prelie_basis)

    lie_common = _common(("brackets", "words", "text", "json"), "brackets")
    s = sub.add_parser("lie-basis", parents=[lie_common], help="Lie monomial basis")
    s.add_argument("--degree", type=positive, required=True)
    s.set_defaults(func=cmd_lie_basis)

    s = sub.add_parser("basis", parents=[common], help="pre-Lie or Lie basis")
    s.add_argument("--kind", choices=["prelie", "lie"], required=True)
    s.add_argument("--degree", type=positive, required=True)
    s.set_defaults(func=cmd_basis)

    s = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    s.add_argument("--max-degree", type=positive, default=4)
    s.add_argument("--samples", type=positive, default=100)
    s.set_defaults(func=cmd_verify)
    return p


def _fail(args, kind, message, code):
    if getattr(args, "format", "text") == "json":
        print(json.dumps({"schema_version": SCHEMA_VERSION, "error": kind, "message": message}),
              file=sys.stderr)
    else:
        print(f"plgb: {kind}: {message}", file=sys.stderr)
    return code


def main(argv=None):
    level = os.environ.get("PLGB_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except ParseError as e:
        return _fail(args, "parse-error", str(e), EXIT_PARSE)
    except KeyError as e:
        return _fail(args, "parse-error", str(e.args[0]), EXIT_PARSE)
    except ResourceCapExceeded as e:
        return _fail(args, "cap-exceeded", str(e), EXIT_CAP)
    except RankDefectError as e:
        return _fail(args, "rank-defect", str(e), EXIT_RANK)
    except DegreeError as e:
        return _fail(args, "degree-error", str(e), EXIT_DEGREE)
    except CliError as e:
        return _fail(args, "error", str(e), e.code)
    except ValueError as e:
        return _fail(args, "invalid-input", str(e), EXIT_USAGE)
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
