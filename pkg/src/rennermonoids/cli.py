"""Command line interface: normal forms, lengths, presentations, verification.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 enumeration cap exceeded.  All diagnostics go to stderr; with --json the
payload on stdout is a single object with family, rank, command, result.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from .model import DEFAULT_ENUMERATION_CAP, EnumerationCapExceeded, GeneratorName
from .monoid import NormalForm, OutsideMonoidError, RennerMonoid
from .presentation import (
    generate_explicit,
    generate_full,
    generate_reduced,
    relation_lines,
    verify_completeness,
    verify_relations,
    word_str,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_CAP = 3

_TOKEN = re.compile(r"([sef])(\d+)")


class WordParseError(ValueError):
    pass


def parse_word(text: str, engine: RennerMonoid) -> list[GeneratorName]:
    """Whitespace-separated tokens: s<i>, e<j>, f<l>, or 1 for the empty word."""
    word = []
    alphabet = set(engine.alphabet)
    for pos, tok in enumerate(text.split(), start=1):
        if tok == "1":
            continue
        m = _TOKEN.fullmatch(tok)
        if m is None:
            raise WordParseError(f"malformed token {tok!r} at position {pos}")
        g = GeneratorName(m.group(1), int(m.group(2)))
        if g not in alphabet:
            raise WordParseError(f"unknown generator {tok} at position {pos}")
        word.append(g)
    return word


def _nf_result(engine: RennerMonoid, nf: NormalForm) -> dict:
    return {
        "word": [str(g) for g in engine.canonical_word(nf)],
        "w1": [f"s{i}" for i in engine.weyl.reduced_word(nf.w1)],
        "e": nf.e.token,
        "w2": [f"s{i}" for i in engine.weyl.reduced_word(nf.w2)],
        "length": engine.length(nf),
    }


def _print_nf(result: dict, out) -> None:
    print(f"word: {' '.join(result['word']) or '1'}", file=out)
    print(f"w1: {' '.join(result['w1']) or '1'}", file=out)
    print(f"e: {result['e']}", file=out)
    print(f"w2: {' '.join(result['w2']) or '1'}", file=out)
    print(f"length: {result['length']}", file=out)


def _cmd_nf(engine: RennerMonoid, args) -> tuple[dict, int]:
    nf = engine.normal_decompose(engine.evaluate(parse_word(args.word, engine)))
    return _nf_result(engine, nf), EXIT_OK


def _cmd_mul(engine: RennerMonoid, args) -> tuple[dict, int]:
    a = engine.normal_decompose(engine.evaluate(parse_word(args.left, engine)))
    b = engine.normal_decompose(engine.evaluate(parse_word(args.right, engine)))
    return _nf_result(engine, engine.multiply(a, b)), EXIT_OK


def _cmd_len(engine: RennerMonoid, args) -> tuple[dict, int]:
    x = engine.evaluate(parse_word(args.word, engine))
    return {"length": engine.length_of_element(x)}, EXIT_OK


def _cmd_present(engine: RennerMonoid, args) -> tuple[dict, int]:
    pres = {
        "full": generate_full,
        "reduced": generate_reduced,
        "explicit": generate_explicit,
    }[args.flavor](engine)
    return {
        "flavor": pres.flavor,
        "alphabet": [str(g) for g in pres.alphabet],
        "relations": [
            {"tag": r.tag, "lhs": [str(g) for g in r.lhs], "rhs": [str(g) for g in r.rhs]}
            for r in pres.relations
        ],
        "lines": relation_lines(pres),
    }, EXIT_OK


def _cmd_verify(engine: RennerMonoid, args) -> tuple[dict, int]:
    checks = []
    for flavor, gen in (
        ("full", generate_full),
        ("reduced", generate_reduced),
        ("explicit", generate_explicit),
    ):
        rep = verify_relations(engine, gen(engine))
        checks.append(
            {
                "name": f"relations-{flavor}",
                "ok": rep.ok,
                "checked": rep.checked,
                "failures": len(rep.failures),
            }
        )
    comp = verify_completeness(engine, args.cap)
    checks.append(
        {
            "name": "completeness",
            "ok": comp.ok,
            "monoid": comp.monoid_size,
            "triples": comp.triple_count,
            "values": comp.value_count,
            "missing": comp.missing,
            "collisions": comp.collisions,
        }
    )
    ok = all(c["ok"] for c in checks)
    return {"checks": checks, "ok": ok}, EXIT_OK if ok else EXIT_VERIFY


def _cmd_enumerate(engine: RennerMonoid, args) -> tuple[dict, int]:
    elements = engine.elements(args.cap)
    result: dict = {"count": len(elements)}
    if args.words:
        result["words"] = [
            word_str(engine.canonical_word(engine.normal_decompose(x))) for x in elements
        ]
    return result, EXIT_OK


def _cmd_typemap(engine: RennerMonoid, args) -> tuple[dict, int]:
    lat = engine.lattice
    weyl = engine.weyl
    elems = []
    for e in lat.elements:
        tm = lat.type_map(e)
        elems.append(
            {
                "element": e.token,
                "commuting": [f"s{i}" for i in sorted(tm.commuting)],
                "absorbing": [f"s{i}" for i in sorted(tm.absorbing)],
                "nonabsorbing": [f"s{i}" for i in sorted(tm.nonabsorbing)],
            }
        )
    pairs = []
    for e in lat.nonunit:
        for f in lat.nonunit:
            ws = lat.up_minima(e).left & lat.up_minima(f).right
            words = sorted(
                (weyl.reduced_word(w) for w in ws), key=lambda w: (len(w), w)
            )
            pairs.append(
                {
                    "e": e.token,
                    "f": f.token,
                    "words": [" ".join(f"s{i}" for i in w) or "1" for w in words],
                }
            )
    return {"typemaps": elems, "up_intersections": pairs}, EXIT_OK


def _print_text(command: str, result: dict, out) -> None:
    if command in ("nf", "mul"):
        _print_nf(result, out)
    elif command == "len":
        print(f"length: {result['length']}", file=out)
    elif command == "present":
        for line in result["lines"]:
            print(line, file=out)
    elif command == "verify":
        for c in result["checks"]:
            extras = " ".join(
                f"{k}={v}" for k, v in c.items() if k not in ("name", "ok")
            )
            print(f"{c['name']}: {'ok' if c['ok'] else 'FAILED'} {extras}", file=out)
        print(f"verdict: {'pass' if result['ok'] else 'fail'}", file=out)
    elif command == "enumerate":
        print(f"count: {result['count']}", file=out)
        for w in result.get("words", []):
            print(w, file=out)
    elif command == "typemap":
        for row in result["typemaps"]:
            print(
                f"{row['element']}: commuting={' '.join(row['commuting']) or '-'}"
                f" absorbing={' '.join(row['absorbing']) or '-'}"
                f" nonabsorbing={' '.join(row['nonabsorbing']) or '-'}",
                file=out,
            )
        for row in result["up_intersections"]:
            print(
                f"up {row['e']} {row['f']}: {', '.join(row['words'])}",
                file=out,
            )


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="renner",
        description="Compute in rook, symplectic, and even special orthogonal monoids.",
    )
    p.add_argument("--family", required=True, choices=["A", "B", "D"])
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--json", action="store_true", help="emit a JSON object on stdout")
    p.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_ENUMERATION_CAP,
        help="enumeration size cap (default 10^7)",
    )
    sub = p.add_subparsers(dest="command", required=True)
    sp = sub.add_parser("nf", help="normal form of a word")
    sp.add_argument("word")
    sp = sub.add_parser("mul", help="product of two words in normal form")
    sp.add_argument("left")
    sp.add_argument("right")
    sp = sub.add_parser("len", help="length of the element a word represents")
    sp.add_argument("word")
    sp = sub.add_parser("present", help="emit a presentation")
    sp.add_argument(
        "--flavor", choices=["full", "reduced", "explicit"], default="reduced"
    )
    sub.add_parser("verify", help="relation soundness and completeness checks")
    sp = sub.add_parser("enumerate", help="enumerate the monoid")
    sp.add_argument("--words", action="store_true", help="list canonical words")
    sub.add_parser("typemap", help="type maps and upward coset minima")
    return p


_HANDLERS = {
    "nf": _cmd_nf,
    "mul": _cmd_mul,
    "len": _cmd_len,
    "present": _cmd_present,
    "verify": _cmd_verify,
    "enumerate": _cmd_enumerate,
    "typemap": _cmd_typemap,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        engine = RennerMonoid(args.family, args.rank)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        result, code = _HANDLERS[args.command](engine, args)
    except (WordParseError, OutsideMonoidError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    if args.json:
        payload = {
            "family": args.family,
            "rank": args.rank,
            "command": args.command,
            "result": result,
        }
        print(json.dumps(payload, indent=2), file=sys.stdout)
    else:
        _print_text(args.command, result, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
