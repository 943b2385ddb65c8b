"""
Command-line front end.

    braidlink lk "1 -2 -3 -3 -4" --n 5 --base 1,2,3
    braidlink lefschetz "1 -2" --n 3
    braidlink components "1 -2 -3 -3 -4" --n 5
    braidlink forced-set LRLLRR
    braidlink linked --catalog my_catalog.json
    braidlink verify --json

Exit codes: 0 success, 1 computation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .braid import (BraidError, closure_components, delete_strands, free_cancel,
                    is_cyclic, parse_braid, permutation)
from .catalog import CatalogError, builtin_records, read_catalog, validate_record
from .fox import lefschetz
from .linking import (INCONCLUSIVE, LINKED, IndeterminateError, TwoComponentSplit,
                      guaschi_data, linking_number)
from .lr import LRError, forced_set, forces, parse_lr
from .svg import write_svg
from .verify import format_table, run_checks

EXIT_OK, EXIT_COMPUTE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma list of integers, got {text!r}")


def _sets(sets) -> list[list[int]]:
    return [sorted(s) for s in sets]


def cmd_lk(args) -> dict:
    b = parse_braid(args.word, args.n)
    split = TwoComponentSplit.of(b, args.base)
    out = {"word": str(b), "n": b.n, "base": sorted(split.base), "rest": sorted(split.rest)}
    if args.method in ("both", "guaschi"):
        try:
            data = guaschi_data(split)
            out["det_full"] = str(data.full)
            out["det_full_at_t2_1"] = str(data.specialized)
            out["det_base"] = str(data.base)
        except IndeterminateError:
            if args.method == "guaschi":
                raise
            out["det_base"] = "0"
    l = linking_number(split, args.method)
    out["lk"] = l
    out["verdict"] = LINKED if l else INCONCLUSIVE
    return out


def cmd_lefschetz(args) -> dict:
    b = parse_braid(args.word, args.n)
    return {"word": str(b), "n": b.n, "lefschetz": str(lefschetz(b))}


def cmd_components(args) -> dict:
    b = parse_braid(args.word, args.n)
    return {"word": str(b), "n": b.n, "components": _sets(closure_components(b))}


def cmd_perm(args) -> dict:
    b = parse_braid(args.word, args.n)
    p = permutation(b)
    return {"word": str(b), "n": b.n, "image": list(p.image),
            "cycles": _sets(sorted(p.cycles(), key=min)), "cyclic": is_cyclic(b),
            "identity": p.is_identity()}


def cmd_subbraid(args) -> dict:
    b = parse_braid(args.word, args.n)
    sub = delete_strands(b, args.keep)
    return {"word": str(b), "n": b.n, "keep": sorted(args.keep),
            "subbraid": str(sub), "subbraid_n": sub.n, "reduced": str(free_cancel(sub))}


def cmd_forces(args) -> dict:
    w, v = parse_lr(args.w), parse_lr(args.v)
    return {"w": str(w), "v": str(v), "forces": forces(w, v)}


def cmd_forced_set(args) -> dict:
    w = parse_lr(args.w)
    words = sorted(forced_set(w), key=lambda x: (len(x), x.letters))
    return {"w": str(w), "forced": [str(x) for x in words]}


def _load_records(path):
    return builtin_records() if path is None else read_catalog(path)


def cmd_linked(args) -> dict:
    """Steps 3-4 on catalog-supplied forced extensions of a base braid."""
    records = _load_records(args.catalog)
    base = free_cancel(parse_braid(args.base_word, args.n)) if args.base_word else None
    rows = []
    for rec in records:
        if args.m is not None and rec.m != args.m:
            continue
        if base is not None and (rec.n != base.n or free_cancel(rec.base) != base):
            continue
        row = {"name": rec.name, "m": rec.m, "extension": rec.extension_word}
        problems = validate_record(rec)
        if problems:
            row["status"] = "invalid"
            row["problems"] = [f"{p.invariant}: {p.reason}" for p in problems]
        else:
            split = TwoComponentSplit.of(rec.extension, rec.base_strands)
            l = linking_number(split, "both")
            row.update(status="ok", lk=l, verdict=LINKED if l else INCONCLUSIVE,
                       orbit_strands=sorted(split.rest))
        rows.append(row)
    return {"extensions": rows,
            "linked": [r["name"] for r in rows if r.get("verdict") == LINKED]}


def cmd_render(args) -> dict:
    b = parse_braid(args.word, args.n)
    try:
        write_svg(b, args.out, args.base, args.labels)
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from None
    return {"word": str(b), "n": b.n, "out": args.out}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidlink", description="Linking data of periodic orbits via braid words.")
    sub = parser.add_subparsers(dest="command", required=True)

    def braid_cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("word", help='signed generator indices, e.g. "1 -2"')
        p.add_argument("--n", type=int, required=True, help="strand count")
        p.add_argument("--json", action="store_true")
        return p

    p = braid_cmd("lk", "linking number of a two-component closure")
    p.add_argument("--base", type=_int_list, required=True, help="base strands, e.g. 1,2,3")
    p.add_argument("--method", choices=("both", "diagram", "guaschi"), default="both")
    p.set_defaults(func=cmd_lk)

    braid_cmd("lefschetz", "generalized Lefschetz number").set_defaults(func=cmd_lefschetz)
    braid_cmd("components", "closure components").set_defaults(func=cmd_components)
    braid_cmd("perm", "induced permutation").set_defaults(func=cmd_perm)

    p = braid_cmd("subbraid", "delete strands outside --keep")
    p.add_argument("--keep", type=_int_list, required=True)
    p.set_defaults(func=cmd_subbraid)

    p = braid_cmd("render", "write an SVG braid diagram")
    p.add_argument("--base", type=_int_list, default=None)
    p.add_argument("--labels", action="store_true", help="annotate crossing signs")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("forces", help="does L-R word W force V")
    p.add_argument("w")
    p.add_argument("v")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_forces)

    p = sub.add_parser("forced-set", help="all pseudo-Anosov L-R words forced by W")
    p.add_argument("w")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_forced_set)

    p = sub.add_parser("linked", help="linked orbits among catalogued forced extensions")
    p.add_argument("--catalog", default=None, help="catalog JSON (default: built-in records)")
    p.add_argument("--base-word", default=None)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_linked)

    p = sub.add_parser("verify", help="reproduce the known values and catalog linking numbers")
    p.add_argument("--catalog", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=None)
    return parser


def _emit_text(result: dict) -> None:
    for key, value in result.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"{key}:")
            for row in value:
                print("  " + ", ".join(f"{k}={v}" for k, v in row.items()))
        else:
            print(f"{key}: {value}")


def _verify(args) -> int:
    try:
        records = _load_records(args.catalog)
    except CatalogError as exc:
        return _fail(args, "CatalogError", str(exc), EXIT_COMPUTE)
    checks = run_checks(records)
    ok = all(c.passed for c in checks)
    if args.json:
        print(json.dumps({"command": "verify", "status": "ok" if ok else "failed",
                          "checks": [c.to_json() for c in checks]}, indent=2))
    else:
        print(format_table(checks))
    return EXIT_OK if ok else EXIT_COMPUTE


def _fail(args, name: str, message: str, code: int) -> int:
    if getattr(args, "json", False):
        print(json.dumps({"command": args.command, "status": "error",
                          "error": name, "message": message}))
    else:
        print(f"error: {name}: {message}", file=sys.stderr)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        return _verify(args)
    try:
        result = args.func(args)
    except (BraidError, LRError, UsageError) as exc:
        return _fail(args, type(exc).__name__, str(exc), EXIT_USAGE)
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        return _fail(args, type(exc).__name__, str(exc), EXIT_COMPUTE)
    if args.json:
        print(json.dumps({"command": args.command, "status": "ok", "result": result}, indent=2))
    else:
        _emit_text(result)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
