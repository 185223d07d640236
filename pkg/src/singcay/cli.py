"""Command-line front end.

    singcay char 5 [4,1] (3,1,1)
    singcay blocks 14 2
    singcay tables
    singcay singular A 5 (5)+
    singcay vanishing A 7
    singcay verify nr5 7..14
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from . import blocks, cayley, vanishing
from .characters import ALT, SYM, CharacterLabel, ClassLabel, value
from .config import CONFIG, ResourceBoundError

_SEQ = re.compile(r"^\s*([\[(])\s*([0-9,\s]*)\s*([\])])\s*([+-]?)\s*$")


def _parse_seq(text: str, brackets: str) -> tuple[tuple, str]:
    m = _SEQ.match(text)
    if not m or m.group(1) + m.group(3) != brackets:
        raise argparse.ArgumentTypeError(f"expected {brackets[0]}a,b,...{brackets[1]}, got {text!r}")
    body = m.group(2).strip()
    parts = tuple(int(x) for x in body.split(",") if x.strip()) if body else ()
    return parts, m.group(4)


def parse_partition(text: str) -> tuple[tuple, str]:
    return _parse_seq(text, "[]")


def parse_cycle_type(text: str) -> tuple[tuple, str]:
    return _parse_seq(text, "()")


def _group(text: str) -> str:
    g = text.upper()
    if g in ("S", "SYM"):
        return SYM
    if g in ("A", "ALT"):
        return ALT
    raise argparse.ArgumentTypeError(f"group must be S or A, got {text!r}")


def _class_label(text: str, group: str, n: int) -> ClassLabel:
    ct, split = parse_cycle_type(text)
    ct = tuple(sorted(ct, reverse=True))
    if sum(ct) != n:
        raise ValueError(f"cycle type {text} is not a partition of {n}")
    return ClassLabel(ct, split, group)


def _char_label(text: str, group: str, n: int) -> CharacterLabel:
    lam, split = parse_partition(text)
    if sum(lam) != n or list(lam) != sorted(lam, reverse=True) or any(x <= 0 for x in lam):
        raise ValueError(f"{text} is not a partition of {n}")
    return CharacterLabel(lam, split, group)


def _range(text: str, default: range) -> range:
    if text in (None, "default"):
        return default
    if ".." in text:
        lo, hi = text.split("..")
        return range(int(lo), int(hi) + 1)
    return range(int(text), int(text) + 1)


def _emit(obj, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(obj, out, indent=2, sort_keys=False)
        out.write("\n")
    elif isinstance(obj, str):
        out.write(obj)
    else:
        out.write(_text(obj) + "\n")


def _text(obj) -> str:
    lines = []
    for k, v in obj.items():
        if isinstance(v, list) and all(isinstance(x, (str, int)) for x in v):
            v = " ".join(map(str, v))
        elif isinstance(v, (dict, list)):
            v = json.dumps(v, separators=(",", ":"))
        lines.append(f"{k}: {v}")
    return "\n".join(lines)


# --- commands ----------------------------------------------------------------

def cmd_char(args, out) -> int:
    lam, lsplit = parse_partition(args.partition)
    _, csplit = parse_cycle_type(args.cycle_type)
    group = args.group or (ALT if lsplit or csplit else SYM)
    chi = _char_label(args.partition, group, args.n)
    cls = _class_label(args.cycle_type, group, args.n)
    v = value(chi, cls, args.convention)
    if args.format == "json":
        _emit({"group": group, "n": args.n, "character": str(chi), "class": str(cls),
               "value": v.to_json(), "text": str(v)}, "json", out)
    else:
        out.write(f"{v}\n")
    return 0


def cmd_blocks(args, out) -> int:
    n, p = args.n, args.p
    mb = blocks.minimal_block(n, p)
    obj = {"n": n, "p": p,
           "defect_supports": blocks.defect_supports(n, p),
           "min_defect_support": blocks.min_defect_support(n, p),
           "min_defect": blocks.min_defect(n, p),
           "defect0": {"S": blocks.has_defect0(n, p, SYM), "A": blocks.has_defect0(n, p, ALT)},
           "minimal_block": mb.to_json()}
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "p", "min_defect_support", "min_defect", "defect0_S", "defect0_A"])
        w.writerow([n, p, obj["min_defect_support"], obj["min_defect"],
                    obj["defect0"]["S"], obj["defect0"]["A"]])
        out.write(buf.getvalue())
    else:
        _emit(obj, args.format, out)
    return 0


def cmd_tables(args, out) -> int:
    parts = []
    if args.table in ("1", "both"):
        parts.append(blocks.table_csv(blocks.table1(), blocks.TABLE1_HEADER))
    if args.table in ("2", "both"):
        parts.append(blocks.table_csv(blocks.table2(), blocks.TABLE2_HEADER))
    out.write("\n".join(parts))
    return 0


def cmd_singular(args, out) -> int:
    classes = [_class_label(c, args.group, args.n) for c in args.classes]
    spec = cayley.build_connecting(args.group, args.n, classes)
    obj = cayley.verdict(spec, args.convention)
    if args.brute:
        obj["brute_force_nullity"] = cayley.brute_force_nullity(spec)
    if args.format != "json":
        obj["spectrum"] = [f"{e.eigenvalue}^{e.multiplicity}" for e in cayley.spectrum(spec, args.convention)]
    _emit(obj, args.format, out)
    return 0


def cmd_vanishing(args, out) -> int:
    if args.cls is None:
        nv = vanishing.nonvanishing_classes(args.group, args.n)
        _emit({"group": args.group, "n": args.n, "nonvanishing": [str(c) for c in nv]}, args.format, out)
        return 0
    cls = _class_label(args.cls, args.group, args.n)
    try:
        cert = vanishing.vanishing_certificate(args.group, args.n, cls)
        status = "vanishing" if cert else "nonvanishing"
    except vanishing.UndecidedError:
        cert, status = None, "unknown"
    _emit({"group": args.group, "n": args.n, "class": str(cls), "status": status,
           "certificate": cert.to_json() if cert else None}, args.format, out)
    return 0


def _run_one(job):
    check_id, n, max_n = job
    CONFIG.max_table_n = max_n
    return vanishing.run_check(check_id, n)


def cmd_verify(args, out) -> int:
    ids = vanishing.check_ids() if args.check == "all" else [args.check]
    if not set(ids) <= set(vanishing.check_ids()):
        raise ValueError(f"unknown check {args.check!r}")
    jobs = [(cid, n, CONFIG.max_table_n) for cid in ids
            for n in _range(args.range, vanishing.default_range(cid))]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run_one, jobs))
    else:
        reports = [_run_one(j) for j in jobs]
    ok = all(r.ok for r in reports)
    if args.format == "json":
        _emit({"ok": ok, "reports": [r.to_json() for r in reports]}, "json", out)
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if args.format == "csv":
            w.writerow(["check_id", "n", "status", "counterexamples"])
        for r in reports:
            bad = " ".join(f"{c.group}{c}" for c in r.counterexamples())
            if args.format == "csv":
                w.writerow([r.check_id, r.n, r.status, bad])
            else:
                buf.write(f"{r.check_id} n={r.n} {r.status}" + (f" [{bad}]" if bad else "") + "\n")
        out.write(buf.getvalue())
    return 0 if ok else 1


# --- argument parsing ---------------------------------------------------------

def _common_options(ap: argparse.ArgumentParser, top: bool) -> None:
    # accepted before or after the subcommand; the subcommand copy only overrides when given
    def default(v):
        return v if top else argparse.SUPPRESS
    ap.add_argument("--format", choices=("json", "csv", "text"), default=default(CONFIG.output_format))
    ap.add_argument("--max-n", type=int, default=default(CONFIG.max_table_n),
                    help="largest n for full character tables")
    ap.add_argument("--oracle-limit", type=int, default=default(CONFIG.max_oracle_group_order),
                    help="largest group order for the brute-force adjacency oracle")
    ap.add_argument("--jobs", type=int, default=default(1), help="worker processes for verify")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="singcay", description="Exact character and Cayley graph computations for S_n and A_n.")
    _common_options(ap, True)
    common = argparse.ArgumentParser(add_help=False)
    _common_options(common, False)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("char", parents=[common], help="character value")
    p.add_argument("n", type=int)
    p.add_argument("partition")
    p.add_argument("cycle_type")
    p.add_argument("--group", type=_group, default=None)
    p.add_argument("--convention", type=int, choices=(1, -1), default=1)
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("blocks", parents=[common], help="defect supports of p-blocks of S_n")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("tables", parents=[common], help="the minimal-defect tables as CSV")
    p.add_argument("--table", choices=("1", "2", "both"), default="both")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("singular", parents=[common], help="singularity verdict for a class Cayley graph")
    p.add_argument("group", type=_group)
    p.add_argument("n", type=int)
    p.add_argument("classes", nargs="+")
    p.add_argument("--convention", type=int, choices=(1, -1), default=1)
    p.add_argument("--brute", action="store_true", help="also compute the nullity by explicit elimination")
    p.set_defaults(func=cmd_singular)

    p = sub.add_parser("vanishing", parents=[common], help="certificate for a class, or the non-vanishing classes")
    p.add_argument("group", type=_group)
    p.add_argument("n", type=int)
    p.add_argument("cls", nargs="?")
    p.set_defaults(func=cmd_vanishing)

    p = sub.add_parser("verify", parents=[common], help="run the lemma battery")
    p.add_argument("check", help="check id or 'all'; one of: " + ", ".join(vanishing.check_ids()))
    p.add_argument("range", nargs="?", default="default", help="N, LO..HI or 'default'")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    ap = build_parser()
    args = ap.parse_args(argv)
    saved = (CONFIG.max_table_n, CONFIG.max_oracle_group_order, CONFIG.output_format)
    try:
        CONFIG.max_table_n = args.max_n
        CONFIG.max_oracle_group_order = args.oracle_limit
        CONFIG.output_format = args.format
        CONFIG.__post_init__()
        return args.func(args, out)
    except ResourceBoundError as exc:
        print(f"singcay: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, argparse.ArgumentTypeError) as exc:
        ap.error(str(exc))
    finally:
        CONFIG.max_table_n, CONFIG.max_oracle_group_order, CONFIG.output_format = saved


if __name__ == "__main__":
    sys.exit(main())
