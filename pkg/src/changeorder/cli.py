"""Command-line front end: ``solve``, ``random``, ``check`` and ``bench``.

Exit codes: 0 on success, 2 when a structural fallback was taken, 1 on error.
Set ``CHANGEORDER_LOG`` (e.g. ``INFO`` or ``DEBUG``) for progress messages.
"""

from __future__ import annotations

import argparse
import csv
import logging
import os
import sys

from . import _text
from .groebner import (
    NotZeroDimensionalError,
    check_stability,
    check_zero_dimensional,
    format_poly_file,
    is_shape_position,
    parse_poly_file,
    read_gb_file,
    staircase,
    write_gb_file,
)
from .mvpoly import LEX, default_var_names
from .pipeline import (
    DEFAULT_MODULUS,
    METHODS,
    drl_basis,
    lex_by_buchberger,
    random_system,
    solve,
    via_fglm,
    via_hnf,
)

log = logging.getLogger("changeorder")

EXIT_OK, EXIT_ERROR, EXIT_FALLBACK = 0, 1, 2

BENCH_COLUMNS = ["n", "d", "rep", "seed", "D", "t", "stable", "shape",
                 "buchberger_drl", "build_P", "hnf", "read_off", "build_M", "sparse_fglm",
                 "buchberger_lex", "agreement"]


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(path, text):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_solve(args) -> int:
    field, names, _, gens = parse_poly_file(_read(args.input))
    gb = None
    if args.gb_drl:
        gb, gb_names = read_gb_file(_read(args.gb_drl))
        if gb_names != names or gb.field != field:
            raise ValueError("the DRL basis file does not match the system's ring")
    sol = solve(gens, args.method, seed=args.seed, drl_gb=gb)
    for note in sol.notes:
        log.warning(note)
    for stage, secs in sol.timings.items():
        log.info("%s: %.3fs", stage, secs)
    _write(args.output, write_gb_file(sol.lex_gb, names))
    return EXIT_FALLBACK if sol.fallback else EXIT_OK


def cmd_random(args) -> int:
    gens = random_system(args.n, args.d, args.p, args.seed)
    names = default_var_names(args.n)
    _write(args.output, format_poly_file(gens[0].field, names, gens, None))
    return EXIT_OK


def check_report(text) -> list:
    gb, names = read_gb_file(text)
    lines = ["order: %s" % gb.order.value]
    try:
        check_zero_dimensional(gb.leading_monomials(), gb.nvars)
        zero_dim = True
    except NotZeroDimensionalError:
        zero_dim = False
    lines.append("zero_dimensional: %s" % str(zero_dim).lower())
    if zero_dim:
        prof = staircase(gb)
        lines.append("D: %d" % prof.dimension)
        lines.append("t: %d" % prof.t)
        lines.append("e: %s" % ",".join(str(e) for e in prof.exponents))
    rep = check_stability(gb)
    lines.append("stable: %s" % str(rep.stable).lower())
    if not rep.stable:
        mu, i = rep.witness
        lines.append("witness: %s, %s" % (_text.format_term(1, mu, names), names[i]))
    if gb.order is LEX:
        lines.append("shape: %s" % str(is_shape_position(gb)).lower())
    return lines


def cmd_check(args) -> int:
    sys.stdout.write("\n".join(check_report(_read(args.gb))) + "\n")
    return EXIT_OK


def parse_grid(text):
    grid = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        n, sep, d = item.partition(":")
        if not sep:
            raise ValueError("grid entries look like n:d, got %r" % item)
        grid.append((int(n), int(d)))
    return grid


def bench_records(grid, p=DEFAULT_MODULUS, seed=0, reps=1, oracle=False,
                  max_dim=4096, max_oracle_dim=512):
    for n, d in grid:
        if d ** n > max_dim:
            log.warning("skipping %d:%d, expected dimension %d exceeds %d", n, d, d ** n, max_dim)
            continue
        for rep in range(reps):
            s = seed + rep
            timings = {}
            gb = drl_basis(random_system(n, d, p, s), timings)
            hnf = via_hnf(gb, timings, certify=False)
            fglm = via_fglm(gb, s, timings)
            agree = hnf.lex_gb == fglm.lex_gb
            prof = hnf.profile
            if oracle and prof.dimension <= max_oracle_dim:
                agree = agree and lex_by_buchberger(gb, timings) == hnf.lex_gb
            row = {"n": n, "d": d, "rep": rep, "seed": s, "D": prof.dimension, "t": prof.t,
                   "stable": hnf.stable, "shape": hnf.shape is not None, "agreement": agree}
            for key in BENCH_COLUMNS[8:-1]:
                row[key] = "%.4f" % timings[key] if key in timings else ""
            yield row


def cmd_bench(args) -> int:
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=BENCH_COLUMNS, lineterminator="\n")
        writer.writeheader()
        ok = True
        for row in bench_records(parse_grid(args.grid), args.p, args.seed, args.reps, args.oracle):
            ok = ok and row["agreement"]
            writer.writerow(row)
            out.flush()
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK if ok else EXIT_ERROR


def build_parser():
    ap = argparse.ArgumentParser(prog="changeorder",
                                 description="DRL to LEX change of order through polynomial matrices")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="compute the reduced LEX basis of a system")
    s.add_argument("--input", required=True)
    s.add_argument("--method", choices=METHODS, default="hnf")
    s.add_argument("--gb-drl", help="precomputed DRL basis; skips the first Buchberger run")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--output")
    s.set_defaults(func=cmd_solve)

    r = sub.add_parser("random", help="print a seeded random dense square system")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--d", type=int, required=True)
    r.add_argument("--p", type=int, default=DEFAULT_MODULUS)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--output")
    r.set_defaults(func=cmd_random)

    c = sub.add_parser("check", help="report the structure of a Groebner basis file")
    c.add_argument("--gb", required=True)
    c.set_defaults(func=cmd_check)

    b = sub.add_parser("bench", help="time the stages on random systems, as CSV")
    b.add_argument("--grid", required=True, help='e.g. "2:4,3:3"')
    b.add_argument("--p", type=int, default=DEFAULT_MODULUS)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--reps", type=int, default=1)
    b.add_argument("--oracle", action="store_true", help="also compare with Buchberger under LEX")
    b.add_argument("--output")
    b.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    level = os.environ.get("CHANGEORDER_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
