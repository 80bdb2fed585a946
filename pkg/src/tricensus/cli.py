"""Command-line front end: verification suites and CSV tables.

Exit codes: 0 all computations ran and every required claim passed;
1 usage error; 2 a required claim failed; 3 an internal consistency fault
(two supposedly-equivalent computations disagreed).
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import dataclass
from pathlib import Path

from mpmath import mp

from . import asymptotics, census, claims, triangulation_lab as lab

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CLAIM_FAILED = 2
EXIT_INTERNAL_FAULT = 3


@dataclass
class RunConfig:
    subcommand: str
    order: int = 200
    vmax: int = 8
    digits: int = 30
    output: str | None = None
    threads: int = 0
    # subcommand-specific extras
    input: str | None = None
    lam: int | None = None
    convention: str = "present-paper"


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _frac(f) -> str:
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


def _real(x, digits: int) -> str:
    with mp.workdps(digits + 5):
        return mp.nstr(mp.mpf(x), digits)


def cmd_series(cfg: RunConfig) -> int:
    conv = (
        census.SeriesConvention.TUTTE
        if cfg.convention == "tutte"
        else census.SeriesConvention.PRESENT_PAPER
    )
    order = cfg.order
    g = census.g_series(order, conv)
    columns = {"g": g}
    if conv is census.SeriesConvention.PRESENT_PAPER:
        h = census.h_candidate(order)
        columns["h_candidate"] = h
        columns["g_minus_h"] = g - h
        columns["q"] = census.q_series(order)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n"] + list(columns))
    for n in range(order + 1):
        writer.writerow([n] + [_frac(series[n]) for series in columns.values()])
    _emit(buf.getvalue(), cfg.output)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    settings = claims.RunSettings(order=cfg.order, vmax=cfg.vmax, digits=cfg.digits)
    records, ok = claims.run_claims(settings)
    text = claims.ledger_csv(records)
    _emit(text, cfg.output or "ledger.csv")
    required = set(claims.required_claim_ids())
    for r in records:
        flag = "required" if r.claim_id in required else "report"
        print(f"{r.status.value:7s} {flag:8s} {r.claim_id}")
    print(f"ledger: {len(records)} claims -> {cfg.output or 'ledger.csv'}")
    return EXIT_OK if ok else EXIT_CLAIM_FAILED


def cmd_asymptotics(cfg: RunConfig) -> int:
    d = cfg.digits
    lines = []
    a = asymptotics.eval_A(claims.ENCLOSURE_DIGITS)
    a_lit = asymptotics.eval_A_paper_literal(claims.ENCLOSURE_DIGITS)
    lines.append(f"A = g(27/256) in [{float(a.lo):.9f}, {float(a.hi):.9f}]")
    lines.append(
        f"printed-form reading of A: [{float(a_lit.lo):.9f}, {float(a_lit.hi):.9f}]"
    )
    lines.append(f"B closed form = {_real(asymptotics.const_B(d), min(d, 30))}")
    enc = asymptotics.const_B_enclosure(18)
    lines.append(f"B rational enclosure midpoint = {float(enc.midpoint):.15f}")
    table = asymptotics.ratio_table(min(cfg.order * 10, claims.RATIO_ORDER))
    lines.append(f"ratio extrapolated = {_real(table.extrapolated, 10)}")
    lines.append(f"  2A prediction      = {_real(table.two_a, 10)}")
    lines.append(f"  printed constant   = {_real(table.paper_constant, 10)}")
    lines.append(f"  coefficient-form   = {_real(table.implied_constant, 10)}")
    radius = asymptotics.radius_estimate(
        census.g_coeffs(claims.RADIUS_ORDER), claims.RADIUS_WINDOW, first_index=1
    )
    lines.append(f"radius(g) estimate = {_real(radius, 10)} (27/256 = {27 / 256:.10f})")
    fit = asymptotics.singular_fit(claims.FIT_ORDER)
    lines.append(
        f"singular fit: B = {_real(fit.B, 10)} (closed {_real(fit.closed_form_B, 10)}), "
        f"A1 = {_real(fit.A1, 8)}"
    )
    _emit("\n".join(lines) + "\n", cfg.output)
    return EXIT_OK


def cmd_census(cfg: RunConfig) -> int:
    rows = lab.census_table(cfg.vmax)
    gs = census.g_coeffs(cfg.vmax)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["V", "classes", "rooted_total", "rooted_4connected", "rooted_in_Q", "aligned_n", "g_n"]
    )
    for r in rows:
        g_val = gs[r.aligned_n - 1] if r.aligned_n else ""
        writer.writerow(
            [r.V, r.classes, r.rooted_total, r.rooted_4connected, r.rooted_in_Q,
             r.aligned_n if r.aligned_n else "", g_val]
        )
    _emit(buf.getvalue(), cfg.output or "census.csv")
    return EXIT_OK


def cmd_chromatic(cfg: RunConfig) -> int:
    if not cfg.input:
        print("chromatic requires --input FILE (planar_code)", file=sys.stderr)
        return EXIT_USAGE
    data = Path(cfg.input).read_bytes()
    maps = lab.read_planar_code(data)
    out = []
    for i, t in enumerate(maps):
        poly = lab.chromatic_poly(t)
        out.append(f"map {i}: V={t.num_vertices} P = {poly}")
        if cfg.lam is not None:
            out.append(f"map {i}: P({cfg.lam}) = {poly.evaluate(cfg.lam)}")
        out.append(f"map {i}: P(4) = {poly.evaluate(4)}")
    _emit("\n".join(out) + "\n", cfg.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricensus",
        description="Verification workbench for triangulation counting identities",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--order", type=int, default=200, help="series working order")
        p.add_argument("--vmax", type=int, default=8, help="census vertex ceiling")
        p.add_argument("--digits", type=int, default=30, help="display precision")
        p.add_argument("--output", type=str, default=None, help="output path")
        p.add_argument(
            "--threads",
            type=int,
            default=0,
            help="reserved; the current implementation is sequential (0 = auto)",
        )

    p = sub.add_parser("series", help="coefficient tables for g, h, g-h, (g-h)^2")
    common(p)
    p.add_argument("--convention", choices=["present-paper", "tutte"], default="present-paper")

    p = sub.add_parser("verify", help="run every registered claim; write ledger.csv")
    common(p)

    p = sub.add_parser("asymptotics", help="constants, ratio limits, radius estimates, fits")
    common(p)

    p = sub.add_parser("census", help="brute-force census table; write census.csv")
    common(p)

    p = sub.add_parser("chromatic", help="chromatic polynomials of planar_code input")
    common(p)
    p.add_argument("--input", type=str, default=None, help="planar_code file")
    p.add_argument("--lambda", dest="lam", type=int, default=None, help="evaluation point")

    return parser


COMMANDS = {
    "series": cmd_series,
    "verify": cmd_verify,
    "asymptotics": cmd_asymptotics,
    "census": cmd_census,
    "chromatic": cmd_chromatic,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    cfg = RunConfig(
        subcommand=ns.subcommand,
        order=ns.order,
        vmax=ns.vmax,
        digits=ns.digits,
        output=ns.output,
        threads=ns.threads,
        input=getattr(ns, "input", None),
        lam=getattr(ns, "lam", None),
        convention=getattr(ns, "convention", "present-paper"),
    )
    if cfg.order < 1 or cfg.vmax < 4 or cfg.digits < 1 or cfg.threads < 0:
        print("invalid argument values", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[cfg.subcommand](cfg)
    except lab.InternalConsistencyError as exc:
        print(f"internal consistency fault: {exc}", file=sys.stderr)
        return EXIT_INTERNAL_FAULT
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
