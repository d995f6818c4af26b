"""Command-line interface.

Exit codes: 0 success, 1 selftest failure, 2 usage/parameter error,
3 disagreement between CSS-T methods, 4 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import asymptotics, csst, linear_code, reed_muller
from .css import NestingError, all_commute, rm_css_params, stabilizer_matrix
from .gf2 import DimensionError
from .linear_code import EnumerationCapError, INFINITY

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DISAGREE = 3
EXIT_CAP = 4

BRUTEFORCE_M_MAX = 5
SEARCH_M_MAX = 20


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def fmt_num(value) -> str:
    if value is None:
        return "n/a"
    if value == INFINITY:
        return "inf"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def render_table(header: Sequence[str], rows: Sequence[Sequence[str]], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows)
    return "\n".join(lines) + "\n"


def _rm(r: int, m: int) -> reed_muller.RmCode:
    try:
        return reed_muller.rm_code(r, m)
    except reed_muller.RmParameterError as exc:
        raise CliError(str(exc)) from None


# --- subcommands ---------------------------------------------------------


def cmd_rm_info(args) -> int:
    try:
        n, k, d = reed_muller.rm_params(args.r, args.m)
    except reed_muller.RmParameterError as exc:
        raise CliError(str(exc)) from None
    line = f"RM({args.r},{args.m}): [{n},{k},{fmt_num(d)}]"
    code = None
    if args.m <= BRUTEFORCE_M_MAX:
        code = _rm(args.r, args.m).code
        exact = linear_code.min_distance(code)
        if exact != d or code.dim != k:
            raise CliError(f"{line}: enumeration gives dim {code.dim}, d {fmt_num(exact)}", EXIT_FAIL)
        line += " exact-verified"
    print(line)
    if args.matrix:
        code = code or _rm(args.r, args.m).code
        sys.stdout.write(code.gen.to_text())
    return EXIT_OK


def _pair(m: int, r1: int, r2: int):
    _rm(r1, m)
    _rm(r2, m)
    if r2 > r1:
        raise CliError(f"RM({r2},{m}) is not contained in RM({r1},{m}): need r2 <= r1")
    return csst.rm_pair(m, r1, r2)


def cmd_csst_check(args) -> int:
    m, r1, r2 = args.m, args.r1, args.r2
    pair = _pair(m, r1, r2)
    params = rm_css_params(m, r1, r2)
    note = " (k=0: degenerate code)" if params.k == 0 else ""
    print(f"CSS(RM({r1},{m}), RM({r2},{m})): n={params.n} k={params.k} d_lower={fmt_num(params.d_lower)}{note}")

    methods = ["theorem", "corollary", "bruteforce"] if args.method == "all" else [args.method]
    verdicts: dict[str, bool] = {}
    for method in methods:
        if method == "theorem":
            if not csst.theorem_applicable(m, r1, r2):
                if args.method == "theorem":
                    raise CliError(f"theorem inapplicable to (m={m}, r1={r1}, r2={r2}); use brute force")
                print("theorem: n/a (outside 0 <= r2 <= r1 <= floor((m-1)/2))")
                continue
            verdicts[method] = csst.check_csst_theorem(m, r1, r2)
            print(f"theorem: {fmt_num(verdicts[method])}")
            continue
        check = csst.check_csst_corollary if method == "corollary" else csst.check_csst_bruteforce
        try:
            report = check(pair)
        except EnumerationCapError as exc:
            raise CliError(f"{method}: {exc}", EXIT_CAP) from None
        verdicts[method] = report.verdict
        print(f"{method}: {fmt_num(report.verdict)} ({report.checked_count} codewords checked)")
        if report.witness is not None:
            print(f"{method} witness: {report.witness}")

    values = set(verdicts.values())
    if len(values) > 1:
        print("CSS-T: methods disagree", file=sys.stderr)
        return EXIT_DISAGREE
    verdict = values.pop()
    names = ", ".join(verdicts)
    suffix = f"({names} agree)" if len(verdicts) > 1 else f"({names})"
    print(f"CSS-T: {fmt_num(verdict)} {suffix}")
    return EXIT_OK


def cmd_csst_search(args) -> int:
    m = args.m
    if not 1 <= m <= SEARCH_M_MAX:
        raise CliError(f"m must be between 1 and {SEARCH_M_MAX}")
    brute = m <= BRUTEFORCE_M_MAX
    header = ["r1", "r2", "t", "theorem"] + (["bruteforce"] if brute else []) + ["n", "k", "d_lower"]
    rows = []
    top = (m - 1) // 2
    for r1 in range(top, -1, -1):
        for r2 in range(r1 + 1):
            verdict = csst.check_csst_theorem(m, r1, r2)
            row = [str(r1), str(r2), str(top - r1), fmt_num(verdict)]
            if brute:
                bf = csst.check_csst_bruteforce(csst.rm_pair(m, r1, r2)).verdict
                row.append(fmt_num(bf))
            p = rm_css_params(m, r1, r2)
            row += [str(p.n), str(p.k), fmt_num(p.d_lower)]
            rows.append(row)
    sys.stdout.write(render_table(header, rows, args.format))
    return EXIT_OK


def cmd_stabilizer(args) -> int:
    m, r1, r2 = args.m, args.r1, args.r2
    pair = _pair(m, r1, r2)
    params = rm_css_params(m, r1, r2)
    g = stabilizer_matrix(pair)
    text = f"# n={params.n} k={params.k} d_lower={fmt_num(params.d_lower)}\n" + g.to_text()
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _family_spec(args) -> asymptotics.FamilySpec:
    param = Fraction(0)
    if args.param is not None:
        try:
            param = Fraction(args.param)
        except (ValueError, ZeroDivisionError):
            raise CliError(f"invalid --param {args.param!r}") from None
    try:
        return asymptotics.FamilySpec(args.family, param, args.r2)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def cmd_family(args) -> int:
    spec = _family_spec(args)
    for w in spec.warnings:
        print(f"warning: {w}", file=sys.stderr)
    if args.m_max < args.m_min or args.m_min < 1:
        raise CliError("need 1 <= m-min <= m-max")
    header = ["m", "t", "r1", "r2", "n", "k", "d_lower", "rate_c1", "quantum_rate", "rel_distance"]
    if args.gamma:
        header.append("gamma")
    rows = []
    for row in asymptotics.family_table(spec, args.m_max, args.m_min):
        if not row.admissible:
            cells = [str(row.m)] + ["n/a"] * (len(header) - 1)
        else:
            cells = [
                str(row.m), str(row.t), str(row.r1), str(row.r2), str(row.n), str(row.k),
                str(row.d_lower), fmt_num(row.rate_c1), fmt_num(row.quantum_rate),
                fmt_num(row.relative_distance),
            ]
            if args.gamma:
                cells.append(fmt_num(row.gamma))
        rows.append(cells)
    sys.stdout.write(render_table(header, rows, args.format))
    if args.format != "csv":
        print("# k = dim(C1) - dim(C2); d_lower = 2^(r2+1)")
        if args.gamma:
            print("# gamma = log(n/k)/log(d_lower), derived column only")
    # keep csv stdout machine-readable
    footer = sys.stderr if args.format == "csv" else sys.stdout
    print(f"asymptotic rate = {asymptotics.format_asymptotic(spec)}", file=footer)
    return EXIT_OK


# --- selftest --------------------------------------------------------------


def _suite_theorem(quick: bool):
    m_max = 4 if quick else 5
    rows = csst.cross_validate(m_max)
    bad = [r for r in rows if not r.agree]
    ok = len(rows) - len(bad)
    summary = f"theorem-vs-bruteforce: {ok}/{len(rows)} agree (m ≤ {m_max})"
    return summary, (str(bad[0]) if bad else None)


def _suite_dual_identity(quick: bool):
    m_max = 6 if quick else 7
    total = ok = 0
    first = None
    for m in range(1, m_max + 1):
        for r in range(m):
            total += 1
            lhs = linear_code.dual(reed_muller.rm_code(r, m).code)
            rhs = reed_muller.rm_code(reed_muller.rm_dual_order(r, m), m).code
            if lhs.canon == rhs.canon:
                ok += 1
            elif first is None:
                first = f"dual(RM({r},{m})) != RM({m - r - 1},{m})"
    return f"rm-dual-identity: {ok}/{total} (m ≤ {m_max})", first


def _suite_rm_params(quick: bool):
    total = ok = 0
    first = None
    for m in range(1, 6):
        for r in range(m + 1):
            if quick and m == 5 and r >= 3:
                continue
            total += 1
            code = reed_muller.rm_code(r, m).code
            _, k, d = reed_muller.rm_params(r, m)
            if code.dim == k and linear_code.min_distance(code) == d:
                ok += 1
            elif first is None:
                first = f"RM({r},{m}) parameters differ from [2^m, sum binom, 2^(m-r)]"
    return f"rm-parameters: {ok}/{total} (m ≤ 5)", first


def _suite_shorten_puncture(quick: bool):
    total = ok = 0
    first = None
    for m in range(1, 5 if not quick else 4):
        for r in range(-1, m + 1):
            c = reed_muller.rm_code(r, m).code
            n = c.n
            sets = [(i,) for i in range(n)] + list(combinations(range(n), 2))
            for idx in sets:
                if len(idx) >= n:
                    continue
                total += 1
                lhs = linear_code.dual(linear_code.shorten(c, idx))
                rhs = linear_code.puncture(linear_code.dual(c), idx)
                if lhs == rhs:
                    ok += 1
                elif first is None:
                    first = f"RM({r},{m}) on {idx}: dual(shorten) != puncture(dual)"
    return f"shorten-puncture-duality: {ok}/{total}", first


def _suite_stabilizer(quick: bool):
    total = ok = 0
    first = None
    for m, r1, r2 in csst.theorem_triples(4 if quick else 5):
        total += 1
        if all_commute(stabilizer_matrix(csst.rm_pair(m, r1, r2))):
            ok += 1
        elif first is None:
            first = f"G_S of CSS(RM({r1},{m}), RM({r2},{m})) has anticommuting rows"
    return f"stabilizer-commutation: {ok}/{total}", first


SUITES = (_suite_theorem, _suite_dual_identity, _suite_rm_params, _suite_shorten_puncture, _suite_stabilizer)


def cmd_selftest(args) -> int:
    for suite in SUITES:
        summary, failure = suite(args.quick)
        print(summary)
        if failure is not None:
            print(f"counterexample: {failure}")
            return EXIT_FAIL
    return EXIT_OK


# --- entry point -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rmcsst", description="Reed-Muller CSS-T code toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rm-info", help="parameters of RM(r, m)")
    p.add_argument("r", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--matrix", action="store_true", help="emit the generator matrix")
    p.set_defaults(func=cmd_rm_info)

    p = sub.add_parser("csst-check", help="decide CSS-T for CSS(RM(r1,m), RM(r2,m))")
    p.add_argument("m", type=int)
    p.add_argument("r1", type=int)
    p.add_argument("r2", type=int)
    p.add_argument("--method", choices=["theorem", "bruteforce", "corollary", "all"], default="all")
    p.set_defaults(func=cmd_csst_check)

    p = sub.add_parser("csst-search", help="sweep all (r1, r2) for a given m")
    p.add_argument("m", type=int)
    p.add_argument("--format", choices=["table", "csv"], default="table")
    p.set_defaults(func=cmd_csst_search)

    p = sub.add_parser("stabilizer", help="stabilizer generator matrix G_S")
    p.add_argument("m", type=int)
    p.add_argument("r1", type=int)
    p.add_argument("r2", type=int)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_stabilizer)

    p = sub.add_parser("family", help="rate table of a CSS-T family")
    p.add_argument("--family", required=True, choices=list(asymptotics.FAMILY_KINDS))
    p.add_argument("--param", default=None, help="t (const), c (sqrt) or a (linear); fractions accepted")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--m-min", type=int, default=1)
    p.add_argument("--r2", type=int, default=None, help="fixed r2 instead of the largest allowed")
    p.add_argument("--gamma", action="store_true", help="add the derived log(n/k)/log(d) column")
    p.add_argument("--format", choices=["table", "csv"], default="table")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("selftest", help="run the embedded acceptance checks")
    p.add_argument("--quick", action="store_true", help="skip the m = 5 enumerations")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (NestingError, DimensionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
