"""Command-line interface.

Exit codes: 0 success, 2 domain error, 3 some value is Unknown,
4 a verification failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from moddecomp import decomp, dims, hasse
from moddecomp.curves import CongruenceGroup, GroupKind, profile
from moddecomp.errors import (
    DomainError,
    InvalidSequence,
    ModDecompError,
    VerificationFailure,
    WeightOneUnknown,
)

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_UNKNOWN = 3
EXIT_VERIFY = 4

TABLE_SPECS = {
    # name: (first level, last level, base, number of coefficients, prefix, with genus)
    "B1": (2, 42, decomp.Base.OMEGA, 12, "l", True),
    "B2": (4, 23, decomp.Base.E2, 8, "k", False),
    "B3": (5, 23, decomp.Base.E3, 6, "k", False),
}


@dataclass
class OutputDocument:
    """A table (columns + rows) or a free-form report, rendered in one of three formats."""

    title: str
    columns: list[str] | None = None
    rows: list[list] | None = None
    report: dict | None = None
    lines: list[str] | None = None

    def render(self, fmt: str) -> str:
        if fmt == "json":
            if self.report is not None:
                payload = self.report
            else:
                payload = {"table": self.title, "columns": self.columns, "rows": self.rows}
            return json.dumps(_jsonable(payload), sort_keys=True, indent=2) + "\n"
        if self.rows is None:
            return "\n".join(self.lines or []) + "\n"
        if fmt == "csv":
            out = [",".join(self.columns)]
            out += [",".join(_cell(c) for c in row) for row in self.rows]
            return "\n".join(out) + "\n"
        widths = [
            max(len(_cell(r[i])) for r in [self.columns] + self.rows) for i in range(len(self.columns))
        ]
        out = [self.title]
        for row in [self.columns] + self.rows:
            out.append("  ".join(_cell(c).rjust(w) for c, w in zip(row, widths)).rstrip())
        return "\n".join(out) + "\n"


def _cell(value) -> str:
    return str(value)


def _jsonable(obj):
    if obj is dims.Unknown:
        return "?"
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _group(args) -> CongruenceGroup:
    return CongruenceGroup(GroupKind.parse(args.group), args.level)


def _weight_range(text: str) -> range:
    try:
        lo, _, hi = text.partition("..")
        lo, hi = int(lo), int(hi or lo)
    except ValueError:
        raise DomainError(f"bad weight range {text!r}, expected a..b") from None
    if lo > hi or lo < 0:
        raise DomainError(f"bad weight range {text!r}")
    if hi - lo > 10_000:
        raise DomainError("weight range too long")
    return range(lo, hi + 1)


# --- commands -----------------------------------------------------------------


def cmd_dims(args) -> tuple[OutputDocument, int]:
    group = _group(args)
    table = dims.default_table()
    if args.s1 is not None:
        table = table.merged(dims.WeightOneTable.load(args.s1))
    fn = dims.s_dim if args.cusp else dims.m_dim
    name = "s" if args.cusp else "m"
    rows = [[k, fn(group, k, table)] for k in _weight_range(args.weights)]
    code = EXIT_UNKNOWN if any(r[1] is dims.Unknown for r in rows) else EXIT_OK
    doc = OutputDocument(f"{name}_k for {group}", ["k", f"{name}_k"], rows)
    return doc, code


def table_document(which: str) -> OutputDocument:
    first, last, base, width, prefix, with_genus = TABLE_SPECS[which]
    build = {
        decomp.Base.OMEGA: decomp.l_sequence,
        decomp.Base.E2: decomp.k2_sequence,
        decomp.Base.E3: decomp.k3_sequence,
    }[base]
    columns = ["n"] + (["genus"] if with_genus else []) + [f"{prefix}{i}" for i in range(width)]
    rows = []
    for n in range(first, last + 1):
        group = CongruenceGroup.gamma1(n)
        coeffs = build(group).coeffs
        coeffs = list(coeffs) + [0] * (width - len(coeffs))
        rows.append([n] + ([profile(group).genus] if with_genus else []) + coeffs)
    return OutputDocument(which, columns, rows)


def cmd_tables(args) -> tuple[OutputDocument, int]:
    return table_document(args.which.upper()), EXIT_OK


def cmd_duality(args) -> tuple[OutputDocument, int]:
    scan = decomp.duality_scan(args.max)
    ratios = [[p, k, str(r)] for (p, k), r in sorted(scan.ratios.items())]
    lines = ["solutions: " + ",".join(map(str, scan.solutions)), "ratios g/f(p^k):"]
    lines += [f"  {p}^{k}: {r}" for p, k, r in ratios]
    report = {"bound": scan.bound, "solutions": scan.solutions, "ratios": ratios}
    return OutputDocument("duality", report=report, lines=lines), EXIT_OK


def cmd_anderson(args) -> tuple[OutputDocument, int]:
    pairs = decomp.anderson_table(args.max)
    return OutputDocument("anderson", ["n", "shift"], [list(p) for p in pairs]), EXIT_OK


def cmd_hasse(args) -> tuple[OutputDocument, int]:
    rep = hasse.verify_hasse_lift(args.p, args.precision)
    report = {
        "p": rep.p,
        "m": rep.m,
        "precision": rep.precision,
        "pass": rep.passed,
        "L": [str(c) for c in rep.l_value.coords],
        "v2_L": str(rep.v2_l),
        "v2_L_expected": str(rep.v2_l_expected),
        "v2_one_minus_zeta": str(rep.v2_one_minus_zeta),
    }
    lines = [
        f"p = {rep.p}, m = {rep.m}, precision = {rep.precision}",
        "F = 1 mod 2: pass",
        f"L(0, chi) = {rep.l_value}",
        f"v2(L(0, chi)) = {rep.v2_l} (expected {rep.v2_l_expected})",
        f"v2(1 - zeta) = {rep.v2_one_minus_zeta}",
    ]
    if args.emit_q:
        report["E"] = [[str(c) for c in x.coords] for x in rep.E.coeffs]
        report["F"] = [str(c) for c in rep.F.coeffs]
        lines.append("F = " + " ".join(str(c) for c in rep.F.coeffs))
    code = EXIT_OK if rep.valuation_matches else EXIT_VERIFY
    return OutputDocument("hasse", report=report, lines=lines), code


def cmd_decompose(args) -> tuple[OutputDocument, int]:
    group = _group(args)
    base = decomp.Base.parse(args.base)
    if base is decomp.Base.OMEGA:
        seq = decomp.l_sequence(group)
    elif base is decomp.Base.E2:
        seq = decomp.k2_sequence(group)
    elif base is decomp.Base.E3:
        seq = decomp.k3_sequence(group)
    else:
        seq = decomp.kappa_sequence(group, int(base.name[1]))
    report = {
        "group": str(group),
        "base": base.name.lower(),
        "sequence": seq.coeffs,
        "diagnostics": [{"name": c.name, "pass": c.passed} for c in seq.diagnostics],
    }
    lines = [f"{group} over {base.name.lower()}: {seq.coeffs}"]
    lines += [f"  [{'pass' if c.passed else 'FAIL'}] {c.name}" for c in seq.diagnostics]
    if base is decomp.Base.OMEGA:
        note = decomp.duality_verdict(group).note()
        report["note"] = note
        lines.append(f"note: {note}")
    if args.tmf_prime is not None:
        if group.kind is not GroupKind.GAMMA1:
            raise DomainError("the Tmf splitting report is only defined for Gamma1(n)")
        tmf = decomp.tmf_splitting_report(group.level, args.tmf_prime)
        entries = [[e.suspension, e.summand, e.multiplicity] for e in tmf.entries]
        report["tmf"] = {"prime": tmf.prime_class, "entries": entries, "caveat": tmf.caveat}
        lines.append(f"Tmf_1({group.level}) at l = {tmf.prime_class}:")
        lines += [f"  Sigma^{s} {name} x {mult}" for s, name, mult in entries]
        lines.append(f"  caveat: {tmf.caveat}")
    return OutputDocument("decompose", report=report, lines=lines), EXIT_OK


# --- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moddecomp", description="Invariants and bundle decompositions of modular curves."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_format(p, default="text"):
        p.add_argument("--format", choices=["text", "csv", "json"], default=default)
        return p

    p = with_format(sub.add_parser("dims", help="dimensions of modular or cusp forms"))
    p.add_argument("--group", required=True, help="gamma0, gamma1 or gamma")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--weights", default="0..12", help="inclusive range a..b")
    p.add_argument("--cusp", action="store_true", help="report s_k instead of m_k")
    p.add_argument("--s1", metavar="PATH", help="JSON file with extra s_1 values")
    p.set_defaults(func=cmd_dims)

    p = with_format(sub.add_parser("tables", help="decomposition tables B1, B2, B3"))
    p.add_argument("which", type=str.upper, choices=sorted(TABLE_SPECS))
    p.set_defaults(func=cmd_tables)

    p = with_format(sub.add_parser("duality", help="levels with symmetric l-sequence"))
    p.add_argument("--max", type=int, default=144)
    p.set_defaults(func=cmd_duality)

    p = with_format(sub.add_parser("anderson", help="Anderson self-duality shifts"))
    p.add_argument("--max", type=int, default=42)
    p.set_defaults(func=cmd_anderson)

    p = with_format(sub.add_parser("hasse", help="verify the 2-adic Hasse invariant lift"))
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--precision", type=int, default=100)
    p.add_argument("--emit-q", action="store_true", help="include q-expansions")
    p.set_defaults(func=cmd_hasse)

    p = with_format(sub.add_parser("decompose", help="decomposition of f_* O over a base"))
    p.add_argument("--group", required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--base", default="omega", choices=[b.name.lower() for b in decomp.Base])
    p.add_argument("--tmf-prime", choices=["2", "3", "large"])
    p.set_defaults(func=cmd_decompose)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_DOMAIN if exc.code else EXIT_OK
    try:
        doc, code = args.func(args)
    except WeightOneUnknown as exc:
        print(f"unknown: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except InvalidSequence as exc:
        print(f"invalid sequence: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (DomainError, ModDecompError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(doc.render(args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
