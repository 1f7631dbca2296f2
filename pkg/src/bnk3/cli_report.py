"""Command-line front end and deterministic JSON / CSV / table rendering.

Every report is a flat list of rows. Rationals are always rendered as
"p/q" in lowest terms, never as decimals.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import bn_numerics as bn
from . import dm_lifting as dm
from . import k3_lattice as k3
from . import lm_bundles as lm

SCHEMA_VERSION = "1"
FORMATS = ("json", "csv", "table")


def render_value(value):
    """Normalize a cell to a JSON-native value; Fractions become strings."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return [render_value(v) for v in value]
    if isinstance(value, dict):
        return {k: render_value(v) for k, v in value.items()}
    return value


@dataclass
class ReportDocument:
    command: str
    inputs: dict = field(default_factory=dict)
    rows: list[dict] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION

    def __post_init__(self):
        self.inputs = render_value(self.inputs)
        self.rows = [render_value(row) for row in self.rows]

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "inputs": self.inputs,
            "rows": self.rows,
            "flags": list(self.flags),
        }

    @classmethod
    def from_dict(cls, data: dict) -> ReportDocument:
        return cls(
            command=data["command"],
            inputs=data["inputs"],
            rows=data["rows"],
            flags=data["flags"],
            schema_version=data["schema_version"],
        )

    @property
    def columns(self) -> list[str]:
        cols: list[str] = []
        for row in self.rows:
            for key in row:
                if key not in cols:
                    cols.append(key)
        return cols


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _pad(text: str, width: int) -> str:
    numeric = text.lstrip("-").replace("/", "").isdigit()
    return text.rjust(width) if numeric else text.ljust(width)


def serialize(doc: ReportDocument, fmt: str) -> bytes:
    if fmt == "json":
        text = json.dumps(doc.to_dict(), sort_keys=True, indent=2) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        cols = doc.columns
        if cols:
            writer.writerow(cols)
        for row in doc.rows:
            writer.writerow([_cell(row.get(c)) for c in cols])
        text = buf.getvalue()
    elif fmt == "table":
        cols = doc.columns
        body = [[_cell(row.get(c)) or "-" for c in cols] for row in doc.rows]
        widths = [max([len(c)] + [len(line[i]) for line in body]) for i, c in enumerate(cols)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
        lines += [
            "  ".join(_pad(v, w) for v, w in zip(line, widths)).rstrip() for line in body
        ]
        if not cols:
            lines = ["(no rows)"]
        lines += [f"# {flag}" for flag in doc.flags]
        text = "\n".join(lines) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    return text.encode("utf-8")


def candidate_row(c: dm.LiftCandidate) -> dict:
    cert = c.certificate
    return {
        "r_p": c.r_p,
        "d_p": c.d_p,
        "delta": c.delta,
        "gamma_m": c.gamma_M,
        "rho_p": c.rho_p,
        "discriminant": c.discriminant,
        "quotient_rank": c.quotient.rank,
        "quotient_c1_sq": c.quotient.c1_sq,
        "quotient_c2": c.quotient.c2,
        "quotient_gamma": c.quotient.gamma,
        "mukai_pairing": c.mukai_pairing,
        "mukai_feasible": "mukai_feasible" not in c.flags,
        "min_c2_ok": "min_c2" not in c.flags,
        "h0_product": cert.product,
        "special_marking": cert.is_special_marking,
    }


# -- subcommands -------------------------------------------------------------


def cmd_rho(args) -> ReportDocument:
    g, r, d = args.g, args.r, args.d
    row = {
        "g": g,
        "r": r,
        "d": d,
        "rho": bn.rho(g, r, d),
        "gamma": bn.clifford_index(r, d),
        "discriminant": k3.discriminant(g, r, d),
        "bn_special": bn.is_bn_special_type(g, r, d),
        "non_computing": bn.is_non_computing(g, r, d),
    }
    return ReportDocument("rho", {"g": g, "r": r, "d": d}, [row])


def cmd_delta(args) -> ReportDocument:
    g, r, d = args.g, args.r, args.d
    gamma_a = bn.clifford_index(r, d)
    row = {
        "g": g,
        "r": r,
        "d": d,
        "gamma_a": gamma_a,
        "delta_bound": dm.delta_bound(g, r, gamma_a),
        "delta_upper": dm.delta_upper(g, r, gamma_a),
    }
    return ReportDocument("delta", {"g": g, "r": r, "d": d}, [row])


def cmd_classify_nl(args) -> ReportDocument:
    rows = [
        {
            "r": e.r,
            "d": e.d,
            "rho": e.rho,
            "discriminant": e.discriminant,
            "fixed_component": e.fixed_component,
        }
        for e in k3.enumerate_bn_special_nl(args.g)
    ]
    return ReportDocument("classify-nl", {"g": args.g}, rows)


def cmd_noncomputing(args) -> ReportDocument:
    g = args.g
    rows = [
        {"r": r, "d": d, "rho": bn.rho(g, r, d), "gamma": bn.clifford_index(r, d)}
        for r, d in dm.enumerate_non_computing(g)
    ]
    return ReportDocument("noncomputing", {"g": g}, rows)


def cmd_lifts(args) -> ReportDocument:
    g, r, d = args.g, args.r, args.d
    gamma_c = bn.generic_clifford(g) if args.gamma_c is None else args.gamma_c
    if args.box:
        pairs = dm.box_lift_candidates(g, r, d, gamma_c)
        cands = [dm.make_candidate(g, r, d, rp, dp) for rp, dp in pairs]
    else:
        cands = dm.enumerate_lift_candidates(g, r, d, gamma_c)
    flags = ["box_oracle"] if args.box else []
    inputs = {"g": g, "r": r, "d": d, "gamma_c": gamma_c}
    return ReportDocument("lifts", inputs, [candidate_row(c) for c in cands], flags)


def cmd_mukai(args) -> ReportDocument:
    v = lm.MukaiVector(args.rank, args.c1_sq, args.c2)
    row = {
        "rank": v.rank,
        "c1_sq": v.c1_sq,
        "c2": v.c2,
        "pairing": lm.mukai_self_pairing(v),
        "stability_feasible": lm.stability_feasible(v),
        "min_c2_for_stable": lm.min_c2_for_stable(v.rank, v.c1_sq),
    }
    return ReportDocument("mukai", {"rank": v.rank, "c1_sq": v.c1_sq, "c2": v.c2}, [row])


def cmd_audit(args) -> ReportDocument:
    if args.g is not None:
        lo = hi = args.g
    elif args.lo is not None and args.hi is not None:
        lo, hi = args.lo, args.hi
    else:
        raise UsageError("audit needs either --g or both --from and --to")
    rows, flags = [], []
    for g in range(lo, hi + 1):
        report = dm.audit_genus(g)
        if not report.in_theorem_range:
            flags.append(f"g_{g}_outside_theorem_range")
        for case in report.cases:
            if case.reduction_unavailable:
                flags.append(f"g_{g}_r_{case.source.r}_d_{case.source.d}_reduction_unavailable")
            red = case.reduced_to
            rows.append(
                {
                    "g": g,
                    "r": case.source.r,
                    "d": case.source.d,
                    "route": case.route,
                    "reduced_r": red.r if red else None,
                    "reduced_d": red.d if red else None,
                    "n_candidates": len(case.candidates),
                    "max_rho_p": max((c.rho_p for c in case.candidates), default=None),
                    "gamma_e_bound_ok": case.gamma_E_bound_ok,
                    "mukai_ok": case.mukai_ok,
                    "verdict": case.verdict,
                }
            )
    return ReportDocument("audit", {"from": lo, "to": hi}, rows, flags)


def cmd_bounds(args) -> ReportDocument:
    g, r = args.g, args.r
    rows = [{"name": "proof_strategy_bound", "value": dm.proof_strategy_bound(g, r)}]
    if args.gamma is not None:
        rows.append(
            {"name": "g3_lifting_bound", "value": dm.g3_lifting_bound(g, args.gamma, args.m, args.mu)}
        )
    if args.k is not None:
        rows.append(
            {"name": "glm_instability_threshold", "value": lm.glm_instability_threshold(r, args.k, args.ell)}
        )
    inputs = {"g": g, "r": r, "gamma": args.gamma, "m": args.m, "mu": args.mu, "k": args.k, "ell": args.ell}
    return ReportDocument("bounds", inputs, rows)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bnk3", description="Brill-Noether invariants of polarized K3 surfaces.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=FORMATS, default="table")
        p.set_defaults(func=func)
        return p

    def grd(p, need_r=True):
        p.add_argument("--g", type=int, required=True)
        if need_r:
            p.add_argument("--r", type=int, required=True)
            p.add_argument("--d", type=int, required=True)

    grd(add("rho", cmd_rho, "Brill-Noether number and related invariants"))
    grd(add("delta", cmd_delta, "upper bound on r' - r for lift candidates"))
    grd(add("classify-nl", cmd_classify_nl, "BN-special Noether-Lefschetz divisors"), need_r=False)
    grd(add("noncomputing", cmd_noncomputing, "non-computing BN-special series"), need_r=False)

    p = add("lifts", cmd_lifts, "Donagi-Morrison lift candidates")
    grd(p)
    p.add_argument("--gamma-c", type=int, default=None)
    p.add_argument("--box", action="store_true", help="use the brute-force box filter")

    p = add("mukai", cmd_mukai, "Mukai self-pairing of (rank, c1^2, c2)")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--c1-sq", type=int, required=True)
    p.add_argument("--c2", type=int, required=True)

    p = add("audit", cmd_audit, "replay the case analysis per genus")
    p.add_argument("--g", type=int, default=None)
    p.add_argument("--from", dest="lo", type=int, default=None)
    p.add_argument("--to", dest="hi", type=int, default=None)

    p = add("bounds", cmd_bounds, "degree bounds from the lifting theorems")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--gamma", type=int, default=None)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--mu", type=int, default=0)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--ell", type=int, default=0)
    return parser


def _unknown_flags(parser: argparse.ArgumentParser, argv: list[str]) -> list[str]:
    subparsers = next(
        a for a in parser._actions if isinstance(a, argparse._SubParsersAction)
    )
    sub = subparsers.choices.get(argv[0]) if argv else None
    if sub is None:
        return []
    known = set(sub._option_string_actions)
    return [a.split("=")[0] for a in argv[1:] if a.startswith("--") and a.split("=")[0] not in known]


def run(argv: list[str], stdout=None, stderr=None) -> int:
    """Run one subcommand; returns 0 on success, 1 on domain error, 2 on usage error."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        doc = args.func(args)
    except UsageError as exc:
        unknown = _unknown_flags(parser, argv)
        if unknown:
            exc = f"{parser.prog}: unrecognized arguments: {' '.join(unknown)}"
        print(f"usage error: {exc}", file=stderr)
        return 2
    except bn.DomainError as exc:
        print(f"domain error: {exc}", file=stderr)
        return 1
    out = serialize(doc, args.format)
    if hasattr(stdout, "buffer"):
        stdout.flush()
        stdout.buffer.write(out)
        stdout.buffer.flush()
    else:
        stdout.write(out.decode("utf-8"))
    if doc.command == "audit" and not all(row["verdict"] for row in doc.rows):
        return 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
