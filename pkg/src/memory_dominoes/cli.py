"""Command-line front end: tables, series, distributions and verification suites.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, fields
from typing import List, Sequence

from . import aggregate, boards, counts, distributions, linear, oeis
from .boards import SizeLimitError
from .report import IdentityReport

ENV_PREFIX = "MEMORY_DOMINOES_"
FORMATS = ("plain", "json", "csv")
SERIES_NAMES = ("T", "calT", "D", "L", "E-horizontal", "F")
SUITES = ("all", "oracle", "recursion", "egf", "bounds", "oeis")


class UsageError(Exception):
    pass


@dataclass
class Config:
    """Limits and defaults; each field can be overridden by MEMORY_DOMINOES_<FIELD>."""

    max_k: int = 10  # default series/table range when --max-k is absent
    series_max_k: int = 60  # largest k served from the series route
    oracle_max_k: int = 8  # pairing enumeration limit
    aggregate_max_k: int = 7
    calT_max_k: int = 12  # the four-variable expansion grows like (k+1)^4
    precision: int = distributions.DEFAULT_PRECISION
    format: str = "plain"

    @classmethod
    def from_env(cls, environ=None) -> "Config":
        environ = os.environ if environ is None else environ
        cfg = cls()
        for f in fields(cls):
            raw = environ.get(ENV_PREFIX + f.name.upper())
            if raw is None:
                continue
            if f.name == "format":
                setattr(cfg, f.name, raw)
                continue
            try:
                value = int(raw)
            except ValueError:
                raise UsageError(f"{ENV_PREFIX}{f.name.upper()}={raw!r} is not an integer") from None
            setattr(cfg, f.name, value)
        cfg.validate()
        return cfg

    def validate(self) -> None:
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        for name in (
            "max_k", "series_max_k", "oracle_max_k", "aggregate_max_k", "calT_max_k", "precision"
        ):
            if getattr(self, name) < 0:
                raise UsageError(f"{name} must be nonnegative")


# --------------------------------------------------------------------------
# rendering helpers
# --------------------------------------------------------------------------


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def render_matrix(rows: List[List[int]]) -> str:
    """Plain matrix with entries below the anti-diagonal omitted."""
    k = len(rows) - 1
    kept = [[str(x) for x in row[: k + 1 - v]] for v, row in enumerate(rows)]
    width = max((len(s) for row in kept for s in row), default=1)
    return "\n".join(" ".join(s.rjust(width) for s in row) for row in kept)


def _k_range(args, cfg: Config) -> List[int]:
    if args.k is not None:
        return [args.k]
    return list(range((args.max_k if args.max_k is not None else cfg.max_k) + 1))


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def cmd_table(args, cfg: Config) -> str:
    ks = _k_range(args, cfg)
    top = max(ks)
    if top > cfg.series_max_k:
        raise UsageError(f"k={top} exceeds series_max_k={cfg.series_max_k}")
    table = counts.DominoTable.from_series(top)
    if args.format == "json":
        return _dumps(
            {
                str(k): {
                    str(v): {str(h): table[k, v, h] for h in range(k + 1)}
                    for v in range(k + 1)
                }
                for k in ks
            }
        )
    if args.format == "csv":
        return table.to_csv(ks).rstrip("\n")
    blocks = []
    for k in ks:
        body = render_matrix(table.matrix(k))
        blocks.append(body if len(ks) == 1 else f"k={k}\n{body}")
    return "\n\n".join(blocks)


def _series_payload(args, cfg: Config):
    """(variables, terms, plain rendering) for the requested series."""
    name = args.name
    top = args.max_k if args.max_k is not None else cfg.max_k
    if name == "T":
        if args.k is not None:
            poly = boards.family_poly("T", args.k)
            return ["x"], [((j,), c) for j, c in enumerate(poly)], str(poly)
        s = boards.riordan_family("T", top, top)
        terms = [(e, c) for e, c in s.items() if e[0] <= e[1]]
        return ["x", "y"], terms, None
    if name == "calT":
        if args.k is not None:
            k, v, h = args.k, _need(args.v, "--v"), _need(args.h, "--h")
            if k > cfg.calT_max_k:
                raise UsageError(f"k={k} exceeds calT_max_k={cfg.calT_max_k}")
            poly = aggregate.calT(k, v, h)
            return ["x"], [((j,), c) for j, c in enumerate(poly)], str(poly)
        if top > cfg.calT_max_k:
            raise UsageError(f"max-k={top} exceeds calT_max_k={cfg.calT_max_k}")
        s = aggregate.calT_series(top)
        terms = [(e, c) for e, c in s.items() if sum(e[1:]) <= top]
        return ["x", "y", "w", "z"], terms, None
    if name == "D":
        ks = _k_range(args, cfg)
        if max(ks) > cfg.series_max_k:
            raise UsageError(f"k={max(ks)} exceeds series_max_k={cfg.series_max_k}")
        s = counts.D_series(max(ks))
        terms = [(e, c) for e, c in s.items() if e[0] in ks]
        return ["y", "w", "z"], terms, None
    if name in ("L", "E-horizontal"):
        ks = _k_range(args, cfg)
        K = max(ks)
        L = linear.L_egf(K)
        s = L if name == "L" else linear.E_horizontal(K, L)
        terms = []
        for k in ks:
            for h, c in enumerate(linear.egf_row(s, k)[: k + 1]):
                terms.append(((k, h), c))
        return ["k", "h"], terms, None
    if name == "F":
        ell = _need(args.ell, "--ell")
        if top > cfg.series_max_k:
            raise UsageError(f"max-k={top} exceeds series_max_k={cfg.series_max_k}")
        coeffs = counts.F_ell(ell, max(top, ell))
        return ["y"], [((k,), c) for k, c in enumerate(coeffs)], ", ".join(map(str, coeffs))
    raise UsageError(f"unknown series {name!r}")


def cmd_series(args, cfg: Config) -> str:
    variables, terms, plain = _series_payload(args, cfg)
    if args.format == "json":
        return _dumps(
            {
                "series": args.name,
                "variables": variables,
                "terms": [{"exponents": list(e), "coefficient": str(c)} for e, c in terms],
            }
        )
    if args.format == "csv":
        return _csv(variables + ["coefficient"], [list(e) + [str(c)] for e, c in terms])
    if plain is not None:
        return plain
    return "\n".join(
        " ".join(f"{v}^{d}" for v, d in zip(variables, e)) + f": {c}" for e, c in terms
    )


def _suite_oracle(max_k: int, cfg: Config) -> List[IdentityReport]:
    k_pair = min(max_k, cfg.oracle_max_k)
    table = counts.DominoTable.from_series(max_k)
    three = IdentityReport(f"three-way agreement k<={k_pair}")
    for k in range(k_pair + 1):
        hist = counts.placement_oracle(k, cfg.oracle_max_k)
        for v in range(k + 1):
            for h in range(k + 1 - v):
                a = hist.get((v, h), 0)
                b = counts.count_via_inclusion_exclusion(k, v, h)
                c = table[k, v, h]
                three.record((k, v, h), a == b == c, f"{a}, {b}, {c}")
    k_agg = min(max_k, cfg.aggregate_max_k)
    agg = IdentityReport(f"aggregate closed form vs enumeration k<={k_agg}")
    for k in range(k_agg + 1):
        for v in range(k + 1):
            for h in range(k + 1 - v):
                a = aggregate.calT(k, v, h)
                b = aggregate.aggregate_oracle(k, v, h, cfg.aggregate_max_k)
                agg.record((k, v, h), a == b, f"{a} != {b}")
    return [three, agg]


def _suite_recursion(max_k: int, cfg: Config) -> List[IdentityReport]:
    table = counts.DominoTable.from_series(max_k)
    k_or = min(max_k, cfg.oracle_max_k)
    by_oracle = linear.recursion_check(
        table, {k: linear.L_oracle(k, cfg.oracle_max_k) for k in range(k_or + 1)}
    )
    by_oracle.name += " (L by enumeration)"
    by_egf = linear.recursion_check(table, linear.L_from_egf(max_k))
    by_egf.name += " (L from EGF)"
    return [by_oracle, by_egf]


def _suite_egf(max_k: int, cfg: Config) -> List[IdentityReport]:
    table = counts.DominoTable.from_series(max_k)
    L = linear.L_egf(max_k)
    resid = IdentityReport("ODE residual")
    r = linear.ode_residual(linear.E_horizontal(max_k, L), L)
    resid.record("residual", not r.terms, str(r))
    return [linear.E_vertical_check(table), linear.E_horizontal_check(table), resid]


def _suite_bounds(max_k: int, cfg: Config) -> List[IdentityReport]:
    bounds = IdentityReport(f"binomial bounds k<={max_k}")
    for k in range(max_k + 1):
        b = distributions.bounds_check(k)
        bounds.record(k, b.passed, b.failures)
    k_tab = min(max_k, cfg.series_max_k)
    table = counts.DominoTable.from_series(k_tab)
    poly = IdentityReport(f"P polynomial vs table k<={k_tab}")
    for k in range(k_tab + 1):
        poly.record(k, distributions.P_polynomial(k) == distributions.dist(k, "P", table).masses)
    return [bounds, poly]


def _suite_structure(max_k: int, cfg: Config) -> List[IdentityReport]:
    rep = IdentityReport(f"row-sum, anti-diagonal and zero laws k<={max_k}")
    bad = counts.structural_violations(counts.D_series(max_k))
    rep.record("laws", not bad, bad[:5])
    return [rep]


SUITE_DEFAULT_K = {"oracle": 6, "recursion": 7, "egf": 20, "bounds": 60, "oeis": 16}


def run_suite(suite: str, max_k: int | None, cfg: Config) -> List[IdentityReport]:
    runners = {
        "oracle": _suite_oracle,
        "recursion": _suite_recursion,
        "egf": _suite_egf,
        "bounds": _suite_bounds,
    }
    if suite == "oeis":
        return [oeis.check_all()]
    if suite == "all":
        out = []
        for name in ("oracle", "recursion", "egf", "bounds", "oeis"):
            out.extend(run_suite(name, max_k, cfg))
        out.extend(_suite_structure(max_k if max_k is not None else 20, cfg))
        return out
    k = SUITE_DEFAULT_K[suite] if max_k is None else max_k
    if suite != "bounds" and k > cfg.series_max_k:
        raise UsageError(f"max-k={k} exceeds series_max_k={cfg.series_max_k}")
    return runners[suite](k, cfg)


def cmd_verify(args, cfg: Config):
    reports = run_suite(args.suite, args.max_k, cfg)
    passed = all(r.passed for r in reports)
    first = next((r for r in reports if not r.passed), None)
    payload = {
        "suite": args.suite,
        "passed": passed,
        "checks": [r.as_dict() for r in reports],
        "first_failure": None if first is None else first.as_dict(),
    }
    if args.format == "json":
        text = _dumps(payload)
    elif args.format == "csv":
        text = _csv(
            ["check", "passed", "checked", "failures"],
            [[r.name, r.passed, r.checked, len(r.failures)] for r in reports],
        )
    else:
        lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name}  ({r.checked} checked)" for r in reports]
        if first is not None:
            lines.append(f"first failure: {first.name}: {first.failures[:1]}")
        text = "\n".join(lines)
    return text, 0 if passed else 1


def cmd_dist(args, cfg: Config) -> str:
    k, kind = _need(args.k, "--k"), args.kind
    if k <= cfg.series_max_k:
        d = distributions.dist(k, kind, counts.DominoTable.from_series(k))
        route = "series"
    elif kind == "P":
        d = distributions.ExactDist(k, "P", distributions.P_polynomial(k))
        route = "a-coefficients"
    else:
        raise UsageError(
            f"k={k} too large for the series route (series_max_k={cfg.series_max_k}); "
            "only P has a scalable route"
        )
    payload = d.as_dict()
    payload["route"] = route
    if args.gap:
        if kind != "P":
            raise UsageError("--gap applies to kind P only")
        payload["poisson_gap"] = distributions.poisson_gap(k, args.precision, d.masses).as_dict()
    if args.format == "json":
        return _dumps(payload)
    if args.format == "csv":
        return _csv([kind.lower(), "mass"], [[i, str(m)] for i, m in enumerate(d.masses)])
    lines = [f"{kind}[{k}] = [{', '.join(map(str, d.masses))}]", f"mean = {d.mean()}"]
    if args.gap:
        g = payload["poisson_gap"]
        lines.append(f"poisson gap ~ {g['gap']} at p={g['argmax']} (approximate)")
    return "\n".join(lines)


# --------------------------------------------------------------------------
# entry point
# --------------------------------------------------------------------------


def build_parser(cfg: Config) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="memory-dominoes",
        description="Domino counts for the 2 x k game of memory.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=FORMATS, default=cfg.format)
        return p

    t = common(sub.add_parser("table", help="D[k, v, h] matrices"))
    t.add_argument("--k", type=int)
    t.add_argument("--max-k", type=int)

    s = common(sub.add_parser("series", help="coefficient listing of a generating function"))
    s.add_argument("name", choices=SERIES_NAMES)
    s.add_argument("--k", type=int)
    s.add_argument("--v", type=int)
    s.add_argument("--h", type=int)
    s.add_argument("--ell", type=int)
    s.add_argument("--max-k", type=int)

    v = common(sub.add_parser("verify", help="run identity suites"))
    v.add_argument("suite", choices=SUITES, nargs="?", default="all")
    v.add_argument("--max-k", type=int)

    d = common(sub.add_parser("dist", help="exact distribution of domino counts"))
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--kind", choices=distributions.KINDS, default="P")
    d.add_argument("--gap", action="store_true")
    d.add_argument("--precision", type=int, default=cfg.precision)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = Config.from_env()
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    parser = build_parser(cfg)
    args = parser.parse_args(argv)
    for name in ("k", "max_k", "v", "h", "ell"):
        val = getattr(args, name, None)
        if val is not None and val < 0:
            parser.error(f"--{name.replace('_', '-')} must be nonnegative")
    code = 0
    try:
        if args.command == "table":
            out = cmd_table(args, cfg)
        elif args.command == "series":
            out = cmd_series(args, cfg)
        elif args.command == "verify":
            out, code = cmd_verify(args, cfg)
        else:
            out = cmd_dist(args, cfg)
    except (UsageError, SizeLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
