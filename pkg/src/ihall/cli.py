"""Command line harness: ``ihall verify``, ``ihall tables`` and ``ihall oracle compare``.

Exit codes: 0 when every case passes, 1 on any failing case, 2 on a
configuration error (raised before any suite runs).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from .caps import CapConfigError, SizeCapExceeded, cap
from .curve import census, is_prime, is_prime_power, partitions
from .report import Report

SUITE_NAMES = (
    "prop-oo",
    "toto",
    "zeta",
    "aut-lemma",
    "zeta-series",
    "claim",
    "jordan-comm",
    "jordan-assoc",
    "exp-identity",
    "theta-comm",
    "h-commutator",
    "diagram",
    "oracle-compare",
)


class ConfigError(ValueError):
    pass


@dataclass
class SuiteConfig:
    q_list: list[int] = field(default_factory=lambda: [2, 3])
    m_max: int = 6
    r_range: tuple[int, int] = (-3, 3)
    order: int = 4
    suites: list[str] = field(default_factory=lambda: list(SUITE_NAMES))

    def validate(self) -> None:
        bad = [q for q in self.q_list if not is_prime_power(q)]
        if bad:
            raise ConfigError(f"q must be a prime power, got {bad}")
        unknown = [s for s in self.suites if s not in SUITE_NAMES]
        if unknown:
            raise ConfigError(f"unknown suites {unknown}; choose from {', '.join(SUITE_NAMES)}")
        lo, hi = self.r_range
        if lo > hi:
            raise ConfigError(f"empty r-range {lo}..{hi}")
        if max(abs(lo), abs(hi)) > cap("r"):
            raise ConfigError(f"r-range {lo}..{hi} exceeds cap r={cap('r')}")
        if not 1 <= self.m_max <= cap("symbolic"):
            raise ConfigError(f"m-max must be in 1..{cap('symbolic')}")
        if not 1 <= self.order <= cap("torsion"):
            raise ConfigError(f"order must be in 1..{cap('torsion')}")

    @property
    def rs(self) -> range:
        return range(self.r_range[0], self.r_range[1] + 1)


def _per_q(name: str, cfg: SuiteConfig, fn, qs=None) -> Report:
    rep = Report(name, {"q": list(qs if qs is not None else cfg.q_list)})
    for q in rep.params["q"]:
        rep.merge(fn(q))
    return rep


def run_suite(name: str, cfg: SuiteConfig) -> Report:
    """Run one named suite under cfg; imports are local so `--help` stays fast."""
    from . import dictionary, identities, jordan, shapes

    torsion = min(cfg.m_max, cap("torsion"))
    if name == "prop-oo":
        return identities.verify_line_identities(cfg.rs, cfg.m_max)
    if name == "toto":
        return identities.verify_theta_line_relation(cfg.rs, cfg.m_max)
    if name == "zeta":
        return _per_q(name, cfg, lambda q: identities.zeta_identity_report(q, 10))
    if name == "aut-lemma":
        return _per_q(name, cfg, lambda q: identities.verify_cyclic_epi_sum(q, 5))
    if name == "zeta-series":
        return _per_q(name, cfg, lambda q: identities.verify_zeta_series(q, 10))
    if name == "claim":
        primes = [q for q in cfg.q_list if is_prime(q)][:1] or [2]
        return _per_q(name, cfg, lambda p: identities.verify_extension_counts(p, min(cfg.m_max, 4)), primes)
    if name == "jordan-comm":
        return _per_q(name, cfg, lambda q: jordan.check_commutativity(q, torsion))
    if name == "jordan-assoc":
        return _per_q(name, cfg, lambda q: jordan.check_associativity(q, min(torsion, 5)))
    if name == "exp-identity":
        rep = _per_q(name, cfg, lambda q: identities.verify_exp_identity(q, cfg.order))
        rep.merge(_per_q(name, cfg, lambda q: jordan.verify_local_exp(q, cfg.order)))
        return rep.merge(shapes.verify_exp_symbolic(cfg.order))
    if name == "theta-comm":
        return _per_q(name, cfg, lambda q: identities.verify_theta_commutativity(q, torsion))
    if name == "h-commutator":
        return _per_q(name, cfg, lambda q: identities.verify_h_commutator(q, min(cfg.m_max, 3), cfg.rs))
    if name == "diagram":
        return dictionary.verify_diagram().merge(dictionary.verify_reflections())
    if name == "oracle-compare":
        from .compare import run_comparison

        return run_comparison("all")
    raise ConfigError(f"unknown suite {name!r}")


def run_suites(cfg: SuiteConfig) -> list[Report]:
    cfg.validate()
    return [run_suite(name, cfg) for name in cfg.suites]


# ---------------------------------------------------------------------------
# argument parsing


def parse_q_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ConfigError(f"bad q list {text!r}") from None


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise ConfigError(f"bad range {text!r}; expected a..b") from None


def parse_report_target(text: str) -> tuple[str, str]:
    kind, sep, path = text.partition(":")
    if not sep or kind not in ("json", "tap") or not path:
        raise ConfigError(f"bad report target {text!r}; expected json:PATH or tap:PATH")
    return kind, path


def _render_json(reports: list[Report], timing: bool) -> str:
    return json.dumps([r.to_dict(timing) for r in reports], indent=2, sort_keys=True) + "\n"


def _render_tap(reports: list[Report]) -> str:
    cases = [(r.suite, c) for r in reports for c in r.cases]
    lines = [f"1..{len(cases)}"]
    for i, (suite, c) in enumerate(cases, 1):
        lines.append(f"{'ok' if c.status == 'pass' else 'not ok'} {i} {suite} {c.id}")
        lines.extend(f"# {w}" for w in c.witness)
    return "\n".join(lines) + "\n"


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _summarize(reports: list[Report], out) -> None:
    for r in reports:
        n_fail = len(r.failures)
        print(f"{'PASS' if not n_fail else 'FAIL'} {r.suite}: {len(r.cases) - n_fail}/{len(r.cases)}", file=out)
        for c in r.failures[:5]:
            print(f"  {c.id}: {'; '.join(c.witness[:4])}", file=out)


def cmd_verify(args) -> int:
    suites = list(SUITE_NAMES) if args.suites == "all" else [s.strip() for s in args.suites.split(",") if s.strip()]
    cfg = SuiteConfig(parse_q_list(args.q), args.m_max, parse_range(args.r_range), args.order, suites)
    target = parse_report_target(args.report) if args.report else None
    reports = run_suites(cfg)
    _summarize(reports, sys.stderr if target and target[1] == "-" else sys.stdout)
    if target:
        kind, path = target
        _write(path, _render_json(reports, not args.no_timing) if kind == "json" else _render_tap(reports))
    return 0 if all(r.passed for r in reports) else 1


# ---------------------------------------------------------------------------
# tables


def hall_table(q: int, size: int) -> list[dict]:
    from .sheaves import hall_number

    rows = []
    for n in range(1, size + 1):
        for lam in partitions(n):
            for k in range(n + 1):
                for mu in partitions(n - k):
                    for nu in partitions(k):
                        g = hall_number(lam, mu, nu, q)
                        if g:
                            rows.append({"lambda": list(lam), "mu": list(mu), "nu": list(nu), "value": str(g)})
    return rows


def jordan_table(q: int, size: int) -> list[dict]:
    from .jordan import structure_constants

    rows = []
    for n in range(size + 1):
        for k in range(n + 1):
            for lam in partitions(k):
                for mu in partitions(n - k):
                    for (nu, a), c in structure_constants(lam, mu, q):
                        rows.append({"lambda": list(lam), "mu": list(mu), "nu": list(nu), "K": a, "value": str(c)})
    return rows


def census_table(q: int, d_max: int) -> list[dict]:
    c = census(q, d_max) if d_max else None
    return [{"degree": d, "points": c.n(d)} for d in range(1, d_max + 1)]


TABLES = {"hall": hall_table, "jordan": jordan_table, "census": census_table}


def _render_table(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2, sort_keys=True) + "\n"
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: " ".join(map(str, v)) if isinstance(v, list) else v for k, v in row.items()})
    return buf.getvalue()


def cmd_tables(args) -> int:
    if not is_prime_power(args.q):
        raise ConfigError(f"q must be a prime power, got {args.q}")
    rows = TABLES[args.kind](args.q, args.size)
    _write(args.out, _render_table(rows, args.format))
    return 0


def cmd_oracle(args) -> int:
    from .compare import SUITES, run_comparison

    if args.suite != "all" and args.suite not in SUITES:
        raise ConfigError(f"unknown oracle suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    rep = run_comparison(args.suite)
    _summarize([rep], sys.stdout)
    if args.report:
        kind, path = parse_report_target(args.report)
        _write(path, _render_json([rep], not args.no_timing) if kind == "json" else _render_tap([rep]))
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ihall", description="Exact verification harness for the iHall algebra of P^1.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suites", default="all", help=f"comma list or 'all' ({', '.join(SUITE_NAMES)})")
    v.add_argument("--q", default="2,3", help="comma list of prime powers")
    v.add_argument("--m-max", type=int, default=6)
    v.add_argument("--r-range", default="-3..3", help="inclusive range a..b")
    v.add_argument("--order", type=int, default=4, help="series order for generating-function suites")
    v.add_argument("--report", help="json:PATH or tap:PATH ('-' for stdout)")
    v.add_argument("--no-timing", action="store_true", help="zero the per-case times for byte-stable reports")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tables", help="emit Hall, Jordan or point-count tables")
    t.add_argument("kind", choices=sorted(TABLES))
    t.add_argument("--q", type=int, default=2)
    t.add_argument("--size", type=int, default=4, help="max module length, or max degree for census")
    t.add_argument("--format", choices=("json", "csv"), default="json")
    t.add_argument("--out", default="-")
    t.set_defaults(func=cmd_tables)

    o = sub.add_parser("oracle", help="brute-force comparisons")
    osub = o.add_subparsers(dest="oracle_command", required=True)
    oc = osub.add_parser("compare", help="compare closed forms with enumeration")
    oc.add_argument("--suite", default="all")
    oc.add_argument("--report", help="json:PATH or tap:PATH")
    oc.add_argument("--no-timing", action="store_true")
    oc.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, CapConfigError, SizeCapExceeded) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
