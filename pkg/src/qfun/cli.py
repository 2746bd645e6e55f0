"""Command-line front end: ``qfun compute``, ``qfun verify`` and ``qfun table``.

Data goes to stdout (or ``--out``), diagnostics to stderr.  Exit status is 0
when everything passed, 1 when an identity failed and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra.polynomial import Polynomial
from .errors import QfunError
from .identities import IdentityReport
from .schur import StrictPartition, nimmo_P, nimmo_Q, skew_Q_pjn, strict_partitions
from .suites import SUITES, SuiteOptions, run_suite

__all__ = ["RunConfig", "UsageError", "main", "poly_terms"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    """Bad command-line input; reported on stderr with exit status 2."""


@dataclass(frozen=True)
class RunConfig:
    command: str
    kind: str = "Q"
    lam: StrictPartition | None = None
    mu: StrictPartition | None = None
    vars: int | None = None
    yvars: int | None = None
    degree: int | None = None
    suite: str | None = None
    mode: str = "symbolic"
    seed: int = 0
    format: str = "json"
    out: str | None = None

    def __post_init__(self) -> None:
        for name in ("vars", "yvars", "degree"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise UsageError(f"--{name} must be nonnegative")

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> RunConfig:
        def part(text):
            if text is None:
                return None
            try:
                return StrictPartition.parse(text)
            except ValueError as exc:
                raise UsageError(f"invalid partition {text!r}: {exc}") from None

        return cls(
            command=ns.command,
            kind=getattr(ns, "kind", "Q"),
            lam=part(getattr(ns, "lam", None)),
            mu=part(getattr(ns, "mu", None)),
            vars=ns.vars,
            yvars=getattr(ns, "yvars", None),
            degree=getattr(ns, "degree", None),
            suite=getattr(ns, "suite", None),
            mode=getattr(ns, "mode", "symbolic"),
            seed=getattr(ns, "seed", 0),
            format=ns.format,
            out=ns.out,
        )


# -- serialization ----------------------------------------------------------------


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def poly_terms(p: Polynomial, nvars: int) -> list[dict]:
    """Terms of ``p`` in descending graded reverse-lex order, coefficients as exact ``p/q`` strings.

    >>> poly_terms(Polynomial.var(0) * 2, 2)
    [{'coeff_re': '2/1', 'coeff_im': '0/1', 'exponents': [1, 0]}]
    """
    n = max(nvars, p.nvars)
    return [
        {"coeff_re": _frac(c.re), "coeff_im": _frac(c.im), "exponents": list(m.as_tuple(n))}
        for m, c in p.terms()
    ]


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    return str(v)


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def render_report(instance: tuple, rep: IdentityReport) -> str:
    """One JSON line for a report; lhs and rhs are included only on failure."""
    suite, index, _ = instance
    row = {"suite": suite, "index": index, "name": rep.name, "equal": rep.equal,
           "parameters": _jsonable(rep.parameters)}
    if not rep.equal:
        row["lhs"] = str(rep.lhs)
        row["rhs"] = str(rep.rhs)
    return _dumps(row)


# -- commands -----------------------------------------------------------------------


def _expression(kind: str, lam: StrictPartition, mu: StrictPartition | None, n: int):
    if kind == "Q":
        return nimmo_Q(lam, n)
    if kind == "P":
        return nimmo_P(lam, n)
    if mu is None:
        raise UsageError("--kind skew requires --mu")
    if not lam.contains(mu):
        raise UsageError(f"mu={mu!r} is not contained in lambda={lam!r}")
    return skew_Q_pjn(lam, mu, n)


def _label_parts(lam: StrictPartition) -> str:
    return ",".join(map(str, lam))


def cmd_compute(cfg: RunConfig) -> tuple[str, int]:
    if cfg.lam is None:
        raise UsageError("compute requires --lambda")
    n = 1 if cfg.vars is None else cfg.vars
    q = _expression(cfg.kind, cfg.lam, cfg.mu, n)
    terms = poly_terms(q.value, n)
    if cfg.format == "pretty":
        return f"{q.label} = {q.to_str()}\n", EXIT_OK
    if cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["coeff_re", "coeff_im"] + [f"e{i + 1}" for i in range(n)])
        for t in terms:
            w.writerow([t["coeff_re"], t["coeff_im"], *t["exponents"]])
        return buf.getvalue(), EXIT_OK
    row = {"kind": cfg.kind, "lambda": list(cfg.lam), "vars": n, "label": q.label, "terms": terms}
    if cfg.kind == "skew":
        row["mu"] = list(cfg.mu)
    return _dumps(row) + "\n", EXIT_OK


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    if cfg.suite not in SUITES:
        raise UsageError(f"unknown suite {cfg.suite!r}; choose from {', '.join(SUITES)}")
    opts = SuiteOptions(vars=cfg.vars, yvars=cfg.yvars, degree=cfg.degree, mode=cfg.mode, seed=cfg.seed)
    try:
        lines = run_suite(cfg.suite, opts, render=render_report)
    except (QfunError, ValueError) as exc:
        raise UsageError(f"suite {cfg.suite} rejected its parameters: {exc}") from None
    failed = sum(1 for s in lines if '"equal":false' in s)
    print(f"{cfg.suite}: {len(lines) - failed}/{len(lines)} reports equal", file=sys.stderr)
    return "".join(s + "\n" for s in lines), EXIT_FAIL if failed else EXIT_OK


def cmd_table(cfg: RunConfig) -> tuple[str, int]:
    d = 0 if cfg.degree is None else cfg.degree
    n = 1 if cfg.vars is None else cfg.vars
    kind = cfg.kind if cfg.kind in ("P", "Q") else "Q"
    rows = []
    for lam in strict_partitions(d):
        q = nimmo_Q(lam, n) if kind == "Q" else nimmo_P(lam, n)
        rows.append((lam, q))
    if cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["lambda", "weight", "expansion"])
        for lam, q in rows:
            w.writerow([_label_parts(lam), lam.weight, q.to_str()])
        return buf.getvalue(), EXIT_OK
    if cfg.format == "pretty":
        return "".join(f"{q.label} = {q.to_str()}\n" for _, q in rows), EXIT_OK
    out = [_dumps({"kind": kind, "lambda": list(lam), "vars": n, "terms": poly_terms(q.value, n)})
           for lam, q in rows]
    return "".join(s + "\n" for s in out), EXIT_OK


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "table": cmd_table}


# -- argument parsing -----------------------------------------------------------------


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qfun", description="Exact Schur Q-functions and Pfaffian identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--vars", type=_nonneg, help="number of x variables")
    common.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    common.add_argument("--out", help="write data here instead of stdout")

    p = sub.add_parser("compute", parents=[common], help="expand one P-, Q- or skew Q-function")
    p.add_argument("--kind", choices=("P", "Q", "skew"), default="Q")
    p.add_argument("--lambda", dest="lam", required=True, help="strict partition, e.g. 3,1")
    p.add_argument("--mu", help="inner partition for --kind skew")

    v = sub.add_parser("verify", parents=[common], help="run a named identity suite")
    v.add_argument("--suite", required=True, help=", ".join(SUITES))
    v.add_argument("--yvars", type=_nonneg, help="number of y variables (skew suites)")
    v.add_argument("--degree", type=_nonneg, help="weight or truncation bound")
    v.add_argument("--mode", choices=("symbolic", "specialized"), default="symbolic")
    v.add_argument("--seed", type=int, default=0)

    t = sub.add_parser("table", parents=[common], help="tabulate Q_λ for all strict |λ| <= degree")
    t.add_argument("--kind", choices=("P", "Q"), default="Q")
    t.add_argument("--degree", type=_nonneg, default=0)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = RunConfig.from_args(ns)
        text, status = COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"qfun: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()
    return status


if __name__ == "__main__":
    sys.exit(main())
