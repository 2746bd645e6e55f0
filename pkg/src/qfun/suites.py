"""Named verification suites: each expands to a deterministic list of identity instances.

An instance is a plain ``(suite, index, kwargs)`` tuple so it can be shipped
to a worker process; :func:`run_instance` rebuilds every matrix from its
kwargs, which keeps results independent of scheduling.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .identities import (
    EntrySource,
    IdentityReport,
    cauchy_binet_det,
    cauchy_binet_pf,
    cbiw_sum,
    iw2_sum,
    laplace_block_diagonal,
    laplace_expand,
    laplace_zero_block,
    minor_summation_det,
    minor_summation_pf,
    schur_pfaffian,
    sylvester_check,
)
from .pfaffian.core import METHODS
from .pfaffian.matrices import SkewMatrix
from .schur import (
    bijection_check,
    cauchy_truncated,
    gen_fn_pair_check,
    gen_fn_row_check,
    littlewood_coeff_check,
    littlewood_split,
    littlewood_truncated,
    nimmo_polynomiality,
    ns_Q,
    pair_convention_checks,
    pjn_check,
    schur3_check,
    skew_expansion_check,
    skew_support_guard,
    stability_check,
    strict_partitions,
)

__all__ = [
    "MATRIX_SUITES",
    "SCHUR_SUITES",
    "SUITES",
    "SuiteOptions",
    "instances",
    "run_instance",
    "run_suite",
    "worker_count",
]

MATRIX_SUITES = (
    "laplace", "cbiw", "cauchy-binet-1", "cauchy-binet-2",
    "minor-summation", "iw2", "sylvester", "schur-pfaffian",
)
SCHUR_SUITES = (
    "nimmo-polynomiality", "schur3", "gen-fn-1", "gen-fn-2", "stability", "bijection",
    "cauchy", "littlewood", "littlewood-coeffs", "pjn", "ns", "skew-expansion",
)
SUITES = MATRIX_SUITES + SCHUR_SUITES


@dataclass(frozen=True)
class SuiteOptions:
    """Knobs shared by all suites; None means the suite's own default range."""

    vars: int | None = None
    yvars: int | None = None
    degree: int | None = None
    mode: str = "symbolic"
    seed: int = 0


# -- instance lists -------------------------------------------------------------


def _ns(opts: SuiteOptions, default):
    return [opts.vars] if opts.vars is not None else list(default)


def _ks(opts: SuiteOptions, default):
    return [opts.yvars] if opts.yvars is not None else list(default)


def _deg(opts: SuiteOptions, default: int) -> int:
    return default if opts.degree is None else opts.degree


def _matrix_instances(name: str, opts: SuiteOptions) -> list[dict]:
    if name == "laplace":
        out = [dict(kind="general", m=m, n=n) for m, n in ((1, 1), (2, 2), (3, 1), (2, 4))]
        out += [dict(kind="zero-block", m=m, n=n) for m, n in ((2, 2), (3, 3), (1, 3), (2, 4), (4, 2))]
        out += [dict(kind="block-diagonal", m=m, n=n) for m, n in ((2, 2), (4, 2), (1, 3))]
        return out
    if name == "cbiw":
        return [dict(m=m, n=n, l=l) for m, n, l in ((0, 0, 2), (1, 1, 1), (2, 0, 2), (2, 2, 2), (1, 3, 2))]
    if name in ("cauchy-binet-1", "cauchy-binet-2"):
        out = [dict(kind="general", m=2, n=2, l=l) for l in (2, 3, 4)]
        out += [dict(kind="zero", m=m, n=m, l=m) for m in (2, 3)]
        out += [dict(kind="zero", m=3, n=3, l=2)]
        if name == "cauchy-binet-1":
            out += [dict(kind="det", m=m, l=l) for m, l in ((2, 2), (3, 3), (2, 3))]
        return out
    if name == "minor-summation":
        out = [dict(kind="general", m=2, l=l) for l in (2, 3, 4)]
        out += [dict(kind="zero-A", m=2, l=l) for l in (2, 3, 4)]
        out += [dict(kind="zero-B", m=2, l=3)]
        return out
    if name == "iw2":
        return [dict(kind="general", l=l) for l in (2, 3)] + [dict(kind="zero", l=2)]
    if name == "sylvester":
        return [dict(n=n, l=l, variant=v) for n, l in ((2, 2), (2, 4)) for v in ("pivot-first", "pivot-last")]
    if name == "schur-pfaffian":
        return [dict(n=n) for n in _ns(opts, (2, 4, 6))]
    raise KeyError(name)


def _schur_instances(name: str, opts: SuiteOptions) -> list[dict]:
    if name == "nimmo-polynomiality":
        return [dict(lam=tuple(lam), n=n, method=m)
                for n in _ns(opts, (2, 3, 4)) for lam in strict_partitions(_deg(opts, 8)) for m in METHODS]
    if name == "schur3":
        return [dict(lam=tuple(lam), n=n) for n in _ns(opts, (2, 3, 4)) for lam in strict_partitions(_deg(opts, 6))]
    if name == "gen-fn-1":
        return [dict(r_max=_deg(opts, 8), n=n) for n in _ns(opts, (2, 3))]
    if name == "gen-fn-2":
        return [dict(kind=k, total=_deg(opts, 8), n=n) for n in _ns(opts, (2, 3)) for k in ("pairs", "conventions")]
    if name == "stability":
        return [dict(lam=tuple(lam), n=n) for n in _ns(opts, (1, 2, 3)) for lam in strict_partitions(_deg(opts, 6))]
    if name == "bijection":
        return [dict(max_weight=_deg(opts, 8), n=n) for n in _ns(opts, (1, 2))]
    if name == "cauchy":
        if opts.vars is not None or opts.degree is not None:
            return [dict(n=opts.vars or 2, d=_deg(opts, 4))]
        return [dict(n=n, d=d) for n, d in ((1, 4), (2, 6), (3, 4))]
    if name == "littlewood":
        if opts.vars is not None or opts.degree is not None:
            pairs = [(opts.vars or 2, _deg(opts, 4))]
            return [dict(kind=k, n=n, d=d) for n, d in pairs for k in ("full", "split")]
        return [dict(kind="full", n=n, d=d) for n, d in ((2, 6), (3, 4))] + [dict(kind="split", n=2, d=4)]
    if name == "littlewood-coeffs":
        return [dict(l=l) for l in range(_deg(opts, 12) + 1)]
    if name == "pjn":
        return [dict(lam=tuple(lam), mu=tuple(mu), n=n)
                for n in _ns(opts, (1, 2)) for lam in strict_partitions(_deg(opts, 6))
                for mu in strict_partitions(lam.weight) if lam.contains(mu)]
    if name == "ns":
        return [dict(lam=tuple(lam), n=n, k=k)
                for n in _ns(opts, (1, 2)) for k in _ks(opts, (1, 2)) for lam in strict_partitions(_deg(opts, 6))]
    if name == "skew-expansion":
        out = [dict(kind="expansion", lam=tuple(lam), n=n, k=k)
               for n in _ns(opts, (1, 2)) for k in _ks(opts, (1, 2)) for lam in strict_partitions(_deg(opts, 6))]
        out += [dict(kind="support", lam=tuple(lam), n=n)
                for n in _ns(opts, (1, 2)) for lam in strict_partitions(_deg(opts, 6))]
        return out
    raise KeyError(name)


def instances(name: str, opts: SuiteOptions = SuiteOptions()) -> list[tuple]:
    """The ordered instance list of suite ``name``; KeyError for an unknown name."""
    if name in MATRIX_SUITES:
        kws = _matrix_instances(name, opts)
    elif name in SCHUR_SUITES:
        kws = _schur_instances(name, opts)
    else:
        raise KeyError(name)
    return [(name, i, kw) for i, kw in enumerate(kws)]


# -- evaluation -----------------------------------------------------------------


def _source(opts: SuiteOptions, index: int) -> EntrySource:
    return EntrySource(opts.mode, opts.seed * 1000003 + index)


def _run_matrix(name: str, index: int, kw: dict, opts: SuiteOptions) -> list[IdentityReport]:
    E = _source(opts, index)
    kind = kw.get("kind", "general")
    if name == "laplace":
        m, n = kw["m"], kw["n"]
        if kind == "general":
            return [laplace_expand(E.skew(m), E.skew(n), E.rect(m, n))]
        if kind == "zero-block":
            return [laplace_zero_block(E.skew(m), E.rect(m, n))]
        return [laplace_block_diagonal(E.skew(m), E.skew(n))]
    if name == "cbiw":
        m, n, l = kw["m"], kw["n"], kw["l"]
        return [cbiw_sum(E.skew(m + l), E.skew(n + l), m, n, l)]
    if name in ("cauchy-binet-1", "cauchy-binet-2"):
        variant = "CB1" if name.endswith("1") else "CB2"
        if kind == "det":
            return [cauchy_binet_det(E.rect(kw["m"], kw["l"]), E.rect(kw["m"], kw["l"]))]
        m, n, l = kw["m"], kw["n"], kw["l"]
        if kind == "zero":
            A, B = SkewMatrix(m), SkewMatrix(n)
        else:
            A, B = E.skew(m), E.skew(n)
        return [cauchy_binet_pf(A, B, E.rect(m, l), E.rect(n, l), variant)]
    if name == "minor-summation":
        m, l = kw["m"], kw["l"]
        if kind == "zero-A":
            B, S = E.skew(l), E.rect(m, l)
            return [minor_summation_pf(SkewMatrix(m), B, S), minor_summation_det(B, S)]
        if kind == "zero-B":
            return [minor_summation_pf(E.skew(m), SkewMatrix(l), E.rect(m, l))]
        return [minor_summation_pf(E.skew(m), E.skew(l), E.rect(m, l))]
    if name == "iw2":
        l = kw["l"]
        if kind == "zero":
            return [iw2_sum(SkewMatrix(l), SkewMatrix(l), E.rect(l, l))]
        return [iw2_sum(E.skew(l), E.skew(l), E.rect(l, l))]
    if name == "sylvester":
        return [sylvester_check(E.skew(kw["n"] + kw["l"]), kw["n"], kw["variant"])]
    if name == "schur-pfaffian":
        n = kw["n"]
        if opts.mode == "specialized":
            # distinct positive rationals keep every x_i + x_j away from zero
            vals: list = []
            while len(vals) < n:
                v = abs(E.entry()) + 1
                if v not in vals:
                    vals.append(v)
            return [schur_pfaffian(vals)]
        return [schur_pfaffian(list(range(n)))]
    raise KeyError(name)


def _run_schur(name: str, kw: dict) -> list[IdentityReport]:
    kind = kw.get("kind")
    if name == "nimmo-polynomiality":
        return [nimmo_polynomiality(kw["lam"], kw["n"], kw["method"])]
    if name == "schur3":
        return [schur3_check(kw["lam"], kw["n"])]
    if name == "gen-fn-1":
        return gen_fn_row_check(kw["r_max"], kw["n"])
    if name == "gen-fn-2":
        if kind == "pairs":
            return gen_fn_pair_check(kw["total"], kw["n"])
        return pair_convention_checks(min(kw["total"], 5), kw["n"])
    if name == "stability":
        return [stability_check(kw["lam"], kw["n"])]
    if name == "bijection":
        return [bijection_check(kw["max_weight"], kw["n"])]
    if name == "cauchy":
        return [cauchy_truncated(kw["n"], kw["d"])]
    if name == "littlewood":
        if kind == "split":
            return littlewood_split(kw["n"], kw["d"])
        return [littlewood_truncated(kw["n"], kw["d"])]
    if name == "littlewood-coeffs":
        return [littlewood_coeff_check(kw["l"])]
    if name == "pjn":
        return [pjn_check(kw["lam"], kw["mu"], kw["n"])]
    if name == "ns":
        return [ns_Q(kw["lam"], kw["n"], kw["k"])]
    if name == "skew-expansion":
        if kind == "support":
            return [skew_support_guard(kw["lam"], kw["n"])]
        return [skew_expansion_check(kw["lam"], kw["n"], kw["k"])]
    raise KeyError(name)


def run_instance(instance: tuple, opts: SuiteOptions = SuiteOptions()) -> list[IdentityReport]:
    """Evaluate one instance; matrix suites honour ``opts.mode`` and ``opts.seed``."""
    name, index, kw = instance
    if name in MATRIX_SUITES:
        return _run_matrix(name, index, kw, opts)
    return _run_schur(name, kw)


def worker_count() -> int:
    """Worker processes to use: ``QFUN_THREADS`` when set, capped by the CPU count."""
    cpus = os.cpu_count() or 1
    env = os.environ.get("QFUN_THREADS")
    if env:
        try:
            return max(1, min(cpus, int(env)))
        except ValueError:
            pass
    return cpus


def _summarise(instance: tuple, opts: SuiteOptions, render: Callable) -> list:
    return [render(instance, r) for r in run_instance(instance, opts)]


def run_suite(name: str, opts: SuiteOptions = SuiteOptions(), render: Callable | None = None,
              workers: int | None = None) -> list:
    """Run every instance of a suite in order.

    With ``render`` each report is passed through ``render(instance, report)``
    inside the worker, so only the rendered values cross process boundaries;
    without it the reports themselves are returned and the run stays in this
    process.
    """
    todo = instances(name, opts)
    if render is None:
        return [r for inst in todo for r in run_instance(inst, opts)]
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(todo) <= 1:
        rendered = [_summarise(inst, opts, render) for inst in todo]
    else:
        with ProcessPoolExecutor(max_workers=min(workers, len(todo))) as pool:
            rendered = list(pool.map(_summarise, todo, [opts] * len(todo), [render] * len(todo)))
    return [x for chunk in rendered for x in chunk]
