"""The thirteen acceptance criteria, each checked by exact equality.

Every test prints one ``criterion N: PASS|FAIL`` line; the lines are also
collected and repeated in the terminal summary (see conftest.py).
Run standalone with ``python3 tests/test_acceptance.py``.
"""

import time

from qfun.suites import SuiteOptions, run_suite
from qfun.schur import strict_partitions

TIME_LIMIT = 60.0
RESULTS: dict[int, str] = {}


def _run(*suites):
    reports = []
    for name in suites:
        reports.extend(run_suite(name, SuiteOptions()))
    return reports


def _params(reports, name, *keys):
    return {tuple(r.parameters.get(k) for k in keys) for r in reports if r.name == name}


def _criterion(number, title, suites, coverage=lambda reps: True):
    start = time.perf_counter()
    reports = _run(*suites)
    elapsed = time.perf_counter() - start
    failed = [r for r in reports if not r.equal]
    covered = coverage(reports)
    ok = bool(reports) and not failed and covered and elapsed < TIME_LIMIT
    line = (f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}  "
            f"[{len(reports) - len(failed)}/{len(reports)} equal, {elapsed:.1f}s"
            f"{'' if covered else ', coverage incomplete'}]")
    RESULTS[number] = line
    print(line)
    assert not failed, [(r.name, r.parameters) for r in failed[:5]]
    assert covered, f"criterion {number}: required instances missing"
    assert elapsed < TIME_LIMIT, f"criterion {number} took {elapsed:.1f}s"


def test_criterion_01_schur_pfaffian():
    _criterion(1, "Schur Pfaffian for n = 2, 4, 6", ["schur-pfaffian"],
               lambda reps: _params(reps, "schur-pfaffian", "n") == {(2,), (4,), (6,)})


def test_criterion_02_laplace():
    def coverage(reps):
        general = {(r.parameters["m"], r.parameters["n"]) for r in reps if "branch" not in r.parameters}
        branches = {r.parameters["branch"] for r in reps if "branch" in r.parameters}
        return {(1, 1), (2, 2), (3, 1), (2, 4)} <= general and {"m=n", "m<n", "block-diagonal"} <= branches

    _criterion(2, "Laplace-type expansion and its corollaries", ["laplace"], coverage)


def test_criterion_03_cauchy_binet():
    def coverage(reps):
        for name in ("cauchy-binet-1", "cauchy-binet-2"):
            if not {(2, 2, l) for l in (2, 3, 4)} <= _params(reps, name, "m", "n", "l"):
                return False
        return {(2, 2), (3, 3)} <= _params(reps, "cauchy-binet-det", "m", "l")

    _criterion(3, "Pfaffian Cauchy-Binet CB1/CB2 and the determinant reduction",
               ["cauchy-binet-1", "cauchy-binet-2"], coverage)


def test_criterion_04_minor_summation():
    def coverage(reps):
        iw2_zero = [r for r in reps if r.name == "iw2" and r.parameters["l"] == 2 and r.lhs == -1]
        return ({(2, l) for l in (2, 3, 4)} <= _params(reps, "minor-summation", "m", "l")
                and _params(reps, "minor-summation-det", "m", "l")
                and {(2,), (3,)} <= _params(reps, "iw2", "l")
                and bool(iw2_zero))

    _criterion(4, "Pfaffian minor-summation, its A = O reduction and the second summation",
               ["minor-summation", "iw2"], coverage)


def test_criterion_05_sylvester():
    _criterion(5, "Sylvester identity in both pivot positions", ["sylvester"],
               lambda reps: _params(reps, "sylvester", "n", "l", "variant") == {
                   (2, l, v) for l in (2, 4) for v in ("pivot-first", "pivot-last")})


def test_criterion_06_nimmo_polynomiality():
    expected = len(strict_partitions(8)) * 3 * 3
    _criterion(6, "Nimmo quotient is a polynomial; three Pfaffian algorithms agree",
               ["nimmo-polynomiality"], lambda reps: len(reps) == expected)


def test_criterion_07_schur_definition():
    expected = len(strict_partitions(6)) * 3
    _criterion(7, "Schur's Pfaffian definition matches Nimmo's formula", ["schur3"],
               lambda reps: len(reps) == expected)


def test_criterion_08_generating_functions():
    def coverage(reps):
        conv = {r.parameters.get("convention") for r in reps}
        return {"Q(0)=1", "Q(0,0)=0", "Q(r,0)=Q(r)", "Q(0,r)=-Q(r)", "antisymmetry"} <= conv

    _criterion(8, "one- and two-row generating functions with their conventions",
               ["gen-fn-1", "gen-fn-2"], coverage)


def test_criterion_09_stability():
    _criterion(9, "stability under appending a zero variable", ["stability"],
               lambda reps: len(reps) == len(strict_partitions(6)) * 3)


def test_criterion_10_cauchy():
    _criterion(10, "Cauchy identity, truncated", ["cauchy"],
               lambda reps: _params(reps, "cauchy", "n", "d") == {(1, 4), (2, 6), (3, 4)})


def test_criterion_11_littlewood():
    def coverage(reps):
        full = {(r.parameters["n"], r.parameters["d"]) for r in reps
                if r.name == "littlewood" and "part" not in r.parameters}
        parts = {r.parameters.get("part") for r in reps if r.name == "littlewood"}
        return (full == {(2, 6), (3, 4)} and {"real", "imaginary"} <= parts
                and _params(reps, "littlewood-coeffs", "l") == {(l,) for l in range(13)})

    _criterion(11, "Littlewood identity, coefficient table and real/imaginary split",
               ["littlewood", "littlewood-coeffs"], coverage)


def test_criterion_12_skew():
    def coverage(reps):
        names = {r.name for r in reps}
        nk = _params(reps, "ns", "n", "k")
        return {"pjn", "ns", "skew-expansion", "skew-support"} <= names and nk == {
            (n, k) for n in (1, 2) for k in (1, 2)}

    _criterion(12, "skew Pfaffian formula, interpolation theorem, expansion and support guard",
               ["pjn", "ns", "skew-expansion"], coverage)


def test_criterion_13_bijection():
    _criterion(13, "index sets give a parity-preserving bijection", ["bijection"],
               lambda reps: _params(reps, "bijection", "max_weight", "n") == {(8, 1), (8, 2)})


if __name__ == "__main__":
    import sys

    status = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                status = 1
    sys.exit(status)
