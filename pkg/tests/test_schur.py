from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qfun.algebra import GaussianRational, I, Polynomial, RationalFunction, series_expand
from qfun.identities import sylvester_check, sylvester_quotients
from qfun.pfaffian import METHODS, IndexSet, RectMatrix, SkewMatrix
from qfun.schur import (
    QExpr,
    StrictPartition,
    VariableMap,
    bijection_check,
    build_nimmo_matrices,
    cauchy_truncated,
    chi,
    gen_fn_pair_check,
    gen_fn_row_check,
    index_set,
    littlewood_coeff_check,
    littlewood_coeffs,
    littlewood_split,
    littlewood_truncated,
    nimmo_P,
    nimmo_polynomiality,
    nimmo_Q,
    pair_convention_checks,
    q_pair,
    q_row,
    q_row_series,
    schur_A,
    schur_D,
    schur_def_Q,
    schur_S,
    schur3_check,
    stability_check,
    strict_partitions,
)

x1, x2, x3 = (Polynomial.var(i) for i in range(3))


# -- partitions -----------------------------------------------------------------


def test_strict_partition_validation():
    assert StrictPartition((3, 1)).weight == 4
    assert StrictPartition.parse("3,1") == (3, 1)
    assert StrictPartition.parse("") == ()
    for bad in [(1, 2), (2, 2), (2, 0), (-1,)]:
        with pytest.raises(ValueError):
            StrictPartition(bad)


def test_strict_partitions_examples():
    assert strict_partitions(3) == [(), (1,), (2,), (3,), (2, 1)]
    assert strict_partitions(0) == [()]
    assert len(strict_partitions(6)) == 14


def _brute_strict(w):
    # all subsets of {1..w} with sum <= w
    out = []
    for mask in range(1 << w):
        parts = tuple(sorted((i + 1 for i in range(w) if mask >> i & 1), reverse=True))
        if sum(parts) <= w:
            out.append(parts)
    return out


@pytest.mark.parametrize("w", range(0, 10))
def test_strict_partitions_against_subset_enumeration(w):
    got = strict_partitions(w)
    assert sorted(got) == sorted(_brute_strict(w))
    weights = [p.weight for p in got]
    assert weights == sorted(weights)


@given(st.integers(0, 10), st.integers(0, 5))
def test_index_set_parity(w, n):
    for lam in strict_partitions(w):
        s = index_set(lam, n)
        assert (len(s) - n) % 2 == 0
        assert set(lam) <= set(s)


def test_index_set_examples():
    assert tuple(index_set(StrictPartition((3, 1)), 2)) == (1, 3)
    assert tuple(index_set(StrictPartition((2,)), 2)) == (0, 2)
    assert tuple(index_set(StrictPartition(()), 2)) == ()
    assert isinstance(index_set(StrictPartition(()), 2), IndexSet)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_index_set_injective(n):
    parts = strict_partitions(8)
    assert len({index_set(lam, n) for lam in parts}) == len(parts)
    assert bijection_check(8, n).equal


# -- building blocks ------------------------------------------------------------


def test_chi():
    assert (chi(0), chi(1), chi(5)) == (1, 2, 2)


def test_variable_map_ranges_are_disjoint():
    vm = VariableMap(3, 2, z=True, w=True)
    slots = list(vm.x_range) + list(vm.y_range) + [vm.z_index, vm.w_index]
    assert len(set(slots)) == len(slots) == vm.size
    assert vm.x(0) == Polynomial.var(0)


def test_build_nimmo_matrices_padding():
    A, V, W, alpha = build_nimmo_matrices((2,), 2)
    assert alpha == (2, 0)
    assert [W[i, 1] for i in range(2)] == [1, 1]
    assert [W[i, 0] for i in range(2)] == [2 * x1 ** 2, 2 * x2 ** 2]
    assert V[0, 0] == x1 ** 2
    assert build_nimmo_matrices((3, 1), 2)[3] == (3, 1)
    # n + l = 4 is even, so no zero is appended
    assert build_nimmo_matrices((1,), 3)[3] == (1,)
    assert build_nimmo_matrices((1,), 2)[3] == (1, 0)
    assert A.size == 2 and A[0, 1] == RationalFunction(x2 - x1, x2 + x1)


def test_schur_D_is_pf_A():
    assert schur_D(range(2)) == RationalFunction(x2 - x1, x2 + x1)
    assert schur_A(range(3)).size == 3


# -- Nimmo's formula ------------------------------------------------------------


def test_nimmo_examples():
    assert nimmo_Q((1,), 2) == 2 * (x1 + x2)
    assert nimmo_Q((2, 1), 1) == 0
    assert nimmo_Q((2,), 2) == 2 * (x1 ** 2 + x2 ** 2) + 4 * x1 * x2
    assert nimmo_Q((), 3) == 1
    assert nimmo_P((1,), 2) == x1 + x2


def test_nimmo_matches_series_oracle():
    # independent oracle: coefficients of prod (1 + x_i z)/(1 - x_i z)
    z = Polynomial.var(9)
    F = RationalFunction((1 + x1 * z) * (1 + x2 * z), (1 - x1 * z) * (1 - x2 * z))
    s = series_expand(F, 6, graded=[9])
    for r in range(7):
        assert nimmo_Q((r,) if r else (), 2) == s.coefficient_of({9: r})


@pytest.mark.parametrize("method", METHODS)
@pytest.mark.parametrize("lam", [(1,), (2, 1), (3, 1), (3, 2, 1)])
def test_nimmo_methods_agree(lam, method):
    assert nimmo_Q(lam, 3, method) == nimmo_Q(lam, 3)
    assert nimmo_polynomiality(lam, 3, method).equal


@pytest.mark.parametrize("kind", ["P", "Q"])
@pytest.mark.parametrize("lam", [(1,), (2,), (2, 1), (3, 1), (4, 2, 1)])
def test_symmetry_under_swaps(kind, lam):
    f = nimmo_Q if kind == "Q" else nimmo_P
    q = f(lam, 3)
    assert q.is_symmetric()
    for perm in permutations(range(3)):
        assert q.value.rename(dict(enumerate(perm))) == q.value


@pytest.mark.parametrize("lam", [(1,), (3, 1), (4, 3, 1)])
def test_Q_has_real_coefficients(lam):
    assert nimmo_Q(lam, 3).value.is_real()


def test_qexpr_equality_and_labels():
    q = nimmo_Q((1,), 2)
    assert isinstance(q, QExpr)
    assert q.label == "Q(1)" and q.nvars == 2
    assert q == QExpr(2 * x1 + 2 * x2)
    assert str(q) == "2*x1 + 2*x2"


# -- generating functions and Schur's definition -------------------------------


def test_row_series():
    rows = q_row_series(3, 2)
    assert rows[0] == 1
    assert rows[1] == 2 * (x1 + x2)
    for r in range(1, 7):
        assert q_row(r, 2) == nimmo_Q((r,), 2)
    assert q_row(-1, 2) == 0


def test_pair_conventions():
    assert q_pair(0, 0, 2) == 0
    for r in range(1, 5):
        assert q_pair(r, 0, 2) == q_row(r, 2)
        assert q_pair(0, r, 2) == -q_row(r, 2)
    assert q_pair(2, 1, 2) == nimmo_Q((2, 1), 2)
    assert q_pair(1, 2, 2) == -nimmo_Q((2, 1), 2).value
    assert all(pair_convention_checks(5, 2))


def test_generating_function_checks():
    assert all(gen_fn_row_check(6, 2))
    assert all(gen_fn_pair_check(6, 2))


def test_schur_S_is_skew():
    S = schur_S((3, 1, 0), 2)
    assert S.size == 3
    assert S[1, 0] == -S[0, 1]


def test_schur_def_examples():
    assert schur_def_Q((2, 1), 2) == q_pair(2, 1, 2)
    assert schur_def_Q((3,), 2) == q_row(3, 2)
    assert schur_def_Q((3, 2, 1), 3) == nimmo_Q((3, 2, 1), 3)
    assert schur3_check((4, 1), 3).equal


def _unpadded_W(lam, n):
    return RectMatrix.from_function(
        n, len(lam), lambda i, j: chi(lam[j]) * Polynomial.var(i) ** lam[j])


def test_odd_n_sylvester_route_even_length():
    # n = 3 variables bordered by a column of ones, lambda = (2,1)
    n, lam = 3, (2, 1)
    ones = RectMatrix.from_function(n, 1, lambda i, j: 1)
    X = SkewMatrix.from_blocks([
        [schur_A(range(n)), ones, _unpadded_W(lam, n)],
        [None, 1, None],
        [None, None, len(lam)],
    ])
    pivot, Q = sylvester_quotients(X, n + 1)
    assert Q[0, 1] == RationalFunction(q_pair(2, 1, n).value)
    r = sylvester_check(X, n + 1)
    assert r.equal
    assert r.lhs == RationalFunction(nimmo_Q(lam, n).value)


@pytest.mark.parametrize("n,lam", [(3, (2,)), (3, (3, 2, 1)), (1, (3,))])
def test_odd_n_sylvester_route_odd_length(n, lam):
    # the extra border index pairs only with the column of ones, which flips
    # the sign of the last quotient column and of Pf X / pivot alike
    ones = RectMatrix.from_function(n, 1, lambda i, j: 1)
    X = SkewMatrix.from_blocks([
        [schur_A(range(n)), ones, _unpadded_W(lam, n), None],
        [None, 1, None, RectMatrix([[1]])],
        [None, None, len(lam), None],
        [None, None, None, 1],
    ])
    pivot, Q = sylvester_quotients(X, n + 1)
    l = len(lam)
    for i in range(l):
        assert Q[i, l] == RationalFunction(-q_pair(lam[i], 0, n).value)
        for j in range(i + 1, l):
            assert Q[i, j] == RationalFunction(q_pair(lam[i], lam[j], n).value)
    r = sylvester_check(X, n + 1)
    assert r.equal
    assert r.lhs == RationalFunction(-nimmo_Q(lam, n).value)
    assert schur_def_Q(lam, n) == nimmo_Q(lam, n)


# -- stability, Cauchy, Littlewood ----------------------------------------------


def test_stability_examples():
    assert stability_check((1,), 2).equal
    assert stability_check((), 2).equal
    assert stability_check((3, 2, 1), 3).equal
    assert nimmo_Q((1,), 3).value.substitute({2: 0}) == 2 * (x1 + x2)


def test_cauchy_examples():
    assert cauchy_truncated(2, 1).lhs == 1 == cauchy_truncated(2, 1).rhs
    r = cauchy_truncated(1, 2)
    assert r.equal and r.lhs == 1 + 2 * x1 * x2
    assert cauchy_truncated(2, 4).equal


def test_littlewood_examples():
    assert littlewood_truncated(2, 0).lhs == 1
    r = littlewood_truncated(1, 3)
    assert r.equal
    assert r.rhs == 1 + (1 + I) * (x1 + x1 ** 2 + x1 ** 3)
    assert littlewood_truncated(2, 4).equal


@pytest.mark.parametrize("l,a,b", [(0, 1, 0), (1, 1, 1), (2, 0, 2), (3, -2, 2), (4, -4, 0), (6, 0, -8)])
def test_littlewood_coeff_table(l, a, b):
    assert littlewood_coeffs(l) == (GaussianRational(a), GaussianRational(b))


@pytest.mark.parametrize("l", range(13))
def test_littlewood_coeffs_are_powers(l):
    a, b = littlewood_coeffs(l)
    assert a + b * I == (1 + I) ** l
    assert littlewood_coeff_check(l).equal


def test_littlewood_split():
    re, im = littlewood_split(2, 4)
    assert re.equal and im.equal
    full = littlewood_truncated(2, 4)
    assert full.lhs == re.lhs + I * im.lhs
