import pytest

from qfun.algebra import Polynomial
from qfun.schur import (
    M_matrix,
    N_matrix,
    StrictPartition,
    nimmo_Q,
    ns_Q,
    pjn_check,
    schur_def_Q,
    skew_by_projection,
    skew_candidates,
    skew_expansion_check,
    skew_Q_pjn,
    skew_support_guard,
    strict_partitions,
)

x1, x2 = Polynomial.var(0), Polynomial.var(1)


def test_M_matrix_entries():
    M = M_matrix((3, 1), (1, 0), 2)
    assert M.shape == (2, 2)
    # column j pairs with beta_{m+1-j}, so column 0 uses beta = 0
    assert M[0, 0] == nimmo_Q((3,), 2)
    assert M[0, 1] == nimmo_Q((2,), 2)
    assert M[1, 1] == 1
    assert M_matrix((1,), (2,), 2)[0, 0] == 0


def test_N_matrix_shape():
    N = N_matrix((2, 1), (0,), (1, 2))
    assert N.shape == (2, 2)
    assert N[0, 0] == nimmo_Q((2,), (0, 1))


@pytest.mark.parametrize("lam", [(2, 1), (3, 1), (4, 3, 2, 1)])
def test_pjn_empty_mu_is_Q(lam):
    assert skew_Q_pjn(lam, (), 2) == schur_def_Q(lam, 2) == nimmo_Q(lam, 2)


@pytest.mark.parametrize("lam", [(1,), (2, 1), (3, 2), (3, 2, 1)])
def test_pjn_lambda_over_lambda_is_one(lam):
    assert skew_Q_pjn(lam, lam, 2) == 1


def test_projection_oracle_frozen_values():
    got = skew_by_projection((2, 1), 1)
    assert got == {
        StrictPartition((2, 1)): Polynomial.constant(1),
        StrictPartition((2,)): 2 * x1,
        StrictPartition((1,)): 2 * x1 ** 2,
    }


def test_pjn_example():
    oracle = skew_by_projection((2, 1), 2)
    assert skew_Q_pjn((2, 1), (1,), 2) == oracle[StrictPartition((1,))]
    assert pjn_check((2, 1), (1,), 2).equal


@pytest.mark.parametrize("n", [1, 2])
def test_pjn_range(n):
    for lam in strict_partitions(5):
        for mu in strict_partitions(lam.weight):
            if lam.contains(mu):
                assert pjn_check(lam, mu, n).equal


def test_ns_reduces_to_nimmo_and_schur():
    assert ns_Q((2, 1), 0, 3).equal
    r = ns_Q((3, 1), 2, 0)
    assert r.equal and r.lhs == schur_def_Q((3, 1), 2).value
    assert ns_Q((2, 1), 1, 1).equal


def test_ns_needs_variables():
    with pytest.raises(ValueError):
        ns_Q((1,), 0, 0)


@pytest.mark.parametrize("n,k", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_ns_range(n, k):
    for lam in strict_partitions(5):
        assert ns_Q(lam, n, k).equal


def test_skew_expansion_single_box():
    r = skew_expansion_check((1,), 1, 1)
    assert r.equal
    y = Polynomial.var(1)
    q_skew = skew_Q_pjn((1,), (), 1).value
    assert r.rhs == q_skew + skew_Q_pjn((1,), (1,), 1).value * nimmo_Q((1,), (1,)).value
    assert r.lhs == 2 * x1 + 2 * y


def test_skew_expansion_examples():
    assert skew_expansion_check((2, 1), 1, 1).equal
    assert skew_expansion_check((3, 2, 1), 2, 2).equal


def test_skew_expansion_at_zero_y_is_stability():
    lam = (3, 1)
    full = nimmo_Q(lam, 3).value.substitute({2: 0})
    # at y = 0 only Q_∅(y) = 1 survives, leaving Q_{λ/∅}(x) = Q_λ(x)
    assert full == skew_Q_pjn(lam, (), 2).value == nimmo_Q(lam, 2).value


def test_skew_candidates():
    lam = StrictPartition((2, 1))
    inside = skew_candidates(lam)
    assert StrictPartition((3,)) not in inside
    assert StrictPartition((2, 1)) in inside
    outside = skew_candidates(lam, 2)
    assert StrictPartition((3,)) in outside
    assert not set(inside) & set(outside)


@pytest.mark.parametrize("lam", [(1,), (2, 1), (3, 1), (4, 2)])
def test_skew_support_guard(lam):
    r = skew_support_guard(lam, 2)
    assert r.equal and r.parameters["checked"] > 0
