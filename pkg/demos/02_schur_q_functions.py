"""Schur Q-functions three ways: Nimmo's quotient, generating functions, Schur's Pfaffian.

Run with ``python3 demos/02_schur_q_functions.py``.
"""

from qfun.schur import (
    nimmo_P,
    nimmo_Q,
    q_pair,
    q_row_series,
    schur_def_Q,
    strict_partitions,
)

n = 3

# Nimmo's formula: a ratio of a Pfaffian and D(x) that always divides exactly.
for lam in strict_partitions(4):
    q, p = nimmo_Q(lam, n), nimmo_P(lam, n)
    print(f"{q.label:7s} = {q}")
    print(f"{p.label:7s} = {p}")

# One-row functions are the z-coefficients of prod (1 + x_i z)/(1 - x_i z).
for q in q_row_series(3, n):
    print(q.label, "=", q)

# Two-row functions come from a second generating function; note the antisymmetry.
print("Q(2,1) =", q_pair(2, 1, n))
print("Q(1,2) =", q_pair(1, 2, n))

# Schur's original definition: the Pfaffian of the matrix of two-row functions.
lam = (3, 2, 1)
print("Pf S_(3,2,1) == Nimmo's Q_(3,2,1):", schur_def_Q(lam, n) == nimmo_Q(lam, n))

# Too many parts for the number of variables gives zero.
print("Q_(3,2,1) in two variables:", nimmo_Q(lam, 2))
