"""Pfaffians of symbolic skew-symmetric matrices.

Run with ``python3 demos/01_pfaffians.py``.
"""

from qfun.identities import EntrySource, schur_pfaffian
from qfun.pfaffian import METHODS, det, perfect_matchings, matching_sign, pfaffian

# A generic 4x4 skew matrix: every entry above the diagonal is its own variable.
X = EntrySource().skew(4)
print("X =")
for row in X.to_rows():
    print("   ", [str(v) for v in row])

# The definition sums over perfect matchings of {1, 2, 3, 4}.
for m in perfect_matchings(4):
    print("matching", m.pairs, "sign", matching_sign(m))

# Three independent algorithms give the same polynomial.
for method in METHODS:
    print(f"{method:12s}", pfaffian(X, method))

# The square of the Pfaffian is the determinant.
print("Pf(X)^2 == det(X):", pfaffian(X) ** 2 == det(X.as_rect()))

# Six variables: 15 matchings, still instant by elimination.
Y = EntrySource().skew(6)
print("terms in Pf of a generic 6x6:", len(pfaffian(Y)))

# Schur's Pfaffian Pf((x_j - x_i)/(x_j + x_i)) factors into a product.
r = schur_pfaffian(range(2))
print("Schur Pfaffian, 2 variables:", r.lhs)
for n in (4, 6):
    print(f"Schur Pfaffian, {n} variables, equal to the product:", schur_pfaffian(range(n)).equal)
