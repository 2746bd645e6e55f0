"""Cauchy and Littlewood identities, and skew Q-functions, as finite exact checks.

Run with ``python3 demos/03_identities.py``.
"""

from qfun.schur import (
    StrictPartition,
    cauchy_truncated,
    littlewood_split,
    littlewood_truncated,
    nimmo_Q,
    skew_by_projection,
    skew_expansion_check,
    skew_Q_pjn,
)

# Each term P_λ(x) Q_λ(y) is homogeneous of degree 2|λ|, so truncating the
# product side at degree d needs only |λ| <= d/2.
r = cauchy_truncated(2, 4)
print("Cauchy, n=2, d=4:", r.equal)
print("   ", r.lhs)

# The Littlewood identity has Gaussian-rational coefficients (1+i)^l(λ).
r = littlewood_truncated(1, 3)
print("Littlewood, n=1, d=3:", r.rhs)
re, im = littlewood_split(2, 4)
print("real and imaginary parts separately:", re.equal, im.equal)

# Skew Q-functions: the Pfaffian formula against coefficients read off Q_λ(x, y).
lam = StrictPartition((3, 1))
oracle = skew_by_projection(lam, 1)
for mu, value in oracle.items():
    print(f"Q_{lam}/{mu} =", value, "| Pfaffian formula agrees:", skew_Q_pjn(lam, mu, 1) == value)

# Summing Q_{λ/μ}(x) Q_μ(y) over μ rebuilds Q_λ(x, y).
print("expansion of Q_(3,1)(x1, x2, y1, y2):", skew_expansion_check(lam, 2, 2).equal)
print("Q_(3,1)(x1, y1) =", nimmo_Q(lam, 2).to_str(["x1", "y1"]))
