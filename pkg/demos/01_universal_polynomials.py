"""Tour 1: the universal polynomials and the splitting principle.

The whole kernel is grounded in one computational idea: to know what a
lambda operation does to a product or a composite, evaluate everything on
formal sums of rank-one "line" classes, where lambda^k becomes the k-th
elementary symmetric polynomial.  Run with:  python demos/01_universal_polynomials.py
"""

from lambdaops import (
    elementary_expand,
    lambda_of_integer,
    left_linearise,
    newton_psi,
    universal_pij,
    universal_pk,
)
from lambdaops.intpoly import IntPoly

# -- elementary symmetric expansion ------------------------------------------

x1, x2 = IntPoly.var("x", 1), IntPoly.var("x", 2)
print("power sum x1^2 + x2^2 in the elementary basis:")
print("   ", elementary_expand(x1 * x1 + x2 * x2))  # e1^2 - 2*e2

# -- the product polynomials P_k ----------------------------------------------

# P_k(x; y) answers: what is lambda^k of a product, given the lambda values
# of the factors?  x_i stands for lambda^i of the left factor, y_j for the
# right.
for k in (1, 2, 3):
    print(f"P_{k} =", universal_pk(k))

# Setting x1 = 1 and the higher x_i = 0 means "the left factor is the unit",
# and P_k collapses to y_k:
images = {("x", 1): IntPoly.const(1), ("x", 2): IntPoly.zero(), ("x", 3): IntPoly.zero()}
print("P_3 with a unit left factor:", universal_pk(3).substitute(images))

# -- the composition polynomials P_{i,j} ---------------------------------------

# P_{i,j}(L) answers: what is lambda^i of lambda^j, in terms of the lambda
# values of the argument?
print("P_{2,2} =", universal_pij(2, 2))
print("P_{1,5} =", universal_pij(1, 5))

# -- Newton power sums and the left linearisation --------------------------------

# The Adams elements are the power sums rewritten in the elementary basis.
print("psi_3 =", newton_psi(3))

# The x-linear part of P_k drives the looping operator in tour 5.
print("PL_2 =", left_linearise(universal_pk(2)))

# -- integer lambda values --------------------------------------------------------

# On plain integers lambda^k is the binomial coefficient, which also makes
# sense for negative arguments:
print("lambda^3 of -1:", lambda_of_integer(-1, 3))
print("lambda^2 of -4:", lambda_of_integer(-4, 2))
