"""Tour 6: finite-rank models and their restriction maps.

Two ladders of exact models: exterior algebras on mu-generators with the
restriction mu^k -> mu^k + mu^(k-1), and polynomial rings on beta-generators
with the analogous transition.  The distinguished combinations l^k and
lambda^k are stable under restriction; the stability is exactly the Pascal
rule for binomials with negative upper index.
"""

from lambdaops.models import (
    bun_beta,
    bun_restrict,
    lambdak_from_beta,
    lk_from_mu,
    un_mu,
    un_restrict,
)
from lambdaops.symfun import lambda_of_integer

# generator restriction
print("restrict mu^2 at rank 3:", un_restrict(un_mu(3, 2)))
print("restrict mu^3 at rank 3:", un_restrict(un_mu(3, 3)), "(top index truncates)")

# the stable combinations
print("l^2 at rank 2:", lk_from_mu(2, 2))
for n in (3, 4, 5, 6):
    stable = un_restrict(lk_from_mu(n, 2)) == lk_from_mu(n - 1, 2)
    print(f"restrict l^2 from rank {n}: stable = {stable}")

# the same story one level up
print("restrict beta^2 at rank 3:", bun_restrict(bun_beta(3, 2)))
print("lambda^1 at rank 2:", lambdak_from_beta(2, 1))
for n in (1, 2, 3, 4):
    stable = bun_restrict(lambdak_from_beta(n + 1, 2 if n >= 2 else 1)) == \
        lambdak_from_beta(n, 2 if n >= 2 else 1)
    print(f"restrict from rank {n + 1}: stable = {stable}")

# the arithmetic engine underneath: Pascal for negative upper index
for n in (2, 5):
    for i in (1, 3):
        lhs = lambda_of_integer(-n, i) + lambda_of_integer(-n, i - 1)
        print(f"C({-n},{i}) + C({-n},{i - 1}) = {lhs} = C({-n + 1},{i}):",
              lhs == lambda_of_integer(-n + 1, i))

# exterior signs are live, not cosmetic
a = un_mu(4, 1) * un_mu(4, 3)
b = un_mu(4, 3) * un_mu(4, 1)
print("mu1^mu3 == -(mu3^mu1):", a == -1 * b)
print("mu2^mu2 == 0:", (un_mu(4, 2) * un_mu(4, 2)).ext.is_zero)
