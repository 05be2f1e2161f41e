"""Independent brute-force oracles used across the test suite.

Everything here works on plain integers (or lists of them) so that nothing
depends on the polynomial kernel it is checking.
"""

from __future__ import annotations

import itertools
import math


def esym(vals, k: int) -> int:
    """Elementary symmetric polynomial of an integer list, by the standard DP."""
    if k == 0:
        return 1
    if k > len(vals):
        return 0
    row = [1] + [0] * k
    for v in vals:
        for j in range(k, 0, -1):
            row[j] += v * row[j - 1]
    return row[k]


def esym_values(vals, kmax: int) -> list[int]:
    return [esym(vals, k) for k in range(kmax + 1)]


def grid_products(a, b) -> list[int]:
    return [x * y for x in a for y in b]


def subset_products(vals, j: int) -> list[int]:
    return [math.prod(s) for s in itertools.combinations(vals, j)]


def power_sum(vals, k: int) -> int:
    return sum(v**k for v in vals)


def binom(n: int, k: int) -> int:
    """Generalised binomial for possibly negative n, by the product formula."""
    if k < 0:
        return 0
    num = 1
    for t in range(k):
        num *= n - t
    return num // math.factorial(k)


def pk_assignment(a, b, k: int) -> dict:
    """Variable assignment sending x_i, y_j to elementary symmetric values."""
    assign = {("x", i): esym(a, i) for i in range(1, k + 1)}
    assign.update({("y", j): esym(b, j) for j in range(1, k + 1)})
    return assign


def lam_assignment(vals, family: str, kmax: int) -> dict:
    return {(family, k): esym(vals, k) for k in range(1, kmax + 1)}
