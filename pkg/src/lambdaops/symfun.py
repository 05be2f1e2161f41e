"""Symmetric-function engine: elementary-basis expansion and the universal
polynomials of lambda-ring theory, all constructed from the splitting
principle over formal line variables.

Families used here: "x"/"y" for the two elementary alphabets of the product
polynomials, "L" for lambda-generator symbols, "e" for the generic
elementary target, "A" for internal line variables.
"""

from __future__ import annotations

import itertools
import math

from .errors import NonSymmetricInput
from .intpoly import IntPoly, _mono_mul

_ESYM_CACHE: dict[tuple[str, int, int], IntPoly] = {}
_PK_CACHE: dict[int, IntPoly] = {}
_PIJ_CACHE: dict[tuple[int, int], IntPoly] = {}
_PSI_CACHE: dict[int, IntPoly] = {}


def esym_poly(family: str, m: int, k: int) -> IntPoly:
    """The k-th elementary symmetric polynomial in family_1..family_m, expanded."""
    if k == 0:
        return IntPoly.one()
    if k > m:
        return IntPoly.zero()
    key = (family, m, k)
    cached = _ESYM_CACHE.get(key)
    if cached is None:
        terms = {}
        for subset in itertools.combinations(range(1, m + 1), k):
            mono = tuple((family, i, 1) for i in subset)
            terms[mono] = 1
        cached = IntPoly(terms)
        _ESYM_CACHE[key] = cached
    return cached


def _swap_indices(p: IntPoly, family: str, i: int, j: int) -> IntPoly:
    def fn(mono, c):
        out = []
        for (f, idx, e) in mono:
            if f == family and idx == i:
                idx = j
            elif f == family and idx == j:
                idx = i
            out.append((f, idx, e))
        return tuple(sorted(out)), c

    return p.map_terms(fn)


def _family_vector(mono, family: str, m: int) -> tuple[int, ...]:
    vec = [0] * m
    for (f, idx, e) in mono:
        if f == family:
            vec[idx - 1] = e
    return tuple(vec)


def _strip_family(mono, family: str):
    return tuple(t for t in mono if t[0] != family)


def elementary_expand(p: IntPoly, family: str = "x", m: int | None = None,
                      target: str = "e") -> IntPoly:
    """Rewrite a symmetric polynomial in terms of elementary symmetric ones.

    Classical leading-monomial subtraction under lexicographic order: the
    lex-greatest exponent vector of a symmetric polynomial is a partition
    (d1 >= ... >= dm), and subtracting coeff * prod e_i^(d_i - d_{i+1})
    strictly lowers it.  Coefficients may involve other variable families;
    they ride along untouched.

    Raises NonSymmetricInput if any adjacent transposition changes p.
    """
    if m is None:
        indices = [i for (f, i) in p.variables() if f == family]
        m = max(indices) if indices else 0
    for i in range(1, m):
        if _swap_indices(p, family, i, i + 1) != p:
            raise NonSymmetricInput(
                f"not symmetric under swapping {family}{i} <-> {family}{i + 1}"
            )

    work = p
    out = IntPoly.zero()
    while True:
        lead = None
        for mono in work.terms:
            vec = _family_vector(mono, family, m)
            if any(vec) and (lead is None or vec > lead):
                lead = vec
        if lead is None:
            return out + work

        coeff = IntPoly(
            {
                _strip_family(mono, family): c
                for mono, c in work.terms.items()
                if _family_vector(mono, family, m) == lead
            }
        )
        expansion = IntPoly.one()
        emono = IntPoly.one()
        padded = lead + (0,)
        for i in range(1, m + 1):
            exp = padded[i - 1] - padded[i]
            if exp:
                expansion = expansion * esym_poly(family, m, i) ** exp
                emono = emono * IntPoly.var(target, i, exp)
        work = work - coeff * expansion
        out = out + coeff * emono


def universal_pk(k: int) -> IntPoly:
    """P_k(x_1..x_k; y_1..y_k): the polynomial with P_k(e(a); e(b)) equal to
    the k-th elementary symmetric polynomial of the k^2 products a_r * b_s.

    Built by the splitting principle.  Each row r satisfies
    prod_s (1 + a_r b_s t) = sum_j e_j(b) a_r^j t^j, so the second alphabet
    enters already in elementary form; convolving the k row series and
    expanding the first alphabet yields P_k.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    cached = _PK_CACHE.get(k)
    if cached is not None:
        return cached

    series = [IntPoly.one()] + [IntPoly.zero()] * k
    for r in range(1, k + 1):
        nxt = [IntPoly.zero() for _ in range(k + 1)]
        for j in range(k + 1):
            part = series[j]
            if part.is_zero:
                continue
            nxt[j] = nxt[j] + part
            for d in range(1, k - j + 1):
                row_mono = _mono_mul((("A", r, d),), (("y", d, 1),))
                nxt[j + d] = nxt[j + d] + part.map_terms(
                    lambda mono, c: (_mono_mul(mono, row_mono), c)
                )
        series = nxt

    result = elementary_expand(series[k], family="A", m=k, target="x")
    _PK_CACHE[k] = result
    return result


def universal_pij(i: int, j: int) -> IntPoly:
    """P_{i,j}(L_1..L_{ij}): with L_m the m-th elementary symmetric polynomial
    of ij line variables, P_{i,j} equals the i-th elementary symmetric
    polynomial of the products over j-element subsets of the lines.
    """
    if i < 1 or j < 1:
        raise ValueError("indices must be >= 1")
    key = (i, j)
    cached = _PIJ_CACHE.get(key)
    if cached is not None:
        return cached

    n = i * j
    series = [IntPoly.one()] + [IntPoly.zero() for _ in range(i)]
    for subset in itertools.combinations(range(1, n + 1), j):
        item = tuple(("A", s, 1) for s in subset)
        for t in range(i, 0, -1):
            if series[t - 1].is_zero:
                continue
            series[t] = series[t] + series[t - 1].map_terms(
                lambda mono, c: (_mono_mul(mono, item), c)
            )

    result = elementary_expand(series[i], family="A", m=n, target="L")
    _PIJ_CACHE[key] = result
    return result


def left_linearise(p: IntPoly) -> IntPoly:
    """Sum of the monomials of p whose total degree in the x family is one."""
    return p.part_of_family_degree("x", 1)


def newton_psi(k: int) -> IntPoly:
    """The k-th power sum expressed in elementary symmetric polynomials
    (family "L") via Newton's identities.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    cached = _PSI_CACHE.get(k)
    if cached is not None:
        return cached
    if k == 1:
        result = IntPoly.var("L", 1)
    else:
        result = IntPoly.zero()
        for i in range(1, k):
            sign = 1 if i % 2 == 1 else -1
            result = result + sign * (IntPoly.var("L", i) * newton_psi(k - i))
        sign = 1 if k % 2 == 1 else -1
        result = result + sign * k * IntPoly.var("L", k)
    _PSI_CACHE[k] = result
    return result


def lambda_of_integer(n: int, k: int) -> int:
    """Generalised binomial coefficient C(n, k) = n(n-1)...(n-k+1)/k!;
    equals lambda^k applied to the integer n in any lambda-ring.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return 1
    num = 1
    for t in range(k):
        num *= n - t
    return num // math.factorial(k)
