"""Sparse multivariate polynomials over arbitrary-precision integers.

A variable is a (family, index) pair such as ("L", 3); a monomial is a
sorted tuple of (family, index, exponent) triples with positive exponents;
a polynomial maps monomials to nonzero integer coefficients.  Values are
treated as immutable after construction, so they are safe to share, hash
and memoise.
"""

from __future__ import annotations

import json
from typing import Callable, Iterable, Mapping

Mono = tuple  # tuple[tuple[str, int, int], ...]

ONE_MONO: Mono = ()


def _mono_mul(a: Mono, b: Mono) -> Mono:
    """Merge two sorted monomials, adding exponents of shared variables."""
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        fa, xa, ea = a[i]
        fb, xb, eb = b[j]
        if (fa, xa) == (fb, xb):
            out.append((fa, xa, ea + eb))
            i += 1
            j += 1
        elif (fa, xa) < (fb, xb):
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


class IntPoly:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Mono, int] | None = None):
        self.terms: dict[Mono, int] = {m: c for m, c in (terms or {}).items() if c}

    # -- constructors -------------------------------------------------

    @staticmethod
    def var(family: str, index: int, exp: int = 1, coeff: int = 1) -> "IntPoly":
        if exp < 0:
            raise ValueError("exponents must be nonnegative")
        if exp == 0:
            return IntPoly.const(coeff)
        return IntPoly({((family, index, exp),): coeff})

    @staticmethod
    def const(c: int) -> "IntPoly":
        return IntPoly({ONE_MONO: c} if c else {})

    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly()

    @staticmethod
    def one() -> "IntPoly":
        return IntPoly({ONE_MONO: 1})

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "IntPoly":
        other = _coerce(other)
        if not other.terms:
            return self
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "IntPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "IntPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            if other == 0:
                return IntPoly()
            return IntPoly({m: c * other for m, c in self.terms.items()})
        out: dict[Mono, int] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = _mono_mul(ma, mb)
                v = out.get(m, 0) + ca * cb
                if v:
                    out[m] = v
                else:
                    del out[m]
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.terms == IntPoly.const(other).terms
        return isinstance(other, IntPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(self.key())

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- queries --------------------------------------------------------

    def key(self):
        """Canonical hashable form (sorted term list)."""
        return tuple(sorted(self.terms.items()))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> int:
        return self.terms.get(ONE_MONO, 0)

    def coefficient(self, mono: Mono) -> int:
        return self.terms.get(mono, 0)

    def variables(self) -> set[tuple[str, int]]:
        return {(f, i) for m in self.terms for (f, i, _) in m}

    def family_degree(self, mono: Mono, family: str) -> int:
        return sum(e for (f, _, e) in mono if f == family)

    def part_of_family_degree(self, family: str, degree: int) -> "IntPoly":
        """Keep exactly the monomials of the given total degree in `family`."""
        return IntPoly(
            {m: c for m, c in self.terms.items() if self.family_degree(m, family) == degree}
        )

    def weight(self, family: str) -> int:
        """Max over monomials of sum(index * exponent) within `family`."""
        best = 0
        for m in self.terms:
            w = sum(i * e for (f, i, e) in m if f == family)
            best = max(best, w)
        return best

    # -- structural maps ------------------------------------------------

    def map_terms(self, fn: Callable[[Mono, int], tuple[Mono, int]]) -> "IntPoly":
        out: dict[Mono, int] = {}
        for m, c in self.terms.items():
            m2, c2 = fn(m, c)
            v = out.get(m2, 0) + c2
            if v:
                out[m2] = v
            else:
                out.pop(m2, None)
        return IntPoly(out)

    def rename_family(self, src: str, dst: str) -> "IntPoly":
        def fn(m, c):
            m2 = tuple(sorted((dst if f == src else f, i, e) for (f, i, e) in m))
            return m2, c

        return self.map_terms(fn)

    def truncate_family(self, family: str, max_index: int) -> "IntPoly":
        """Drop every monomial containing a `family` variable above `max_index`."""
        return IntPoly(
            {
                m: c
                for m, c in self.terms.items()
                if all(not (f == family and i > max_index) for (f, i, _) in m)
            }
        )

    def substitute(self, images: Mapping[tuple[str, int], "IntPoly | int"]) -> "IntPoly":
        """Simultaneously substitute polynomials for variables.

        Variables absent from `images` are left untouched.  Substitution is
        a ring map, so the result is exact.
        """
        imgs = {v: _coerce(p) for v, p in images.items()}
        pow_cache: dict[tuple[tuple[str, int], int], IntPoly] = {}
        out = IntPoly()
        for m, c in self.terms.items():
            acc = IntPoly.const(c)
            for (f, i, e) in m:
                v = (f, i)
                if v in imgs:
                    p = pow_cache.get((v, e))
                    if p is None:
                        p = imgs[v] ** e
                        pow_cache[(v, e)] = p
                    acc = acc * p
                else:
                    acc = acc * IntPoly.var(f, i, e)
                if acc.is_zero:
                    break
            out = out + acc
        return out

    def evaluate(self, assign: Mapping[tuple[str, int], int]) -> int:
        """Evaluate at an integer point; every variable must be assigned."""
        total = 0
        for m, c in self.terms.items():
            v = c
            for (f, i, e) in m:
                v *= assign[(f, i)] ** e
            total += v
        return total

    # -- serialisation ----------------------------------------------------

    def sorted_terms(self) -> list[tuple[Mono, int]]:
        return sorted(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = "*".join(
                f"{f}{i}" if e == 1 else f"{f}{i}^{e}" for (f, i, e) in m
            )
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = factors
            else:
                body = f"{abs(c)}*{factors}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    __repr__ = __str__

    def to_obj(self) -> list:
        """JSON-ready form: sorted terms, decimal-string coefficients."""
        return [
            {"mono": [[f, i, e] for (f, i, e) in m], "coeff": str(c)}
            for m, c in self.sorted_terms()
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), separators=(",", ":"))

    @staticmethod
    def from_obj(obj: Iterable[dict]) -> "IntPoly":
        terms: dict[Mono, int] = {}
        for t in obj:
            mono = tuple(sorted((f, int(i), int(e)) for f, i, e in t["mono"]))
            terms[mono] = int(t["coeff"])
        return IntPoly(terms)

    @staticmethod
    def from_json(text: str) -> "IntPoly":
        return IntPoly.from_obj(json.loads(text))


def _coerce(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly.const(x)
    raise TypeError(f"cannot treat {type(x).__name__} as IntPoly")
