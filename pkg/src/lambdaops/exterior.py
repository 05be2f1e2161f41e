"""Integer exterior algebra on indexed odd generators.

Monomials are strictly increasing index tuples; the wedge of overlapping
monomials vanishes, and merging counts transpositions for the sign.  The
empty monomial is the unit, so elements may carry an integer unit part.
"""

from __future__ import annotations


def wedge_mono(a: tuple, b: tuple):
    """Merge two strictly increasing tuples; return (sign, merged) or None
    when an index repeats."""
    if not a:
        return 1, b
    if not b:
        return 1, a
    out = []
    sign = 1
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        if a[i] == b[j]:
            return None
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            # b[j] jumps over the remaining na - i generators of a
            if (na - i) % 2 == 1:
                sign = -sign
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return sign, tuple(out)


class ExtElem:
    """Integer-linear combination of exterior monomials (unit part allowed)."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple, int] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @staticmethod
    def unit(c: int = 1) -> "ExtElem":
        return ExtElem({(): c} if c else {})

    @staticmethod
    def generator(i: int) -> "ExtElem":
        return ExtElem({(i,): 1})

    def __add__(self, other):
        if isinstance(other, int):
            other = ExtElem.unit(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return ExtElem(out)

    __radd__ = __add__

    def __neg__(self):
        return ExtElem({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = ExtElem.unit(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ExtElem({m: c * other for m, c in self.terms.items()})
        out: dict[tuple, int] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                merged = wedge_mono(ma, mb)
                if merged is None:
                    continue
                sign, m = merged
                v = out.get(m, 0) + sign * ca * cb
                if v:
                    out[m] = v
                else:
                    del out[m]
        return ExtElem(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ExtElem.unit(other).terms
        return isinstance(other, ExtElem) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    def unit_part(self) -> int:
        return self.terms.get((), 0)

    def coefficient(self, mono: tuple) -> int:
        return self.terms.get(mono, 0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def max_index(self) -> int:
        return max((m[-1] for m in self.terms if m), default=0)

    def truncate(self, max_index: int) -> "ExtElem":
        return ExtElem(
            {m: c for m, c in self.terms.items() if not m or m[-1] <= max_index}
        )

    def render(self, symbol: str) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            body = "*".join(f"{symbol}{i}" for i in m) if m else str(abs(c))
            if m and abs(c) != 1:
                body = f"{abs(c)}*{body}"
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text
