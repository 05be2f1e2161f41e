"""The truncated power-series biring on the lambda-operation generators.

Elements are polynomials in L1..LN (family "L"); the quotient sets every
generator of index above the truncation level N to zero.  All structure
maps extend multiplicatively from their values on generators, and internal
composition is computed exactly before the final truncation, so algebraic
laws hold on the nose whenever the weights involved stay within N and hold
modulo the filtration ideal otherwise.
"""

from __future__ import annotations

from .errors import NotReduced
from .intpoly import IntPoly
from .symfun import lambda_of_integer, universal_pij, universal_pk

_SIGMA_CACHE: dict[int, IntPoly] = {}
_GAMMA_CACHE: dict[tuple[int, int], IntPoly] = {}
_COMPOSE_CACHE: dict[tuple[int, tuple], IntPoly] = {}


class KBUElem:
    """A truncated element: polynomial in L1..LN plus the level N."""

    __slots__ = ("poly", "trunc")

    def __init__(self, poly: IntPoly, trunc: int):
        if trunc < 1:
            raise ValueError("truncation level must be >= 1")
        self.poly = poly.truncate_family("L", trunc)
        self.trunc = trunc

    @staticmethod
    def from_int(c: int, trunc: int) -> "KBUElem":
        return KBUElem(IntPoly.const(c), trunc)

    def retruncate(self, level: int) -> "KBUElem":
        return KBUElem(self.poly, level)

    def _match(self, other) -> "KBUElem":
        if isinstance(other, int):
            return KBUElem.from_int(other, self.trunc)
        if other.trunc != self.trunc:
            raise ValueError("truncation levels differ; retruncate explicitly")
        return other

    def __add__(self, other):
        other = self._match(other)
        return KBUElem(self.poly + other.poly, self.trunc)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._match(other)
        return KBUElem(self.poly - other.poly, self.trunc)

    def __neg__(self):
        return KBUElem(-self.poly, self.trunc)

    def __mul__(self, other):
        if isinstance(other, int):
            return KBUElem(self.poly * other, self.trunc)
        other = self._match(other)
        return KBUElem(self.poly * other.poly, self.trunc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self.poly == IntPoly.const(other)
        return (
            isinstance(other, KBUElem)
            and self.trunc == other.trunc
            and self.poly == other.poly
        )

    def __hash__(self):
        return hash((self.trunc, self.poly.key()))

    def __str__(self):
        return str(self.poly)

    __repr__ = __str__

    @property
    def is_zero(self):
        return self.poly.is_zero

    def weight(self) -> int:
        return self.poly.weight("L")

    def reduced(self) -> "KBUElem":
        """Subtract the constant term (projection to the augmentation ideal)."""
        return KBUElem(self.poly - IntPoly.const(self.poly.constant_term()), self.trunc)

    def to_obj(self):
        return {"trunc": self.trunc, "poly": self.poly.to_obj()}


def gen(k: int, trunc: int) -> KBUElem:
    """The generator L_k at level N (zero when k exceeds N)."""
    if k < 1:
        raise ValueError("generator index must be >= 1")
    return KBUElem(IntPoly.var("L", k), trunc)


def cozero(x: KBUElem) -> int:
    """eps+: kill every generator, leaving the constant term."""
    return x.poly.constant_term()


# -- tensors ----------------------------------------------------------------


class TensorKBU:
    """Two-leg tensor over the truncated ring, stored as a polynomial in the
    leg families "T1" and "T2" and normalised by grouping on left monomials.
    """

    __slots__ = ("poly", "trunc")

    def __init__(self, poly: IntPoly, trunc: int):
        poly = poly.truncate_family("T1", trunc).truncate_family("T2", trunc)
        self.poly = poly
        self.trunc = trunc

    def __eq__(self, other):
        return (
            isinstance(other, TensorKBU)
            and self.trunc == other.trunc
            and self.poly == other.poly
        )

    def __add__(self, other):
        return TensorKBU(self.poly + other.poly, self.trunc)

    def pairs(self) -> list[tuple[KBUElem, KBUElem]]:
        """Sumless-Sweedler view: (left monomial, right element) pairs with
        distinct left factors, sorted canonically."""
        grouped: dict[tuple, IntPoly] = {}
        for mono, c in self.poly.terms.items():
            left = tuple(t for t in mono if t[0] == "T1")
            right = tuple(t for t in mono if t[0] == "T2")
            grouped[left] = grouped.get(left, IntPoly.zero()) + IntPoly({right: c})
        out = []
        for left in sorted(grouped):
            lmono = tuple(("L", i, e) for (_, i, e) in left)
            lpoly = IntPoly({lmono: 1})
            rpoly = grouped[left].rename_family("T2", "L")
            out.append((KBUElem(lpoly, self.trunc), KBUElem(rpoly, self.trunc)))
        return out

    def __str__(self):
        parts = []
        for left, right in self.pairs():
            parts.append(f"({left})(x)({right})")
        return " + ".join(parts) if parts else "0"


def tensor_of(left: KBUElem, right: KBUElem) -> TensorKBU:
    poly = left.poly.rename_family("L", "T1") * right.poly.rename_family("L", "T2")
    return TensorKBU(poly, left.trunc)


def coadd_image(k: int, left: str = "T1", right: str = "T2") -> IntPoly:
    """Image of L_k under co-addition: sum over i+j=k of left_i * right_j."""
    out = IntPoly.var(left, k) + IntPoly.var(right, k)
    for i in range(1, k):
        out = out + IntPoly.var(left, i) * IntPoly.var(right, k - i)
    return out


def comult_image(k: int, left: str = "T1", right: str = "T2") -> IntPoly:
    """Image of L_k under co-multiplication: P_k(left_i ; right_j)."""
    images = {}
    for i in range(1, k + 1):
        images[("x", i)] = IntPoly.var(left, i)
        images[("y", i)] = IntPoly.var(right, i)
    return universal_pk(k).substitute(images)


def _apply_on_generators(x: KBUElem, image) -> IntPoly:
    indices = sorted({i for (f, i) in x.poly.variables() if f == "L"})
    return x.poly.substitute({("L", k): image(k) for k in indices})


def coadd(x: KBUElem) -> TensorKBU:
    """Co-addition, a ring map with Delta+(L_k) = sum_{i+j=k} L_i (x) L_j."""
    return TensorKBU(_apply_on_generators(x, coadd_image), x.trunc)


def comult(x: KBUElem) -> TensorKBU:
    """Co-multiplication, a ring map with Delta-x(L_k) = P_k(L (x) 1; 1 (x) L)."""
    return TensorKBU(_apply_on_generators(x, comult_image), x.trunc)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def coadd_multi(x: KBUElem, legs: int) -> IntPoly:
    """Iterated co-addition into `legs` tensor legs (families T1..Tlegs);
    by coassociativity L_k maps to the sum over compositions k1+...+km=k.
    """

    def image(k: int) -> IntPoly:
        out = IntPoly.zero()
        for comp in _compositions(k, legs):
            term = IntPoly.one()
            for leg, kt in enumerate(comp, start=1):
                if kt:
                    term = term * IntPoly.var(f"T{leg}", kt)
            out = out + term
        return out

    poly = _apply_on_generators(x, image)
    for leg in range(1, legs + 1):
        poly = poly.truncate_family(f"T{leg}", x.trunc)
    return poly


def sigma_gen(k: int) -> IntPoly:
    """Antipode of L_k: the recursion sum_{i+j=k} L_i * sigma(L_j) = 0."""
    if k == 0:
        return IntPoly.one()
    cached = _SIGMA_CACHE.get(k)
    if cached is None:
        acc = IntPoly.zero()
        for i in range(1, k + 1):
            acc = acc + IntPoly.var("L", i) * sigma_gen(k - i)
        cached = -acc
        _SIGMA_CACHE[k] = cached
    return cached


def antipode(x: KBUElem) -> KBUElem:
    """Co-additive inverse, extended from the generators as a ring map."""
    return KBUElem(_apply_on_generators(x, sigma_gen), x.trunc)


def gamma_gen(kappa: int, k: int) -> IntPoly:
    """gamma(kappa)(L_k) = P_k evaluated at x_i = C(kappa, i), y_j = L_j."""
    key = (kappa, k)
    cached = _GAMMA_CACHE.get(key)
    if cached is None:
        images = {("x", i): IntPoly.const(lambda_of_integer(kappa, i)) for i in range(1, k + 1)}
        cached = universal_pk(k).substitute(images).rename_family("y", "L")
        _GAMMA_CACHE[key] = cached
    return cached


def colinear(kappa: int, x: KBUElem) -> KBUElem:
    """Co-linear structure: precomposition with multiplication by kappa."""
    return KBUElem(_apply_on_generators(x, lambda k: gamma_gen(kappa, k)), x.trunc)


# -- internal composition -----------------------------------------------------


def _gen_compose(g: int, ypoly: IntPoly) -> IntPoly:
    """L_g composed with a reduced polynomial, computed exactly.

    Extension rules: over a sum via co-addition, over a product via
    co-multiplication, over an integer multiple via the co-linear structure,
    and L_g composed with zero is 0 (the augmentation of a generator).
    """
    if g == 0:
        return IntPoly.one()
    if ypoly.is_zero:
        return IntPoly.zero()
    key = (g, ypoly.key())
    cached = _COMPOSE_CACHE.get(key)
    if cached is not None:
        return cached

    terms = ypoly.sorted_terms()
    if len(terms) > 1:
        head = IntPoly({terms[0][0]: terms[0][1]})
        rest = IntPoly(dict(terms[1:]))
        result = IntPoly.zero()
        for i in range(g + 1):
            left = _gen_compose(i, head)
            if left.is_zero:
                continue
            right = _gen_compose(g - i, rest)
            if right.is_zero:
                continue
            result = result + left * right
    else:
        mono, c = terms[0]
        if c != 1:
            result = _poly_compose(gamma_gen(c, g), IntPoly({mono: 1}))
        elif len(mono) == 1 and mono[0][2] == 1:
            result = universal_pij(g, mono[0][1])
        else:
            # split one generator factor off the monomial
            f0, i0, e0 = mono[0]
            m1 = IntPoly({((f0, i0, 1),): 1})
            rest_mono = ((f0, i0, e0 - 1),) + mono[1:] if e0 > 1 else mono[1:]
            m2 = IntPoly({tuple(rest_mono): 1})
            images = {}
            for i in range(1, g + 1):
                images[("x", i)] = _gen_compose(i, m1)
                images[("y", i)] = _gen_compose(i, m2)
            result = universal_pk(g).substitute(images)

    _COMPOSE_CACHE[key] = result
    return result


def _poly_compose(xpoly: IntPoly, ypoly: IntPoly) -> IntPoly:
    """Ring-map extension in the left slot: substitute L_g -> L_g o y."""
    indices = sorted({i for (f, i) in xpoly.variables() if f == "L"})
    return xpoly.substitute({("L", g): _gen_compose(g, ypoly) for g in indices})


def compose_kbu(x: KBUElem, y: KBUElem) -> KBUElem:
    """Internal composition x o y for y in the augmentation ideal.

    Generator on generator is P_{i,j}; the left argument extends as a ring
    map and the right through the coproduct relations.  Computed exactly,
    then truncated at N.
    """
    if cozero(y) != 0:
        raise NotReduced("right operand must have zero constant term")
    if x.trunc != y.trunc:
        raise ValueError("truncation levels differ")
    return KBUElem(_poly_compose(x.poly, y.poly), x.trunc)


def is_primitive(x: KBUElem) -> bool:
    """Whether Delta+(x) = x (x) 1 + 1 (x) x at the current truncation."""
    one = KBUElem.from_int(1, x.trunc)
    expected = tensor_of(x, one).poly + tensor_of(one, x).poly
    # the double-counted constant term of x (x) 1 + 1 (x) x
    expected = expected - IntPoly.const(cozero(x))
    return coadd(x).poly == expected


def psi_kbu(k: int, trunc: int) -> KBUElem:
    """The k-th Adams element: Newton power sum in the generators."""
    from .symfun import newton_psi

    return KBUElem(newton_psi(k), trunc)
