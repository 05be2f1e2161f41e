"""Lambda-ring action oracles and the finite-rank unitary-group models.

Each registered model carries exact arithmetic, an augmentation eps, and a
lambda rule computed independently of the universal polynomials: elements
are decomposed into formal line classes and lambda_t is read off the product
of the line series.  This makes the models usable as ground truth against
everything built from P_k and P_{i,j}.
"""

from __future__ import annotations

import random

from .errors import (
    IndexOutOfRange,
    ModelTruncationExceeded,
    RankUnderflow,
    RegistrationFailure,
)
from .exterior import ExtElem
from .intpoly import IntPoly
from .setzz import COIFamily, IntegerRing, coi_add, coi_mul
from .symfun import lambda_of_integer, universal_pij, universal_pk


class LambdaRingModel:
    """Exact lambda-ring with augmentation; subclasses fix the carrier."""

    name = "model"
    max_lambda: int | None = None

    def from_int(self, n: int):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def eq(self, a, b) -> bool:
        return a == b

    def eps(self, a) -> int:
        raise NotImplementedError

    def lam(self, k: int, a):
        raise NotImplementedError

    def samples(self, rng: random.Random, count: int) -> list:
        raise NotImplementedError

    def show(self, a) -> str:
        return str(a)

    def _check_order(self, k: int):
        if self.max_lambda is not None and k > self.max_lambda:
            raise ModelTruncationExceeded(
                f"model {self.name} supplies lambda^k only for k <= {self.max_lambda}"
            )


class IntegerModel(LambdaRingModel):
    """The integers with eps = id and lambda^k = binomial coefficients."""

    name = "zz"

    def from_int(self, n):
        return n

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def eps(self, a):
        return a

    def lam(self, k, a):
        self._check_order(k)
        return lambda_of_integer(a, k)

    def samples(self, rng, count):
        return [rng.randint(-4, 4) for _ in range(count)]


class LineClassModel(LambdaRingModel):
    """Carrier whose elements decompose into integer combinations of line
    classes; lambda_t(sum n_i C_i) = prod (1 + C_i t)^{n_i} with the binomial
    series for negative multiplicities.
    """

    def _reduce(self, p: IntPoly) -> IntPoly:
        return p

    def _line_decomposition(self, a: IntPoly) -> list[tuple[IntPoly, int]]:
        raise NotImplementedError

    def from_int(self, n):
        return IntPoly.const(n)

    def add(self, a, b):
        return self._reduce(a + b)

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return self._reduce(a * b)

    def lam(self, k, a):
        self._check_order(k)
        series = [IntPoly.one()] + [IntPoly.zero() for _ in range(k)]
        for cls, mult in self._line_decomposition(a):
            powers = [IntPoly.one()]
            for _ in range(k):
                powers.append(self._reduce(powers[-1] * cls))
            factor = [IntPoly.const(lambda_of_integer(mult, i)) * powers[i] for i in range(k + 1)]
            nxt = [IntPoly.zero() for _ in range(k + 1)]
            for i in range(k + 1):
                if series[i].is_zero:
                    continue
                for j in range(k + 1 - i):
                    if factor[j].is_zero:
                        continue
                    nxt[i + j] = nxt[i + j] + self._reduce(series[i] * factor[j])
            series = nxt
        return series[k]

    def psi(self, k: int, a: IntPoly) -> IntPoly:
        """Adams value from the line decomposition: sum of n_i C_i^k."""
        out = IntPoly.zero()
        for cls, mult in self._line_decomposition(a):
            p = IntPoly.one()
            for _ in range(k):
                p = self._reduce(p * cls)
            out = out + mult * p
        return self._reduce(out)


class SplitModel(LineClassModel):
    """Polynomials in m line variables; every monomial is a line class."""

    def __init__(self, m: int):
        self.m = m
        self.name = f"split:{m}"

    def _line_decomposition(self, a):
        return [(IntPoly({mono: 1}), c) for mono, c in a.terms.items()]

    def eps(self, a):
        return a.evaluate({("x", i): 1 for i in range(1, self.m + 1)})

    def samples(self, rng, count):
        out = []
        while len(out) < count:
            n_terms = rng.randint(1, 3)
            p = IntPoly.zero()
            for _ in range(n_terms):
                mono = IntPoly.one()
                for i in range(1, self.m + 1):
                    e = rng.choice([0, 0, 1, 1, 2])
                    if e:
                        mono = mono * IntPoly.var("x", i, e)
                p = p + rng.choice([-2, -1, 1, 1, 2]) * mono
            if abs(self.eps(p)) <= 6:
                out.append(p)
        return out

    def show(self, a):
        return str(a)


class ProjectiveModel(LineClassModel):
    """Z[u]/(u^(m+1)) with u the reduced class of a line; lambda is induced
    by rewriting elements in the basis of powers of the line class 1 + u.
    """

    def __init__(self, m: int, name: str | None = None):
        self.m = m
        self.name = name or f"cp:{m}"

    def _reduce(self, p: IntPoly):
        def udeg(mono):
            return sum(e for (f, _, e) in mono if f == "u")

        return IntPoly({m: c for m, c in p.terms.items() if udeg(m) <= self.m})

    def _xi_power(self, j: int) -> IntPoly:
        # (1 + u)^j truncated at u^(m+1)
        out = IntPoly.one()
        for i in range(1, min(j, self.m) + 1):
            out = out + lambda_of_integer(j, i) * IntPoly.var("u", 1, i)
        return out

    def _line_decomposition(self, a):
        coeffs = [0] * (self.m + 1)
        for mono, c in a.terms.items():
            if not mono:
                coeffs[0] = c
            else:
                coeffs[mono[0][2]] = c
        # u^i = (xi - 1)^i  =>  multiplicity of xi^j is sum_i a_i C(i, j) (-1)^(i-j)
        out = []
        for j in range(self.m + 1):
            n_j = sum(
                coeffs[i] * lambda_of_integer(i, j) * (-1) ** (i - j)
                for i in range(j, self.m + 1)
            )
            if n_j:
                out.append((self._xi_power(j), n_j))
        return out

    def eps(self, a):
        return a.constant_term()

    def samples(self, rng, count):
        out = []
        for _ in range(count):
            p = IntPoly.const(rng.randint(-3, 3))
            for i in range(1, self.m + 1):
                c = rng.randint(-2, 2)
                if c:
                    p = p + c * IntPoly.var("u", 1, i)
            out.append(p)
        return out

    def show(self, a):
        return str(a).replace("u1", "u")


class COIModel(LambdaRingModel):
    """Orthogonal-idempotent families over the integers; since Z has no zero
    divisors every valid family is a single delta_d, and the model is the
    integers wearing the functor-of-points arithmetic.
    """

    name = "coi"

    def __init__(self):
        self.ring = IntegerRing()

    def from_int(self, n):
        return COIFamily.delta(self.ring, n)

    def add(self, a, b):
        return coi_add(a, b)

    def neg(self, a):
        return COIFamily.delta(self.ring, -a.delta_index())

    def mul(self, a, b):
        return coi_mul(a, b)

    def eps(self, a):
        return a.delta_index()

    def lam(self, k, a):
        self._check_order(k)
        return COIFamily.delta(self.ring, lambda_of_integer(a.delta_index(), k))

    def samples(self, rng, count):
        return [COIFamily.delta(self.ring, rng.randint(-4, 4)) for _ in range(count)]


def model_psi(model: LambdaRingModel, k: int, a):
    """Adams value via Newton's identities over the model's lambda values."""
    if isinstance(model, LineClassModel):
        return model.psi(k, a)
    lams = [model.from_int(1)] + [model.lam(i, a) for i in range(1, k + 1)]
    psis = [None] * (k + 1)
    for n in range(1, k + 1):
        acc = model.from_int(0)
        for i in range(1, n):
            term = model.mul(lams[i], psis[n - i])
            acc = model.add(acc, term if i % 2 == 1 else model.neg(term))
        last = model.mul(model.from_int(n), lams[n])
        psis[n] = model.add(acc, last if n % 2 == 1 else model.neg(last))
    return psis[k]


def poly_eval_in_model(poly: IntPoly, model: LambdaRingModel, assign: dict):
    """Evaluate an integer polynomial with carrier values for its variables."""
    total = model.from_int(0)
    for mono, c in poly.terms.items():
        acc = model.from_int(c)
        for (f, i, e) in mono:
            for _ in range(e):
                acc = model.mul(acc, assign[(f, i)])
        total = model.add(total, acc)
    return total


def validate_model(model: LambdaRingModel, max_k: int = 4, pairs: int = 6,
                   pij_bound: int = 4, rng: random.Random | None = None):
    """Axiom suite: lambda^0 = 1, lambda^1 = id, the sum rule, the product
    rule through P_k and the composition rule through P_{i,j}, all bit-exact
    on sampled elements.  Raises RegistrationFailure naming the axiom.
    """
    rng = rng or random.Random(7)
    elems = model.samples(rng, max(2 * pairs, 4))

    def fail(axiom, detail):
        raise RegistrationFailure(f"model {model.name}: {axiom}: {detail}")

    one = model.from_int(1)
    for a in elems:
        if not model.eq(model.lam(0, a), one):
            fail("lambda^0 = 1", model.show(a))
        if not model.eq(model.lam(1, a), a):
            fail("lambda^1 = id", model.show(a))
        if model.eps(model.lam(2, a)) != lambda_of_integer(model.eps(a), 2):
            fail("eps compatibility", model.show(a))

    for t in range(pairs):
        a, b = elems[2 * t], elems[2 * t + 1]
        for k in range(1, max_k + 1):
            lhs = model.lam(k, model.add(a, b))
            rhs = model.from_int(0)
            for i in range(k + 1):
                rhs = model.add(rhs, model.mul(model.lam(i, a), model.lam(k - i, b)))
            if not model.eq(lhs, rhs):
                fail(f"sum rule k={k}", f"{model.show(a)}, {model.show(b)}")
            assign = {("x", i): model.lam(i, a) for i in range(1, k + 1)}
            assign |= {("y", j): model.lam(j, b) for j in range(1, k + 1)}
            rhs = poly_eval_in_model(universal_pk(k), model, assign)
            if not model.eq(model.lam(k, model.mul(a, b)), rhs):
                fail(f"product rule k={k}", f"{model.show(a)}, {model.show(b)}")
        for i in range(1, pij_bound + 1):
            for j in range(1, pij_bound + 1):
                if i * j > pij_bound:
                    continue
                assign = {("L", m): model.lam(m, a) for m in range(1, i * j + 1)}
                rhs = poly_eval_in_model(universal_pij(i, j), model, assign)
                if not model.eq(model.lam(i, model.lam(j, a)), rhs):
                    fail(f"composition rule ({i},{j})", model.show(a))


def register_models(validate: bool = True, max_k: int = 4,
                    rng: random.Random | None = None) -> dict[str, LambdaRingModel]:
    """Build the standard model family, optionally running the axiom suite."""
    models: dict[str, LambdaRingModel] = {}
    for model in (
        IntegerModel(),
        ProjectiveModel(1, name="sphere"),
        ProjectiveModel(2),
        ProjectiveModel(3),
        SplitModel(2),
        SplitModel(3),
        COIModel(),
    ):
        if validate:
            validate_model(model, max_k=max_k, rng=rng)
        models[model.name] = model
    return models


def get_model(selector: str) -> LambdaRingModel:
    """Resolve a CLI selector such as 'sphere', 'cp:3' or 'split:4'."""
    if selector == "zz":
        return IntegerModel()
    if selector == "sphere":
        return ProjectiveModel(1, name="sphere")
    if selector == "coi":
        return COIModel()
    if selector.startswith("cp:"):
        return ProjectiveModel(int(selector.split(":", 1)[1]))
    if selector.startswith("split:"):
        return SplitModel(int(selector.split(":", 1)[1]))
    raise ValueError(f"unknown model selector: {selector}")


# -- finite-rank unitary and classifying-space models -------------------------


class UnElem:
    """Exterior-algebra element over Z on mu^1..mu^n at rank n."""

    __slots__ = ("rank", "ext")

    def __init__(self, rank: int, ext: ExtElem):
        if rank < 1:
            raise RankUnderflow("rank must be >= 1")
        self.rank = rank
        self.ext = ext.truncate(rank)

    def __add__(self, other):
        self._same(other)
        return UnElem(self.rank, self.ext + other.ext)

    def __sub__(self, other):
        self._same(other)
        return UnElem(self.rank, self.ext - other.ext)

    def __mul__(self, other):
        if isinstance(other, int):
            return UnElem(self.rank, self.ext * other)
        self._same(other)
        return UnElem(self.rank, self.ext * other.ext)

    __rmul__ = __mul__

    def _same(self, other):
        if self.rank != other.rank:
            raise IndexOutOfRange("rank mismatch")

    def __eq__(self, other):
        return isinstance(other, UnElem) and self.rank == other.rank and self.ext == other.ext

    def __str__(self):
        return self.ext.render("mu")

    __repr__ = __str__


def un_mu(n: int, k: int) -> UnElem:
    """The generator mu^k at rank n."""
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"mu^{k} undefined at rank {n}")
    return UnElem(n, ExtElem.generator(k))


def un_one(n: int) -> UnElem:
    return UnElem(n, ExtElem.unit(1))


def un_restrict(x: UnElem) -> UnElem:
    """Restriction along the standard inclusion of the rank below:
    mu^k maps to mu^k + mu^(k-1), with mu^0 = 0 and indices above the target
    rank dropped; extended as an algebra map.
    """
    if x.rank < 2:
        raise RankUnderflow("cannot restrict below rank 1")
    target = x.rank - 1

    def image(k: int) -> ExtElem:
        out = ExtElem()
        if k <= target:
            out = out + ExtElem.generator(k)
        if 1 <= k - 1 <= target:
            out = out + ExtElem.generator(k - 1)
        return out

    total = ExtElem()
    for mono, c in x.ext.terms.items():
        acc = ExtElem.unit(c)
        for idx in mono:
            acc = acc * image(idx)
        total = total + acc
    return UnElem(target, total)


def lk_from_mu(n: int, k: int) -> UnElem:
    """l^k at rank n: sum over i < k of C(-n, i) mu^(k-i)."""
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"l^{k} undefined at rank {n}")
    total = ExtElem()
    for i in range(k):
        total = total + lambda_of_integer(-n, i) * ExtElem.generator(k - i)
    return UnElem(n, total)


class BUnElem:
    """Polynomial over Z in beta^1..beta^n at rank n."""

    __slots__ = ("rank", "poly")

    def __init__(self, rank: int, poly: IntPoly):
        if rank < 1:
            raise RankUnderflow("rank must be >= 1")
        self.rank = rank
        self.poly = poly.truncate_family("B", rank)

    def __add__(self, other):
        self._same(other)
        return BUnElem(self.rank, self.poly + other.poly)

    def __sub__(self, other):
        self._same(other)
        return BUnElem(self.rank, self.poly - other.poly)

    def __mul__(self, other):
        if isinstance(other, int):
            return BUnElem(self.rank, self.poly * other)
        self._same(other)
        return BUnElem(self.rank, self.poly * other.poly)

    __rmul__ = __mul__

    def _same(self, other):
        if self.rank != other.rank:
            raise IndexOutOfRange("rank mismatch")

    def __eq__(self, other):
        return isinstance(other, BUnElem) and self.rank == other.rank and self.poly == other.poly

    def __str__(self):
        return str(self.poly)

    __repr__ = __str__


def bun_beta(n: int, k: int) -> BUnElem:
    """beta^k at rank n (beta^0 = 1)."""
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"beta^{k} undefined at rank {n}")
    if k == 0:
        return BUnElem(n, IntPoly.one())
    return BUnElem(n, IntPoly.var("B", k))


def bun_restrict(x: BUnElem) -> BUnElem:
    """Restriction from rank n+1 to rank n: beta^k maps to beta^k + beta^(k-1)
    with beta^0 = 1 and beta^k = 0 above the target rank."""
    if x.rank < 2:
        raise RankUnderflow("cannot restrict below rank 1")
    target = x.rank - 1

    def image(k: int) -> IntPoly:
        out = IntPoly.zero()
        if k <= target:
            out = out + IntPoly.var("B", k)
        if k == 1:
            out = out + IntPoly.one()
        elif k - 1 <= target:
            out = out + IntPoly.var("B", k - 1)
        return out

    indices = sorted({i for (f, i) in x.poly.variables() if f == "B"})
    poly = x.poly.substitute({("B", k): image(k) for k in indices})
    return BUnElem(target, poly)


def lambdak_from_beta(n: int, k: int) -> BUnElem:
    """lambda^k at rank n: sum over i <= k of C(-n, i) beta^(k-i)."""
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"lambda^{k} undefined at rank {n}")
    total = IntPoly.zero()
    for i in range(k + 1):
        c = lambda_of_integer(-n, i)
        total = total + (c * IntPoly.one() if k - i == 0 else c * IntPoly.var("B", k - i))
    return BUnElem(n, total)
