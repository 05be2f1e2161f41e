"""The even operation plethory: completed tensor of integer functions with
the truncated lambda-generator ring.

Normal form: a window-normalised operation is a table indexed by the
indicator basis, d -> x_d, meaning sum over |d| <= W of chi_d (x) x_d.  The
operation acts on an augmented lambda-ring element alpha as
x_{eps(alpha)} evaluated at alpha - eps(alpha); anything that would need an
augmentation outside the window raises instead of silently truncating.
"""

from __future__ import annotations

from .errors import NotNormalised, WindowExhausted
from .intpoly import IntPoly
from .kbu import KBUElem, colinear, compose_kbu, cozero, coadd_image, comult_image, coadd_multi
from .models import LambdaRingModel, poly_eval_in_model
from .setzz import FnZZ, FnChi, FnCompose, const

DEFAULT_WINDOW = 16


def divisor_pairs(d: int, W: int) -> list[tuple[int, int]]:
    """All (r, s) with r*s = d and |r|, |s| <= W; for d = 0 the window-bounded
    family (0, s) and (r, 0)."""
    if d == 0:
        out = [(0, s) for s in range(-W, W + 1)]
        out += [(r, 0) for r in range(-W, W + 1) if r != 0]
        return out
    if abs(d) > W:
        # the pair (1, d) already leaves the window
        raise WindowExhausted(f"a divisor pair of {d} leaves the window [{-W}, {W}]")
    out = []
    for r in range(1, abs(d) + 1):
        if d % r == 0:
            out.append((r, d // r))
            out.append((-r, -(d // r)))
    return out


class EvenOp:
    """Finite sum of (function, ring element) pairs at truncation N, window W."""

    __slots__ = ("table", "trunc", "window", "normalised", "raw_pairs")

    def __init__(self, table: dict[int, KBUElem], trunc: int, window: int):
        self.table = {d: x for d, x in table.items() if not x.is_zero}
        self.trunc = trunc
        self.window = window
        self.normalised = True
        self.raw_pairs = None

    @staticmethod
    def from_pairs(pairs, trunc: int, window: int, normalise: bool = True) -> "EvenOp":
        """Build from raw (FnZZ, KBUElem) summands.

        With normalise=True the left factors are expanded in the indicator
        basis over the window and grouped; otherwise the raw summands are kept
        and the operation is unusable until normalised.
        """
        if not normalise:
            op = EvenOp({}, trunc, window)
            op.normalised = False
            op.raw_pairs = list(pairs)
            return op
        table: dict[int, KBUElem] = {}
        for f, x in pairs:
            if isinstance(x, int):
                x = KBUElem.from_int(x, trunc)
            for d in range(-window, window + 1):
                v = f.ev(d)
                if v:
                    cur = table.get(d)
                    table[d] = v * x if cur is None else cur + v * x
        return EvenOp(table, trunc, window)

    def normalise(self) -> "EvenOp":
        if self.normalised:
            return self
        return EvenOp.from_pairs(self.raw_pairs, self.trunc, self.window)

    def _require_normal(self):
        if not self.normalised:
            raise NotNormalised("operation is not in indicator normal form")

    def _match(self, other: "EvenOp"):
        if self.trunc != other.trunc or self.window != other.window:
            raise ValueError("operations live at different (trunc, window)")

    def component(self, d: int) -> KBUElem:
        self._require_normal()
        if abs(d) > self.window:
            raise WindowExhausted(f"index {d} outside window {self.window}")
        return self.table.get(d, KBUElem.from_int(0, self.trunc))

    def __add__(self, other):
        self._require_normal()
        other._require_normal()
        self._match(other)
        out = dict(self.table)
        for d, x in other.table.items():
            out[d] = out[d] + x if d in out else x
        return EvenOp(out, self.trunc, self.window)

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, other):
        self._require_normal()
        if isinstance(other, int):
            return EvenOp({d: other * x for d, x in self.table.items()},
                          self.trunc, self.window)
        other._require_normal()
        self._match(other)
        out = {}
        for d, x in self.table.items():
            if d in other.table:
                out[d] = x * other.table[d]
        return EvenOp(out, self.trunc, self.window)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, EvenOp)
            and self.normalised
            and other.normalised
            and (self.trunc, self.window) == (other.trunc, other.window)
            and self.table == other.table
        )

    @property
    def is_zero(self):
        return self.normalised and not self.table

    def __str__(self):
        self._require_normal()
        if not self.table:
            return "0"
        return " + ".join(f"chi({d})(x)({self.table[d]})" for d in sorted(self.table))

    __repr__ = __str__

    def to_obj(self):
        self._require_normal()
        return {
            "trunc": self.trunc,
            "window": self.window,
            "summands": [
                [f"chi({d})", self.table[d].poly.to_obj()] for d in sorted(self.table)
            ],
        }


def unit_op(trunc: int, window: int) -> EvenOp:
    """The multiplicative unit 1 (x) 1."""
    return EvenOp.from_pairs([(const(1), KBUElem.from_int(1, trunc))], trunc, window)


def identity_op(trunc: int, window: int) -> EvenOp:
    """The composition identity: 1 (x) L1 + iota (x) 1."""
    from .kbu import gen
    from .setzz import IDENT

    return EvenOp.from_pairs(
        [(const(1), gen(1, trunc)), (IDENT, KBUElem.from_int(1, trunc))],
        trunc,
        window,
    )


def op_cozero(r: EvenOp) -> int:
    """eps+: evaluate the function leg at 0 and kill the generators."""
    r._require_normal()
    return cozero(r.component(0))


def op_counit(r: EvenOp) -> int:
    """eps-x: evaluate the function leg at 1 and take the constant term."""
    r._require_normal()
    return cozero(r.component(1))


def act(r: EvenOp, model: LambdaRingModel, alpha):
    """Apply the operation to a model element:
    x_{eps(alpha)} with generators L_k replaced by lambda^k(alpha - eps(alpha)).
    """
    r._require_normal()
    e = model.eps(alpha)
    if abs(e) > r.window:
        raise WindowExhausted(f"augmentation {e} outside window {r.window}")
    x = r.table.get(e)
    if x is None:
        return model.from_int(0)
    reduced = model.sub(alpha, model.from_int(e))
    indices = sorted({i for (f, i) in x.poly.variables() if f == "L"})
    assign = {("L", k): model.lam(k, reduced) for k in indices}
    return poly_eval_in_model(x.poly, model, assign)


# -- coalgebra structure -------------------------------------------------------


class EvenOpTensor:
    """Two-leg tensor of even operations: entries ((i, j) -> polynomial in the
    leg families T1/T2) meaning sum of (chi_i (x) T1-part) (x) (chi_j (x) T2-part).
    """

    __slots__ = ("entries", "trunc", "window")

    def __init__(self, entries: dict[tuple[int, int], IntPoly], trunc: int, window: int):
        self.entries = {}
        for key, poly in entries.items():
            poly = poly.truncate_family("T1", trunc).truncate_family("T2", trunc)
            if not poly.is_zero:
                self.entries[key] = poly
        self.trunc = trunc
        self.window = window

    def __eq__(self, other):
        return (
            isinstance(other, EvenOpTensor)
            and (self.trunc, self.window) == (other.trunc, other.window)
            and self.entries == other.entries
        )

    def equal_within_reach(self, other: "EvenOpTensor", reach) -> bool:
        """Compare entries only on index pairs accepted by `reach`; the window
        section of the completed coproduct is only faithful there."""
        keys = set(self.entries) | set(other.entries)
        zero = IntPoly.zero()
        return all(
            self.entries.get(k, zero) == other.entries.get(k, zero)
            for k in keys
            if reach(*k)
        )

    def act2(self, model: LambdaRingModel, alpha, beta):
        """Pair the tensor against two model elements (product in the model)."""
        ea, eb = model.eps(alpha), model.eps(beta)
        if abs(ea) > self.window or abs(eb) > self.window:
            raise WindowExhausted(
                f"augmentations ({ea}, {eb}) outside window {self.window}"
            )
        poly = self.entries.get((ea, eb))
        if poly is None:
            return model.from_int(0)
        ra = model.sub(alpha, model.from_int(ea))
        rb = model.sub(beta, model.from_int(eb))
        assign = {}
        for (f, i) in poly.variables():
            assign[(f, i)] = model.lam(i, ra if f == "T1" else rb)
        return poly_eval_in_model(poly, model, assign)


def tensor_of_ops(r: EvenOp, s: EvenOp) -> EvenOpTensor:
    r._require_normal()
    s._require_normal()
    entries = {}
    for i, x in r.table.items():
        for j, y in s.table.items():
            poly = x.poly.rename_family("L", "T1") * y.poly.rename_family("L", "T2")
            if not poly.is_zero:
                entries[(i, j)] = poly
    return EvenOpTensor(entries, r.trunc, r.window)


def op_coadd(r: EvenOp) -> EvenOpTensor:
    """Co-addition: the function leg dualises addition of augmentations and
    the ring leg coadds; entry (i, j) is Delta+(x_{i+j})."""
    r._require_normal()
    W = r.window
    entries: dict[tuple[int, int], IntPoly] = {}
    for d, x in r.table.items():
        indices = sorted({k for (f, k) in x.poly.variables() if f == "L"})
        two_leg = x.poly.substitute({("L", k): coadd_image(k) for k in indices})
        for i in range(-W, W + 1):
            j = d - i
            if abs(j) <= W:
                entries[(i, j)] = entries.get((i, j), IntPoly.zero()) + two_leg
    return EvenOpTensor(entries, r.trunc, r.window)


def op_is_primitive(r: EvenOp) -> bool:
    """Delta+(r) = r (x) 1 + 1 (x) r, compared where the window is faithful
    (index pairs whose sum stays inside the window)."""
    one = unit_op(r.trunc, r.window)
    left = tensor_of_ops(r, one).entries
    right = tensor_of_ops(one, r).entries
    expected = EvenOpTensor(
        {
            k: left.get(k, IntPoly.zero()) + right.get(k, IntPoly.zero())
            for k in set(left) | set(right)
        },
        r.trunc,
        r.window,
    )
    W = r.window
    return op_coadd(r).equal_within_reach(expected, lambda i, j: abs(i + j) <= W)


def op_comult(r: EvenOp) -> EvenOpTensor:
    """Co-multiplication via the unitalised-biring formula: for each summand
    chi_d (x) b, sum over divisor pairs r*s = d of
    chi_r (x) b(1)[1] gamma(s)(b(2))  (x)  chi_s (x) b(1)[2] gamma(r)(b(3)),
    where (1)(2)(3) is iterated co-addition and [1][2] co-multiplication.
    """
    r._require_normal()
    W = r.window
    entries: dict[tuple[int, int], IntPoly] = {}
    for d, x in r.table.items():
        three = coadd_multi(x, 3)  # families T1, T2, T3
        indices = sorted({k for (f, k) in three.variables() if f == "T1"})
        four = three.substitute({("T1", k): comult_image(k, "U", "V") for k in indices})
        for mono, c in four.terms.items():
            u_part, v_part, t2_part, t3_part = [], [], [], []
            for (f, i, e) in mono:
                {"U": u_part, "V": v_part, "T2": t2_part, "T3": t3_part}[f].append((("L", i, e)))
            u_poly = IntPoly({tuple(u_part): 1})
            v_poly = IntPoly({tuple(v_part): 1})
            t2_elem = KBUElem(IntPoly({tuple(t2_part): 1}), r.trunc)
            t3_elem = KBUElem(IntPoly({tuple(t3_part): 1}), r.trunc)
            for rho, s in divisor_pairs(d, W):
                left = (u_poly * colinear(s, t2_elem).poly).rename_family("L", "T1")
                right = (v_poly * colinear(rho, t3_elem).poly).rename_family("L", "T2")
                prod = left * right * c
                if prod.is_zero:
                    continue
                key = (rho, s)
                entries[key] = entries.get(key, IntPoly.zero()) + prod
    return EvenOpTensor(entries, r.trunc, r.window)


# -- composition ----------------------------------------------------------------


def compose_even_pair(r: EvenOp, g: FnZZ, y: KBUElem) -> EvenOp:
    """Literal element formula against a single right summand g (x) y:

    (chi_d (x) x) o (g (x) y)
        = sum over r*s = d of chi_r(eps+(y)) (chi_s o g) (x) gamma(s)(x) o (y - eps+(y)),

    extended additively over the left summands.
    """
    r._require_normal()
    W = r.window
    c = cozero(y)
    if abs(c) > W:
        raise WindowExhausted(f"right augmentation {c} outside window {W}")
    ybar = y.reduced()
    pairs = []
    for d, x in r.table.items():
        for rho, s in divisor_pairs(d, W):
            if rho != c:  # chi_rho(eps+(y)) is a Kronecker delta
                continue
            fn_part = FnCompose(FnChi(s), g)
            kbu_part = compose_kbu(colinear(s, x), ybar)
            if not kbu_part.is_zero:
                pairs.append((fn_part, kbu_part))
    return EvenOp.from_pairs(pairs, r.trunc, r.window)


def compose_even(r: EvenOp, s: EvenOp) -> EvenOp:
    """Composition of window-normalised operations.

    Composition is additive on the left but not on the right; across the
    right-hand indicator decomposition the coproduct relations collapse
    (distinct indicators are orthogonal idempotents), leaving per-component
    compositions: the output component at a is x_{c_a} o (y_a - c_a) with
    c_a = eps+(y_a).  Each component agrees with the literal single-summand
    formula of compose_even_pair projected to its own indicator.
    """
    r._require_normal()
    s._require_normal()
    r._match(s)
    W = r.window
    zero = KBUElem.from_int(0, r.trunc)
    table = {}
    for a in range(-W, W + 1):
        y_a = s.table.get(a, zero)
        c_a = cozero(y_a)
        if abs(c_a) > W:
            raise WindowExhausted(f"augmentation {c_a} outside window {W}")
        x = r.table.get(c_a)
        if x is None:
            continue
        z_a = compose_kbu(x, y_a - c_a)
        if not z_a.is_zero:
            table[a] = z_a
    return EvenOp(table, r.trunc, r.window)
