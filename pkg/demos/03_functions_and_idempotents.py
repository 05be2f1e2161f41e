"""Tour 3: integer functions as operations, windows, and the
orthogonal-idempotent picture of their points.

A total function Z -> Z is an expression tree; equality is only decidable
after restricting to a window [-W, W], which is the computable section of
the completed object.  Its functor of points is the ring of complete
orthogonal idempotent families, where addition and multiplication become
index convolutions.
"""

from lambdaops import (
    chi,
    coi_add,
    coi_mul,
    fn_coadd,
    fn_compose,
    fn_comult,
    fn_counit,
    fn_cozero,
    fn_window_normalise,
)
from lambdaops.setzz import COIFamily, IDENT, IntegerRing, ModRing, Window, fn_window_pairs

w = Window(4)

# indicator functions and composition
f = fn_compose(chi(1), IDENT)
print("chi_1(id(n)) at 1 and 2:", f.ev(1), f.ev(2))

# window normalisation writes any function in the indicator basis
print("id on [-2, 2]:", fn_window_pairs(IDENT, Window(2)))
print("normalised id:", fn_window_normalise(IDENT, Window(2)).serialise())

# the two counits: evaluation at 0 and at 1
print("eps+ and eps-x of chi_0:", fn_cozero(chi(0)), fn_counit(chi(0)))

# co-addition dualises addition: the table evaluates to f(a+b)
t = fn_coadd(chi(0), w)
print("coadd(chi_0) at (1, -1):", t.eval_at(1, -1))
t2 = fn_comult(chi(4), w)
print("comult(chi_4) support:", t2.support())

# orthogonal idempotents: over Z/6 the unit splits as 3 + 4, so families
# need not be concentrated at one index
mod6 = ModRing(6)
a = COIFamily(mod6, {2: 3, -1: 4})
b = COIFamily(mod6, {0: 3, 1: 4})
print("family a:", a, " family b:", b)
print("a + b:", coi_add(a, b))
print("a * b:", coi_mul(a, b))

# over the integers every family collapses to a single delta, and the
# convolution arithmetic is ordinary integer arithmetic in disguise
zz = IntegerRing()
print("delta_3 + delta_-5:", coi_add(COIFamily.delta(zz, 3), COIFamily.delta(zz, -5)))
print("delta_3 * delta_-5:", coi_mul(COIFamily.delta(zz, 3), COIFamily.delta(zz, -5)))
