"""Tour 4: the even operation ring, its composition, and the action oracle.

An even operation is a finite sum of (function (x) ring element) pairs; in
normal form it is a table  d -> x_d  over the window, acting on an augmented
element alpha as x_{eps(alpha)} evaluated at alpha - eps(alpha).  The prime
correctness contract: composing operations agrees with composing their
actions, bit-exactly, on every registered model.
"""

import random

from lambdaops import EvenOp, act, chi, compose_even, const, gen, identity_op, register_models
from lambdaops.evenops import op_coadd, op_comult, op_counit, op_cozero
from lambdaops.intpoly import IntPoly

N, W = 4, 16
models = register_models()
print("registered models:", sorted(models))

ident = identity_op(N, W)
print("eps+ and eps-x of the identity:", op_cozero(ident), op_counit(ident))

# the identity acts as the identity
sphere = models["sphere"]
u = IntPoly.var("u", 1)
alpha = sphere.add(u, sphere.from_int(2))
print("identity on u + 2:", sphere.show(act(ident, sphere, alpha)))

# an indicator gates on the augmentation
r = EvenOp.from_pairs([(chi(2), gen(1, N))], N, W)
print("chi_2 (x) L1 on u + 2:", sphere.show(act(r, sphere, alpha)))
print("chi_2 (x) L1 on u + 1:", sphere.show(act(r, sphere, sphere.add(u, sphere.from_int(1)))))

# composition against the oracle on a random corpus
rng = random.Random(0)
fns = [chi(0), chi(1), chi(-1), const(1), const(2)]
xs = [gen(1, N), gen(2, N), gen(1, N) + 1, gen(1, N) * gen(1, N)]
corpus = [EvenOp.from_pairs([(rng.choice(fns), rng.choice(xs))], N, W) for _ in range(12)]
mismatches = 0
for _ in range(40):
    r, s = rng.choice(corpus), rng.choice(corpus)
    comp = compose_even(r, s)
    for name, m in models.items():
        for a in m.samples(random.Random(1), 3):
            if not m.eq(act(comp, m, a), act(r, m, act(s, m, a))):
                mismatches += 1
print("oracle mismatches over the corpus:", mismatches)

# coproducts mirror the action on sums and products
split = models["split:2"]
s1, s2 = split.samples(random.Random(2), 2)
r = EvenOp.from_pairs([(const(1), gen(2, N))], N, W)
print("coadd pairing == action on the sum:  ",
      split.eq(op_coadd(r).act2(split, s1, s2), act(r, split, split.add(s1, s2))))
print("comult pairing == action on the product:",
      split.eq(op_comult(r).act2(split, s1, s2), act(r, split, split.mul(s1, s2))))
