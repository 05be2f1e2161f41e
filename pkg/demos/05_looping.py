"""Tour 5: looping between the even and odd parts.

Looping sends an even operation to an odd exterior class (keeping only the
generator-linear part over the zero indicator) and an odd generator back to
an even operation built from the alternating left-linearised polynomial.
It kills decomposables, lands in primitives, respects composition, and
exchanges the two identities.
"""

from lambdaops import (
    EvenOp,
    augmentation_view,
    check_looping_axioms,
    chi,
    compose_odd,
    const,
    gen,
    identity_op,
    lgen,
    loop_even,
    loop_odd,
    main_relations_check,
)
from lambdaops.kbu import psi_kbu

N, W = 5, 16

# looping the generators
for k in (1, 2, 3):
    r = EvenOp.from_pairs([(const(1), gen(k, N))], N, W)
    print(f"loop(1 (x) L{k}) =", loop_even(r))

# the function leg only matters through its value at 0
print("loop(chi_3 (x) L1) =", loop_even(EvenOp.from_pairs([(chi(3), gen(1, N))], N, W)))

# back down: the odd generators loop onto signed Adams elements
print("loop(l1) components all equal:", loop_odd(lgen(1, N), W).component(0))
print("loop(l2) at index 0:          ", loop_odd(lgen(2, N), W).component(0))
print("which is -psi_2:              ", -1 * psi_kbu(2, N))

# odd composition through the linear parts of the composition polynomials
print("l2 o l2 =", compose_odd(lgen(2, N), lgen(2, N)))
print("l1 o l3 =", compose_odd(lgen(1, N), lgen(3, N)))

# the identities exchange under looping
print("loop(identity) == l1:", loop_even(identity_op(N, W)) == lgen(1, N))

# primitives and indecomposables per parity
view = augmentation_view("even", N, W)
lam2 = EvenOp.from_pairs([(const(1), gen(2, N))], N, W)
print("L2 class: in augmentation ideal:", view.in_ip(lam2),
      "| primitive:", view.is_primitive(lam2))
print("number of verified Newton primitives:", len(view.primitives))

# the full axiom suite and the main relations
rep = check_looping_axioms(4, 8)
print("looping axioms:", {k: v["pass"] for k, v in rep["axioms"].items()})
rep2 = main_relations_check(4, 4, 8)
print("main relations pass:", rep2["pass"])
