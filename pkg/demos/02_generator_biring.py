"""Tour 2: the truncated generator ring and its structure maps.

Elements are polynomials in the generators L1, L2, ... up to a truncation
level N; generators above N are set to zero.  Co-addition describes how an
operation behaves on sums, co-multiplication on products, the antipode on
negatives, and the co-linear maps on integer multiples.  Internal
composition makes the generators into a monoid.
"""

from lambdaops import antipode, coadd, colinear, compose_kbu, comult, cozero, gen
from lambdaops.kbu import KBUElem, psi_kbu

N = 6
L1, L2, L3 = gen(1, N), gen(2, N), gen(3, N)

print("co-addition of L2:       ", coadd(L2))
print("co-multiplication of L2: ", comult(L2))
print("augmentation of 1 + 3 L1:", cozero(KBUElem.from_int(1, N) + 3 * L1))

# the antipode satisfies the convolution recursion and is an involution
print("antipode of L2:", antipode(L2))
print("antipode twice: ", antipode(antipode(L3)) == L3)

# gamma(k) is precomposition with multiplication by k; gamma(-1) is the antipode
print("gamma(-1) on L3 == antipode:", colinear(-1, L3) == antipode(L3))
print("gamma(0) kills generators:  ", colinear(0, L2).is_zero)

# composition: generator on generator is a composition polynomial, truncated
print("L2 o L2 at N=6:", compose_kbu(L2, L2))
print("L2 o L2 at N=3:", compose_kbu(gen(2, 3), gen(2, 3)))

# the Adams elements compose multiplicatively in the index — a strong
# end-to-end check on the composition recursion
p2, p3 = psi_kbu(2, 9), psi_kbu(3, 9)
print("psi2 o psi3 == psi6:", compose_kbu(p2, p3) == psi_kbu(6, 9))
print("psi3 o psi3 == psi9:", compose_kbu(p3, p3) == psi_kbu(9, 9))
