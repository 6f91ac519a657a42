"""
Vanishing loci in the Ziegler spectrum
======================================

The points are Z/p^n, the p-adic integers A(p), the Prufer groups P(p) and
the rationals Q.  A functor vanishes on a closed set that is read off from
its Hilbert function and the supports of its two defects.
"""

from fpfunctors.functors import forgetful, hom_functor, simple_functor, tensor_functor
from fpfunctors.modules import FPModule
from fpfunctors.ziegler import (
    Adic,
    ClosedSet,
    Finite,
    PrimeSet,
    Prufer,
    is_closed,
    serre_member,
    vanishing_locus,
)

for name, G in [
    ("S_3,2", simple_functor(3, 2)),
    ("Hom(Z/2,-)", hom_functor(FPModule.cyclic(2))),
    ("Z/2 (x) -", tensor_functor(FPModule.cyclic(2))),
    ("forgetful", forgetful()),
]:
    V = vanishing_locus(G)
    print(f"--- {name}  (closed: {is_closed(V)})")
    print(V.describe())

V = vanishing_locus(tensor_functor(FPModule.cyclic(2)))
print("A(2) in V:", Adic(2) in V, " P(2) in V:", Prufer(2) in V, " F(3,4) in V:", Finite(3, 4) in V)

# {A(2)} alone is not closed: its closure contains Q
print("{A(2)} closed:", is_closed(ClosedSet(a=PrimeSet.finite([2]))))

# functors vanishing on every adic and Prufer point and on Q
X = ClosedSet(True, PrimeSet.all_except(), PrimeSet.all_except(), "none")
for name, G in [("S_2,1", simple_functor(2, 1)), ("forgetful", forgetful())]:
    print(f"{name} vanishes on X: {serre_member(G, X)}")
