"""
Module classes and Hilbert functions
====================================

The class of a functor records a rank and signed multiplicities of the
summands Z/p^l.  The Hilbert function at (p, n) is the length of the functor
evaluated at Z/p^n, and the class predicts it without evaluating anything.
"""

from fpfunctors.functors import forgetful, hom_functor, simple_functor
from fpfunctors.invariants import hilbert_direct, hilbert_polynomial, hilbert_value, lmc, rmc
from fpfunctors.modules import FPModule

examples = {
    "forgetful": forgetful(),
    "Hom(Z/4,-)": hom_functor(FPModule.cyclic(4)),
    "S_2,1": simple_functor(2, 1),
    "S_2,2": simple_functor(2, 2),
}

for name, G in examples.items():
    c = lmc(G)
    print(f"{name:11} rank {c.pr}  multiplicities {c.torsion}  rmc agrees: {rmc(G) == c}")

print()
print("n             ", [n for n in range(1, 6)])
for name, G in examples.items():
    formula = [hilbert_value(G, 2, n) for n in range(1, 6)]
    direct = [hilbert_direct(G, 2, n) for n in range(1, 6)]
    assert formula == direct
    slope, const, threshold = hilbert_polynomial(G, 2)
    print(f"{name:11}   {formula}  -> {slope}*n + {const} for n >= {threshold}")
