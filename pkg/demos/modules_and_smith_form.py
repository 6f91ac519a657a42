"""
Finitely presented abelian groups
=================================

A module is the cokernel of an integer relations matrix acting on columns.
Everything is exact: matrices are numpy arrays of Python integers.
"""

from fpfunctors import linalg
from fpfunctors.modules import FPModule, ModuleMorphism, cokernel, hom_module, kernel

# Smith form with its certificates U and V
A = linalg.matrix([[2, 4], [6, 8]])
dec = linalg.snf(A)
print("diagonal:", dec.diagonal)
print("U A V == S:", (dec.U @ A @ dec.V == dec.S).all())

# the module Z^2 / (columns of diag(4, 6)) is Z/2 + Z/4 + Z/3
M = FPModule(2, linalg.diagonal([4, 6]))
print("M =", M)

# kernel and cokernel of the projection Z/4 -> Z/2
proj = ModuleMorphism(FPModule.cyclic(4), FPModule.cyclic(2), [[1]])
print("ker =", kernel(proj)[0], " coker =", cokernel(proj)[0])

# Hom(Z/4, Z/6) has gcd(4, 6) = 2 elements; each generator is a concrete matrix
H = hom_module(FPModule.cyclic(4), FPModule.cyclic(6))
print("Hom(Z/4, Z/6) =", H.module, "generated by", [linalg.to_lists(g) for g in H.generators])
