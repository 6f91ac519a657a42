"""
Functors given by presentations
===============================

A functor is stored as a module map alpha: A -> B and evaluates at X to the
cokernel of Hom(B, X) -> Hom(A, X).
"""

from fpfunctors.functors import (
    agj_dual,
    covdefect,
    defect,
    evaluate,
    hom_functor,
    is_zero_functor,
    nt_cokernel,
    tensor_functor,
    tensor_map,
)
from fpfunctors.modules import FPModule, ModuleMorphism

Z2, Z4 = FPModule.cyclic(2), FPModule.cyclic(4)
test_modules = ["Z", "Z/2", "Z/4", "Z/3", "Z/6"]
parse = {"Z": FPModule.free(1), "Z/2": Z2, "Z/4": Z4,
         "Z/3": FPModule.cyclic(3), "Z/6": FPModule.cyclic(6)}

hom2 = hom_functor(Z2)
ten2 = tensor_functor(Z2)
for name in test_modules:
    X = parse[name]
    print(f"{name:4}  Hom(Z/2, X) = {evaluate(hom2, X)!s:6}  Z/2 (x) X = {evaluate(ten2, X)}")

# the two defects tell these functors apart
print("defect(Hom(Z/2,-)) =", defect(hom2), " covdefect =", covdefect(hom2))
print("defect(Z/2 (x) -)  =", defect(ten2), " covdefect =", covdefect(ten2))

# duality exchanges hom and tensor functors
dual = agj_dual(hom2)
print("dual of Hom(Z/2,-) at Z/4:", evaluate(dual, Z4))

# the cokernel of (Z/2 (x) -) -> (Z/4 (x) -) induced by doubling
phi = tensor_map(ModuleMorphism(Z2, Z4, [[2]]))
C = nt_cokernel(phi)
print("coker at Z/2:", evaluate(C, Z2), " is zero functor:", is_zero_functor(C))
