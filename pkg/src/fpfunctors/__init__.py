"""Exact computations with finitely presented functors over the integers."""

from .arith import ZZ, factorize, gcd, is_prime, lcm
from .errors import (
    DimensionError,
    FPError,
    InfiniteModuleError,
    MalformedInputError,
    NotClosedError,
    NotWellDefinedError,
    PreconditionError,
    UnsupportedRingError,
    ZeroFactorizationError,
)
from .functors import (
    FPFunctor,
    NatTrans,
    agj_dual,
    covdefect,
    defect,
    evaluate,
    evaluate_at_fractions,
    evaluate_nt,
    forgetful,
    functor_sum,
    hom_functor,
    hom_map,
    is_zero_functor,
    nt_cokernel,
    nt_kernel,
    sigma_pushforward,
    simple_functor,
    tensor_functor,
    tensor_map,
    zero_functor,
)
from .invariants import (
    K0Class,
    hilbert_data,
    hilbert_direct,
    hilbert_polynomial,
    hilbert_value,
    lmc,
    rank,
    rmc,
)
from .linalg import snf, solve
from .modules import (
    FPModule,
    ModuleMorphism,
    StructureInvariants,
    annihilator,
    cokernel,
    direct_sum,
    hom_module,
    kernel,
    structure_invariants,
)
from .ziegler import (
    Adic,
    ClosedSet,
    Finite,
    NSet,
    PrimeSet,
    Prufer,
    Rationals,
    contains,
    is_closed,
    serre_member,
    vanishing_locus,
)

__all__ = [
    "Adic",
    "agj_dual",
    "annihilator",
    "ClosedSet",
    "cokernel",
    "contains",
    "covdefect",
    "defect",
    "DimensionError",
    "direct_sum",
    "evaluate",
    "evaluate_at_fractions",
    "evaluate_nt",
    "factorize",
    "Finite",
    "forgetful",
    "FPError",
    "FPFunctor",
    "FPModule",
    "functor_sum",
    "gcd",
    "hilbert_data",
    "hilbert_direct",
    "hilbert_polynomial",
    "hilbert_value",
    "hom_functor",
    "hom_map",
    "hom_module",
    "InfiniteModuleError",
    "is_closed",
    "is_prime",
    "is_zero_functor",
    "K0Class",
    "kernel",
    "lcm",
    "lmc",
    "MalformedInputError",
    "ModuleMorphism",
    "NatTrans",
    "NotClosedError",
    "NotWellDefinedError",
    "NSet",
    "nt_cokernel",
    "nt_kernel",
    "PreconditionError",
    "PrimeSet",
    "Prufer",
    "rank",
    "Rationals",
    "rmc",
    "serre_member",
    "sigma_pushforward",
    "simple_functor",
    "snf",
    "solve",
    "structure_invariants",
    "StructureInvariants",
    "tensor_functor",
    "tensor_map",
    "UnsupportedRingError",
    "vanishing_locus",
    "zero_functor",
    "ZeroFactorizationError",
    "ZZ",
]
