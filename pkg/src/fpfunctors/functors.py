"""Finitely presented functors on finitely presented abelian groups.

A functor ``G`` is stored as a presentation morphism ``alpha: A -> B``; it is
the cokernel of ``Hom(alpha, -): Hom(B, -) -> Hom(A, -)``.  A natural
transformation ``G1 -> G2`` between presented functors is given by a module
map ``rho: A2 -> A1`` (precomposition on ``Hom(A1, -)``) that admits some
``sigma: B2 -> B1`` with ``alpha1 o rho == sigma o alpha2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .errors import NotWellDefinedError
from .modules import (
    FPModule,
    ModuleMorphism,
    cokernel,
    direct_sum,
    dual_morphism,
    hom_module,
    induced_hom,
    kernel,
    pushout,
)


@dataclass(frozen=True, eq=False)
class FPFunctor:
    alpha: ModuleMorphism

    @property
    def A(self) -> FPModule:
        return self.alpha.src

    @property
    def B(self) -> FPModule:
        return self.alpha.tgt

    def __repr__(self):
        return f"FPFunctor({self.A} -> {self.B}, {linalg.to_lists(self.alpha.matrix)})"


def hom_functor(M: FPModule) -> FPFunctor:
    """``Hom(M, -)``, presented by ``M -> 0``."""
    return FPFunctor(ModuleMorphism.zero(M, FPModule.zero()))


def forgetful() -> FPFunctor:
    return hom_functor(FPModule.free(1))


def zero_functor() -> FPFunctor:
    return hom_functor(FPModule.zero())


def tensor_functor(N: FPModule) -> FPFunctor:
    """``N (x) -``: for ``N = coker(u)`` the presentation is ``u^T: Z^g -> Z^r``."""
    u = N.relations
    return FPFunctor(
        ModuleMorphism(FPModule.free(N.generators), FPModule.free(N.num_relations), u.T.copy())
    )


def functor_sum(*functors: FPFunctor) -> FPFunctor:
    A = direct_sum(*(G.A for G in functors))
    B = direct_sum(*(G.B for G in functors))
    return FPFunctor(ModuleMorphism(A, B, linalg.block_diag(*(G.alpha.matrix for G in functors))))


@dataclass(frozen=True, eq=False)
class NatTrans:
    """Natural transformation ``src -> tgt`` induced by ``rho: tgt.A -> src.A``.

    The witness ``sigma`` is not stored; construction only checks it exists.
    """

    src: FPFunctor
    tgt: FPFunctor
    rho: ModuleMorphism
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        if self.rho.src is not self.tgt.A or self.rho.tgt is not self.src.A:
            object.__setattr__(
                self, "rho", ModuleMorphism(self.tgt.A, self.src.A, self.rho.matrix)
            )
        if self.check and self.witness() is None:
            raise NotWellDefinedError("rho does not induce a natural transformation")

    def witness(self) -> ModuleMorphism | None:
        """Some ``sigma: B2 -> B1`` with ``alpha1 o rho == sigma o alpha2``."""
        return _factor_through(self.src.alpha @ self.rho, self.tgt.alpha)

    @classmethod
    def identity(cls, G: FPFunctor) -> NatTrans:
        return cls(G, G, ModuleMorphism.identity(G.A))

    @classmethod
    def zero(cls, G1: FPFunctor, G2: FPFunctor) -> NatTrans:
        return cls(G1, G2, ModuleMorphism.zero(G2.A, G1.A))

    def is_zero(self) -> bool:
        """Zero iff ``rho = tau o alpha2`` for some ``tau: B2 -> A1`` (Yoneda)."""
        return _factor_through(self.rho, self.tgt.alpha) is not None


def _factor_through(h: ModuleMorphism, a: ModuleMorphism) -> ModuleMorphism | None:
    """Find ``s: a.tgt -> h.tgt`` with ``s o a == h``, if one exists."""
    X = h.tgt
    HB = hom_module(a.tgt, X)
    HA = hom_module(a.src, X)
    ind = induced_hom(a, X, HB, HA)
    rhs = HA.coordinates(h.matrix)
    sol = linalg.solve(linalg.hstack(ind.matrix, HA.module.relations), rhs)
    if sol is None:
        return None
    return HB.morphism(sol[: HB.module.generators, 0])


def hom_map(f: ModuleMorphism) -> NatTrans:
    """``Hom(f, -): Hom(N, -) -> Hom(M, -)`` for ``f: M -> N``."""
    return NatTrans(hom_functor(f.tgt), hom_functor(f.src), f)


def tensor_map(f: ModuleMorphism) -> NatTrans:
    """``f (x) -: (M (x) -) -> (N (x) -)`` for ``f: M -> N``."""
    G1, G2 = tensor_functor(f.src), tensor_functor(f.tgt)
    return NatTrans(G1, G2, ModuleMorphism(G2.A, G1.A, f.matrix.T.copy()))


def evaluate(G: FPFunctor, X: FPModule) -> FPModule:
    """``G(X) = coker(Hom(B, X) -> Hom(A, X))``."""
    return cokernel(induced_hom(G.alpha, X))[0]


def evaluate_nt(phi: NatTrans, X: FPModule) -> ModuleMorphism:
    """``phi_X: G1(X) -> G2(X)`` on the presentations returned by :func:`evaluate`."""
    HA1, HA2 = hom_module(phi.src.A, X), hom_module(phi.tgt.A, X)
    G1X = cokernel(induced_hom(phi.src.alpha, X, target=HA1))[0]
    G2X = cokernel(induced_hom(phi.tgt.alpha, X, target=HA2))[0]
    cols = [HA2.coordinates(g @ phi.rho.matrix) for g in HA1.generators]
    mat = linalg.hstack(*cols) if cols else linalg.zeros(G2X.generators, 0)
    return ModuleMorphism(G1X, G2X, mat)


def evaluate_at_fractions(G: FPFunctor) -> int:
    """``dim_Q G(Q)`` by rational linear algebra.

    ``Hom(A, Q)`` is the rational left null space of ``R_A``; the image of
    ``Hom(B, Q)`` is spanned by ``k alpha`` for ``k`` in the left null space of ``R_B``.
    """
    A, B = G.A, G.B
    dim_hom_A = A.generators - linalg.rank_over_fractions(A.relations)
    KB = linalg.kernel_basis(B.relations.T).T
    image = linalg.rank_over_fractions(KB @ G.alpha.matrix) if KB.shape[0] else 0
    return dim_hom_A - image


def defect(G: FPFunctor) -> FPModule:
    """Contravariant defect: ``ker(alpha)``."""
    return kernel(G.alpha)[0]


def covdefect(G: FPFunctor) -> FPModule:
    """Covariant defect: ``coker(Hom(B, Z) -> Hom(A, Z))``."""
    return cokernel(dual_morphism(G.alpha))[0]


def nt_cokernel(phi: NatTrans) -> FPFunctor:
    """Presented by ``(alpha2, rho): A2 -> B2 (+) A1``."""
    a2, rho = phi.tgt.alpha, phi.rho
    tgt = direct_sum(a2.tgt, rho.tgt)
    return FPFunctor(ModuleMorphism(a2.src, tgt, linalg.vstack(a2.matrix, rho.matrix)))


def nt_kernel(phi: NatTrans) -> tuple[FPFunctor, NatTrans]:
    """Kernel of ``phi`` and its inclusion into ``phi.src``.

    ``C`` is the pushout of ``A1 <-rho- A2 -alpha2-> B2`` with leg ``u: A1 -> C``;
    ``D`` is the pushout of ``C <-u- A1 -alpha1-> B1`` with leg ``v: C -> D``.
    The kernel is presented by ``v`` and includes into ``phi.src`` via ``u``.
    """
    a1, a2 = phi.src.alpha, phi.tgt.alpha
    _, u, _ = pushout(phi.rho, a2)
    _, v, _ = pushout(u, a1)
    K = FPFunctor(v)
    return K, NatTrans(K, phi.src, u, check=False)


def split_retraction(G: FPFunctor) -> ModuleMorphism | None:
    """A left inverse ``beta: B -> A`` of ``alpha``, if any."""
    return _factor_through(ModuleMorphism.identity(G.A), G.alpha)


def is_zero_functor(G: FPFunctor) -> bool:
    """``G == 0`` iff ``alpha`` is a split monomorphism."""
    return split_retraction(G) is not None


@dataclass(frozen=True, eq=False)
class ReducedFunctor:
    """A functor over ``Z/modulus`` stored as integer data killed by ``modulus``."""

    functor: FPFunctor
    modulus: int


def _reduce_module(M: FPModule, m: int) -> FPModule:
    return FPModule(M.generators, linalg.hstack(M.relations, m * linalg.identity(M.generators)))


def sigma_pushforward(G: FPFunctor, m: int) -> ReducedFunctor:
    """Base change along ``Z -> Z/m``: presentation ``Z/m (x) alpha``."""
    m = abs(int(m))
    if m == 0:
        raise ValueError("modulus must be nonzero")
    A, B = _reduce_module(G.A, m), _reduce_module(G.B, m)
    return ReducedFunctor(FPFunctor(ModuleMorphism(A, B, G.alpha.matrix)), m)


def agj_dual(G: FPFunctor) -> FPFunctor:
    """Dual functor ``ker((A (x) -) -> (B (x) -))`` induced by ``alpha``."""
    return nt_kernel(tensor_map(G.alpha))[0]


def simple_functor(p: int, n: int) -> FPFunctor:
    """The simple functor supported at the single point ``Z/p^n``.

    For ``n == 1``: kernel of ``(Z/p (x) -) -> (Z/p^2 (x) -)`` induced by ``p``.
    For ``n >= 2``: kernel of the map induced by ``x -> (x, p x)`` from
    ``Z/p^n`` into ``Z/p^(n-1) (+) Z/p^(n+1)``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        f = ModuleMorphism(FPModule.cyclic(p), FPModule.cyclic(p * p), [[p]])
    else:
        f = ModuleMorphism(
            FPModule.cyclic(p**n),
            FPModule.from_orders([p ** (n - 1), p ** (n + 1)]),
            [[1], [p]],
        )
    return nt_kernel(tensor_map(f))[0]
