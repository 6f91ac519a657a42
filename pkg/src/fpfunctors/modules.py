"""Finitely presented abelian groups and their morphisms.

Convention (used everywhere): a module with ``g`` generators is the cokernel
of its ``g x r`` relations matrix acting on column vectors, ``Z^g / R Z^r``.
A morphism ``M -> N`` is an ``N.generators x M.generators`` matrix whose
``j``-th column is the image of the ``j``-th generator of ``M``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import linalg
from .arith import factorize, gcd, omega
from .errors import DimensionError, InfiniteModuleError, NotWellDefinedError


@dataclass(frozen=True)
class StructureInvariants:
    """Free rank plus elementary-divisor multiplicities ``{(p, l): count}``."""

    free_rank: int
    torsion: dict = field(default_factory=dict)

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        terms = []
        for (p, l), mult in sorted(self.torsion.items()):
            terms += [f"Z/{p ** l}"] * mult
        terms += ["Z"] * self.free_rank
        return "+".join(terms) if terms else "0"


@dataclass(frozen=True, eq=False)
class FPModule:
    """``Z^generators / relations * Z^r``.

    Modules carry no canonical form; compare them through
    :attr:`invariants`.
    """

    generators: int
    relations: np.ndarray

    def __post_init__(self):
        rel = linalg.matrix(self.relations) if not (
            isinstance(self.relations, np.ndarray) and self.relations.dtype == object
        ) else self.relations
        if rel.ndim != 2 or rel.shape[0] != self.generators:
            raise DimensionError(
                f"relations must have {self.generators} rows, got shape {rel.shape}"
            )
        object.__setattr__(self, "relations", rel)

    # constructors

    @classmethod
    def free(cls, n: int) -> FPModule:
        return cls(n, linalg.zeros(n, 0))

    @classmethod
    def zero(cls) -> FPModule:
        return cls.free(0)

    @classmethod
    def cyclic(cls, d: int) -> FPModule:
        """``Z/d``; ``d == 0`` gives ``Z``."""
        return cls.from_orders([d])

    @classmethod
    def from_orders(cls, orders) -> FPModule:
        """Direct sum of cyclic groups ``Z/d`` (``d == 0`` meaning ``Z``)."""
        orders = [abs(int(d)) for d in orders]
        finite = [i for i, d in enumerate(orders) if d != 0]
        rel = linalg.zeros(len(orders), len(finite))
        for c, i in enumerate(finite):
            rel[i, c] = orders[i]
        return cls(len(orders), rel)

    @property
    def num_relations(self) -> int:
        return self.relations.shape[1]

    @cached_property
    def smith(self) -> linalg.SmithDecomposition:
        return linalg.snf(self.relations)

    @cached_property
    def orders(self) -> list[int]:
        """Orders of the cyclic summands in Smith coordinates (0 = free).

        Generator ``i`` of the Smith basis has order ``orders[i]``; the Smith
        basis is reached from the original generators by ``smith.U``.
        """
        diag = self.smith.diagonal
        return [diag[i] if i < len(diag) else 0 for i in range(self.generators)]

    @cached_property
    def invariants(self) -> StructureInvariants:
        return structure_invariants(self)

    def is_zero(self) -> bool:
        return self.invariants.is_zero

    def contains_column(self, v) -> bool:
        """Whether generator-coordinate vectors (columns of ``v``) vanish in the module."""
        return linalg.solve_with(self.smith, v) is not None

    def __str__(self):
        return str(self.invariants)

    def __repr__(self):
        return f"FPModule({self.generators}, {linalg.to_lists(self.relations)})"


def structure_invariants(M: FPModule) -> StructureInvariants:
    """Free rank and elementary divisors read off the Smith form."""
    diag = [d for d in M.smith.diagonal if d != 0]
    torsion: dict = {}
    for d in diag:
        if d == 1:
            continue
        for p, e in factorize(d):
            torsion[(p, e)] = torsion.get((p, e), 0) + 1
    return StructureInvariants(M.generators - len(diag), dict(sorted(torsion.items())))


@dataclass(frozen=True, eq=False)
class ModuleMorphism:
    """A homomorphism given on generators.

    Construction checks well-definedness by solving
    ``matrix @ src.relations == tgt.relations @ certificate``.
    """

    src: FPModule
    tgt: FPModule
    matrix: np.ndarray
    certificate: np.ndarray = field(default=None, repr=False)

    def __post_init__(self):
        F = self.matrix
        if not (isinstance(F, np.ndarray) and F.dtype == object):
            F = linalg.matrix(F, (self.tgt.generators, self.src.generators))
            object.__setattr__(self, "matrix", F)
        if F.shape != (self.tgt.generators, self.src.generators):
            raise DimensionError(
                f"morphism matrix must be {self.tgt.generators}x{self.src.generators},"
                f" got {F.shape}"
            )
        if self.certificate is None:
            X = linalg.solve_with(self.tgt.smith, F @ self.src.relations)
            if X is None:
                raise NotWellDefinedError("matrix does not respect the relations")
            object.__setattr__(self, "certificate", X)

    @classmethod
    def identity(cls, M: FPModule) -> ModuleMorphism:
        return cls(M, M, linalg.identity(M.generators))

    @classmethod
    def zero(cls, M: FPModule, N: FPModule) -> ModuleMorphism:
        return cls(M, N, linalg.zeros(N.generators, M.generators))

    def __matmul__(self, other: ModuleMorphism) -> ModuleMorphism:
        """``self @ other`` is the composite ``self o other``."""
        if other.tgt is not self.src and other.tgt.generators != self.src.generators:
            raise DimensionError("morphisms are not composable")
        return ModuleMorphism(other.src, self.tgt, self.matrix @ other.matrix)

    def is_zero(self) -> bool:
        return self.tgt.contains_column(self.matrix)

    def __repr__(self):
        return f"ModuleMorphism({self.src!r} -> {self.tgt!r}, {linalg.to_lists(self.matrix)})"


def direct_sum(*modules: FPModule) -> FPModule:
    return FPModule(
        sum(M.generators for M in modules),
        linalg.block_diag(*(M.relations for M in modules)),
    )


def kernel(f: ModuleMorphism) -> tuple[FPModule, ModuleMorphism]:
    """Kernel of ``f`` with its inclusion into ``f.src``.

    Elements ``x`` of the source with ``F x = R_N y`` are the top part of the
    integer null space of ``[F | -R_N]``; their relations are computed the same
    way against ``R_M``.
    """
    M, N = f.src, f.tgt
    K = linalg.kernel_basis(linalg.hstack(f.matrix, -N.relations))
    Kx = K[: M.generators, :]
    k = Kx.shape[1]
    Z = linalg.kernel_basis(linalg.hstack(Kx, -M.relations))[:k, :]
    Kmod = FPModule(k, Z)
    return Kmod, ModuleMorphism(Kmod, M, Kx)


def cokernel(f: ModuleMorphism) -> tuple[FPModule, ModuleMorphism]:
    N = f.tgt
    C = FPModule(N.generators, linalg.hstack(f.matrix, N.relations))
    return C, ModuleMorphism(N, C, linalg.identity(N.generators))


def pushout(
    f: ModuleMorphism, g: ModuleMorphism
) -> tuple[FPModule, ModuleMorphism, ModuleMorphism]:
    """Pushout of ``B1 <-f- A -g-> B2`` as the cokernel of ``(f, -g)``.

    Returns the pushout module and the legs ``B1 -> P`` and ``B2 -> P``.
    """
    if f.src is not g.src and f.src.generators != g.src.generators:
        raise DimensionError("pushout needs morphisms with a common source")
    B1, B2 = f.tgt, g.tgt
    cols = linalg.vstack(f.matrix, -g.matrix)
    P = FPModule(
        B1.generators + B2.generators,
        linalg.hstack(cols, linalg.block_diag(B1.relations, B2.relations)),
    )
    leg1 = ModuleMorphism(
        B1, P, linalg.vstack(linalg.identity(B1.generators), linalg.zeros(B2.generators, B1.generators))
    )
    leg2 = ModuleMorphism(
        B2, P, linalg.vstack(linalg.zeros(B1.generators, B2.generators), linalg.identity(B2.generators))
    )
    return P, leg1, leg2


def _cyclic_hom(a: int, b: int) -> tuple[int, int]:
    """``Hom(Z/a, Z/b)`` as ``(multiplier, order)``; order 1 means trivial.

    The group is cyclic, generated by multiplication by ``multiplier``;
    ``order == 0`` means infinite cyclic.
    """
    if b == 0:
        return (1, 0) if a == 0 else (0, 1)
    g = gcd(a, b)
    return b // g, g


@dataclass(frozen=True, eq=False)
class HomSpace:
    """``Hom(M, N)`` as a finitely presented group with explicit morphisms.

    ``module`` presents the group; ``generators[k]`` is the concrete matrix of
    the ``k``-th generator.  :meth:`coordinates` maps any well-defined matrix
    back to generator coordinates.
    """

    src: FPModule
    tgt: FPModule
    module: FPModule
    generators: list
    _slots: list = field(repr=False)

    def coordinates(self, F) -> np.ndarray:
        """Column(s) of coordinates for a morphism matrix ``F``."""
        M, N = self.src, self.tgt
        Fp = N.smith.U @ F @ M.smith.U_inv
        out = linalg.zeros(len(self._slots), 1)
        for k, (i, j, c, order) in enumerate(self._slots):
            x = Fp[i, j]
            if N.orders[i]:
                x %= N.orders[i]
            q, r = divmod(x, c)
            if r:
                raise NotWellDefinedError("matrix is not a homomorphism")
            out[k, 0] = q % order if order else q
        return out

    def morphism(self, coords) -> ModuleMorphism:
        F = linalg.zeros(self.tgt.generators, self.src.generators)
        for c, G in zip(coords, self.generators):
            F = F + int(c) * G
        return ModuleMorphism(self.src, self.tgt, F)


def hom_module(M: FPModule, N: FPModule) -> HomSpace:
    """``Hom(M, N)`` computed in Smith coordinates of both modules.

    After the base changes ``M ~ (+) Z/a_j`` and ``N ~ (+) Z/b_i``, a morphism
    is a matrix whose ``(i, j)`` entry ranges over ``Hom(Z/a_j, Z/b_i)``.
    """
    a, b = M.orders, N.orders
    slots, gens, orders = [], [], []
    for i in range(N.generators):
        for j in range(M.generators):
            c, order = _cyclic_hom(a[j], b[i])
            if order == 1:
                continue
            slots.append((i, j, c, order))
            E = linalg.zeros(N.generators, M.generators)
            E[i, j] = c
            gens.append(N.smith.U_inv @ E @ M.smith.U)
            orders.append(order)
    H = FPModule.from_orders(orders)
    return HomSpace(M, N, H, gens, slots)


def induced_hom(
    f: ModuleMorphism, X: FPModule, source: HomSpace = None, target: HomSpace = None
) -> ModuleMorphism:
    """Precomposition ``Hom(f.tgt, X) -> Hom(f.src, X)``, ``phi -> phi o f``.

    Precomputed hom spaces may be passed to avoid recomputation.
    """
    source = source or hom_module(f.tgt, X)
    target = target or hom_module(f.src, X)
    cols = [target.coordinates(G @ f.matrix) for G in source.generators]
    mat = linalg.hstack(*cols) if cols else linalg.zeros(target.module.generators, 0)
    return ModuleMorphism(source.module, target.module, mat)


def dual_basis(M: FPModule) -> np.ndarray:
    """Columns ``phi^T`` spanning ``Hom(M, Z)``: integer row vectors killing the relations."""
    return linalg.kernel_basis(M.relations.T)


def dual_module(M: FPModule) -> FPModule:
    """``Hom(M, Z)``, a free module."""
    return FPModule.free(dual_basis(M).shape[1])


def dual_morphism(f: ModuleMorphism) -> ModuleMorphism:
    """``Hom(f, Z): Hom(N, Z) -> Hom(M, Z)`` on the bases of :func:`dual_basis`."""
    KM, KN = dual_basis(f.src), dual_basis(f.tgt)
    D = linalg.solve(KM, f.matrix.T @ KN)
    assert D is not None, "dual basis is saturated"
    return ModuleMorphism(FPModule.free(KN.shape[1]), FPModule.free(KM.shape[1]), D)


def auslander_transpose(M: FPModule) -> FPModule:
    """Cokernel of the transposed presentation ``Z^g -> Z^r``."""
    return FPModule(M.num_relations, M.relations.T.copy())


def annihilator(M: FPModule) -> int:
    """Nonnegative generator of ``Ann(M)``: 0 with free part, else the top invariant factor."""
    if M.invariants.free_rank:
        return 0
    diag = [d for d in M.smith.diagonal if d]
    return max(diag, default=1)


def length_of_finite(M: FPModule) -> int:
    """Composition length of a finite module.

    Raises:
        InfiniteModuleError: if ``M`` has a free summand.
    """
    if M.invariants.free_rank:
        raise InfiniteModuleError("module has infinite length")
    return sum(omega(d) for d in M.smith.diagonal if d > 1)


def multiplication(M: FPModule, r: int) -> ModuleMorphism:
    return ModuleMorphism(M, M, int(r) * linalg.identity(M.generators))
