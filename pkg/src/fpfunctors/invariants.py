"""Grothendieck-group classes, rank, multiplicities and Hilbert functions.

Over the integers the class of a finitely presented functor is a free rank
plus a signed multiplicity for every summand ``Z/p^l``.  The Hilbert function
at ``(p, n)`` is then ``rank * n + sum_l mult[p, l] * min(l, n)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import check_prime
from .functors import FPFunctor, evaluate, sigma_pushforward
from .modules import (
    FPModule,
    StructureInvariants,
    auslander_transpose,
    cokernel,
    length_of_finite,
)


@dataclass(frozen=True)
class K0Class:
    """``pr`` (free rank) and signed torsion multiplicities ``{(p, l): mult}``.

    Zero multiplicities are never stored, so ``==`` compares classes.
    """

    pr: int = 0
    torsion: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {k: v for k, v in sorted(self.torsion.items()) if v != 0}
        object.__setattr__(self, "torsion", clean)

    @classmethod
    def of_invariants(cls, inv: StructureInvariants) -> K0Class:
        return cls(inv.free_rank, dict(inv.torsion))

    @classmethod
    def of_module(cls, M: FPModule) -> K0Class:
        return cls.of_invariants(M.invariants)

    def __add__(self, other: K0Class) -> K0Class:
        torsion = dict(self.torsion)
        for k, v in other.torsion.items():
            torsion[k] = torsion.get(k, 0) + v
        return K0Class(self.pr + other.pr, torsion)

    def __neg__(self) -> K0Class:
        return K0Class(-self.pr, {k: -v for k, v in self.torsion.items()})

    def __sub__(self, other: K0Class) -> K0Class:
        return self + (-other)

    def is_zero(self) -> bool:
        return self.pr == 0 and not self.torsion

    def primes(self) -> list[int]:
        return sorted({p for p, _ in self.torsion})

    def mult(self, p: int, l: int) -> int:
        return self.torsion.get((p, l), 0)


def lmc(G: FPFunctor) -> K0Class:
    """Left module class ``[A] - [B] + [coker alpha]``."""
    C = cokernel(G.alpha)[0]
    return K0Class.of_module(G.A) - K0Class.of_module(G.B) + K0Class.of_module(C)


def _convert(M: FPModule) -> K0Class:
    # [M] -> [Tr M] - [Q*] + [P*] for the presentation Z^r -> Z^g -> M
    return (
        K0Class.of_module(auslander_transpose(M))
        - K0Class(M.num_relations)
        + K0Class(M.generators)
    )


def rmc(G: FPFunctor) -> K0Class:
    """Right module class, obtained from the left one term by term."""
    C = cokernel(G.alpha)[0]
    return _convert(G.A) - _convert(G.B) + _convert(C)


def rank(G: FPFunctor) -> int:
    return lmc(G).pr


@dataclass(frozen=True)
class HilbertData:
    """Rank plus the torsion table of the class; evaluates the Hilbert function."""

    rank: int
    coefficients: dict

    def __call__(self, p: int, n: int) -> int:
        return self.rank * n + sum(
            c * min(l, n) for (q, l), c in self.coefficients.items() if q == p
        )

    def primes(self) -> list[int]:
        return sorted({p for p, _ in self.coefficients})

    def threshold(self, p: int) -> int:
        return max([l for (q, l) in self.coefficients if q == p] + [1])

    def polynomial(self, p: int) -> tuple[int, int, int]:
        """``(slope, constant, threshold)``; exact for ``n >= threshold``."""
        const = sum(c * l for (q, l), c in self.coefficients.items() if q == p)
        return self.rank, const, self.threshold(p)


def hilbert_data(G: FPFunctor) -> HilbertData:
    cls = lmc(G)
    return HilbertData(cls.pr, dict(cls.torsion))


def hilbert_value(G: FPFunctor, p: int, n: int) -> int:
    """Hilbert function from the class of ``G``."""
    p = check_prime(p)
    if n < 1:
        raise ValueError("n must be positive")
    return hilbert_data(G)(p, n)


def hilbert_direct(G: FPFunctor, p: int, n: int) -> int:
    """Hilbert function computed from its definition.

    Push ``G`` forward to ``S = Z/p^n`` and take the length of its covariant
    defect, ``coker(Hom_S(B/p^n B, S) -> Hom_S(A/p^n A, S))``.  Homs of
    ``S``-modules into ``S`` are homs of abelian groups into ``Z/p^n``.
    """
    p = check_prime(p)
    if n < 1:
        raise ValueError("n must be positive")
    reduced = sigma_pushforward(G, p**n)
    return length_of_finite(evaluate(reduced.functor, FPModule.cyclic(p**n)))


def hilbert_polynomial(G: FPFunctor, p: int) -> tuple[int, int, int]:
    return hilbert_data(G).polynomial(check_prime(p))
