"""Closed subsets of the Ziegler spectrum of the integers and vanishing loci.

Points are ``Finite(p, n)`` (the group ``Z/p^n``), ``Adic(p)`` (the p-adic
integers), ``Prufer(p)`` (the Prufer group) and ``Rationals()``.  Sets are
represented symbolically: every prime not mentioned explicitly behaves like a
single "generic" prime, so all membership and inclusion questions reduce to a
finite amount of data.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import check_prime, prime_divisors
from .errors import NotClosedError
from .functors import FPFunctor, covdefect, defect
from .invariants import hilbert_data
from .modules import FPModule, annihilator


@dataclass(frozen=True)
class Finite:
    p: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "p", check_prime(self.p))
        if self.n < 1:
            raise ValueError("n must be positive")

    def __str__(self):
        return f"F({self.p},{self.n})"


@dataclass(frozen=True)
class Adic:
    p: int

    def __post_init__(self):
        object.__setattr__(self, "p", check_prime(self.p))

    def __str__(self):
        return f"A({self.p})"


@dataclass(frozen=True)
class Prufer:
    p: int

    def __post_init__(self):
        object.__setattr__(self, "p", check_prime(self.p))

    def __str__(self):
        return f"P({self.p})"


@dataclass(frozen=True)
class Rationals:
    def __str__(self):
        return "Q"


ZieglerPoint = Finite | Adic | Prufer | Rationals


@dataclass(frozen=True)
class NSet:
    """A finite or cofinite set of positive integers."""

    cofinite: bool = False
    items: tuple = ()

    def __post_init__(self):
        items = tuple(sorted(set(int(n) for n in self.items)))
        if any(n < 1 for n in items):
            raise ValueError("NSet holds positive integers only")
        object.__setattr__(self, "items", items)

    @classmethod
    def finite(cls, ns=()) -> NSet:
        return cls(False, tuple(ns))

    @classmethod
    def all_except(cls, ns=()) -> NSet:
        return cls(True, tuple(ns))

    @property
    def mode(self) -> str:
        return "cofinite" if self.cofinite else "finite"

    def __contains__(self, n: int) -> bool:
        return (n in self.items) != self.cofinite

    def is_empty(self) -> bool:
        return not self.cofinite and not self.items

    def is_full(self) -> bool:
        return self.cofinite and not self.items

    def issubset(self, other: NSet) -> bool:
        a, b = set(self.items), set(other.items)
        if not self.cofinite:
            return a.isdisjoint(b) if other.cofinite else a <= b
        return other.cofinite and b <= a


@dataclass(frozen=True)
class PrimeSet:
    """A finite or cofinite set of primes."""

    cofinite: bool = False
    primes: tuple = ()

    def __post_init__(self):
        object.__setattr__(
            self, "primes", tuple(sorted(set(check_prime(p) for p in self.primes)))
        )

    @classmethod
    def finite(cls, ps=()) -> PrimeSet:
        return cls(False, tuple(ps))

    @classmethod
    def all_except(cls, ps=()) -> PrimeSet:
        return cls(True, tuple(ps))

    @property
    def mode(self) -> str:
        return "cofinite" if self.cofinite else "finite"

    def __contains__(self, p: int) -> bool:
        return (p in self.primes) != self.cofinite

    def issubset(self, other: PrimeSet) -> bool:
        a, b = set(self.primes), set(other.primes)
        if not self.cofinite:
            return a.isdisjoint(b) if other.cofinite else a <= b
        return other.cofinite and b <= a


@dataclass(frozen=True)
class ClosedSet:
    """A subset of the Ziegler spectrum, uniform outside finitely many primes.

    Attributes:
        q: whether the rationals belong to the set.
        a: primes ``p`` with ``Adic(p)`` in the set.
        pset: primes ``p`` with ``Prufer(p)`` in the set.
        f_default: ``"all"`` or ``"none"``: the finite points at unlisted primes.
        f_exceptions: ``(p, NSet)`` pairs overriding the default at ``p``.

    Despite the name, instances need not be closed; see :func:`is_closed`.
    """

    q: bool = False
    a: PrimeSet = PrimeSet()
    pset: PrimeSet = PrimeSet()
    f_default: str = "none"
    f_exceptions: tuple = field(default=())

    def __post_init__(self):
        if self.f_default not in ("all", "none"):
            raise ValueError("f_default must be 'all' or 'none'")
        items = dict(self.f_exceptions.items() if isinstance(self.f_exceptions, dict)
                     else self.f_exceptions)
        default = NSet(self.f_default == "all")
        clean = tuple(
            (check_prime(p), ns) for p, ns in sorted(items.items()) if ns != default
        )
        object.__setattr__(self, "f_exceptions", clean)

    @classmethod
    def empty(cls) -> ClosedSet:
        return cls()

    @classmethod
    def full(cls) -> ClosedSet:
        return cls(True, PrimeSet.all_except(), PrimeSet.all_except(), "all")

    def f_part(self, p: int) -> NSet:
        for q, ns in self.f_exceptions:
            if q == p:
                return ns
        return NSet(self.f_default == "all")

    def mentioned_primes(self) -> list[int]:
        ps = set(self.a.primes) | set(self.pset.primes) | {p for p, _ in self.f_exceptions}
        return sorted(ps)

    def __contains__(self, pt) -> bool:
        return contains(self, pt)

    def describe(self) -> str:
        def primes(ps: PrimeSet) -> str:
            if ps.cofinite:
                return "all p" + (f" except {list(ps.primes)}" if ps.primes else "")
            return f"p in {list(ps.primes)}" if ps.primes else "none"

        lines = [
            f"Q       : {'yes' if self.q else 'no'}",
            f"A(p)    : {primes(self.a)}",
            f"P(p)    : {primes(self.pset)}",
            f"F(p,n)  : {'all n' if self.f_default == 'all' else 'no n'} at unlisted primes",
        ]
        for p, ns in self.f_exceptions:
            if ns.cofinite:
                what = "all n" + (f" except {list(ns.items)}" if ns.items else "")
            else:
                what = f"n in {list(ns.items)}" if ns.items else "no n"
            lines.append(f"  p = {p}: {what}")
        return "\n".join(lines)


VanishingLocus = ClosedSet


def contains(S: ClosedSet, pt) -> bool:
    if isinstance(pt, Rationals):
        return S.q
    if isinstance(pt, Adic):
        return pt.p in S.a
    if isinstance(pt, Prufer):
        return pt.p in S.pset
    if isinstance(pt, Finite):
        return pt.n in S.f_part(pt.p)
    raise TypeError(f"not a Ziegler point: {pt!r}")


def _local_parts(S: ClosedSet):
    """Yield ``(F-part, has_A, has_P)`` for each mentioned prime and the generic one."""
    for p in S.mentioned_primes():
        yield S.f_part(p), p in S.a, p in S.pset
    yield NSet(S.f_default == "all"), S.a.cofinite, S.pset.cofinite


def local_is_closed(f_part: NSet, has_a: bool, has_p: bool, has_q: bool) -> bool:
    """Closed subsets of the spectrum of the p-adic localization.

    A finite part of ``F`` points may go with one of ``{}, {Q}, {A,Q}, {P,Q},
    {A,P,Q}``; an infinite one only with ``{A,P,Q}``.
    """
    if f_part.cofinite:
        return has_a and has_p and has_q
    return has_q or not (has_a or has_p)


def is_closed(S: ClosedSet) -> bool:
    """Every local part is closed, and infinitely many finite points force ``Q``."""
    if not all(local_is_closed(f, a, p, S.q) for f, a, p in _local_parts(S)):
        return False
    infinite_f = S.f_default == "all" or any(ns.cofinite for _, ns in S.f_exceptions)
    return S.q or not infinite_f


def is_subset(X: ClosedSet, Y: ClosedSet) -> bool:
    if X.q and not Y.q:
        return False
    primes = sorted(set(X.mentioned_primes()) | set(Y.mentioned_primes()))
    for p in primes:
        if p in X.a and p not in Y.a:
            return False
        if p in X.pset and p not in Y.pset:
            return False
        if not X.f_part(p).issubset(Y.f_part(p)):
            return False
    # generic prime
    if X.a.cofinite and not Y.a.cofinite:
        return False
    if X.pset.cofinite and not Y.pset.cofinite:
        return False
    return not (X.f_default == "all" and Y.f_default == "none")


def intersection(X: ClosedSet, Y: ClosedSet) -> ClosedSet:
    def meet(s: PrimeSet, t: PrimeSet) -> PrimeSet:
        ps = set(s.primes) | set(t.primes)
        if s.cofinite and t.cofinite:
            return PrimeSet.all_except(ps)
        return PrimeSet.finite(p for p in ps if p in s and p in t)

    def nmeet(s: NSet, t: NSet) -> NSet:
        ns = set(s.items) | set(t.items)
        if s.cofinite and t.cofinite:
            return NSet.all_except(ns)
        return NSet.finite(n for n in ns if n in s and n in t)

    primes = set(X.mentioned_primes()) | set(Y.mentioned_primes())
    default = "all" if X.f_default == Y.f_default == "all" else "none"
    return ClosedSet(
        X.q and Y.q,
        meet(X.a, Y.a),
        meet(X.pset, Y.pset),
        default,
        {p: nmeet(X.f_part(p), Y.f_part(p)) for p in primes},
    )


def _support_complement(M: FPModule) -> PrimeSet:
    """Primes at which ``M`` localizes to zero."""
    if M.invariants.free_rank:
        return PrimeSet.finite()
    return PrimeSet.all_except(prime_divisors(annihilator(M)))


def _hilbert_zeros(hilb, p: int) -> NSet:
    slope, const, m = hilb.polynomial(p)
    below = [n for n in range(1, m) if hilb(p, n) == 0]
    if slope == 0:
        if const == 0:
            return NSet.all_except(n for n in range(1, m) if n not in below)
        return NSet.finite(below)
    n0, r = divmod(-const, slope)
    tail = [n0] if r == 0 and n0 >= m else []
    return NSet.finite(below + tail)


def vanishing_locus(G: FPFunctor) -> ClosedSet:
    """The points where ``G`` vanishes.

    Finite points come from the zeros of the Hilbert function, Prufer points
    from the support of the defect, adic points from the support of the
    covariant defect, and ``Q`` from the rank.
    """
    hilb = hilbert_data(G)
    return ClosedSet(
        q=hilb.rank == 0,
        a=_support_complement(covdefect(G)),
        pset=_support_complement(defect(G)),
        f_default="all" if hilb.rank == 0 else "none",
        f_exceptions={p: _hilbert_zeros(hilb, p) for p in hilb.primes()},
    )


def serre_member(G: FPFunctor, X: ClosedSet) -> bool:
    """Whether ``G`` lies in the Serre subcategory of functors vanishing on ``X``.

    Raises:
        NotClosedError: if ``X`` is not closed.
    """
    if not is_closed(X):
        raise NotClosedError("the point set is not closed")
    return is_subset(X, vanishing_locus(G))
