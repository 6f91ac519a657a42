"""JSON formats, the module mini-DSL, and the invariants report.

Ring elements are written as decimal strings so that no precision is lost.
JSON is emitted canonically (sorted keys, two-space indent), so emitting a
parsed document reproduces it byte for byte.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from . import linalg
from .errors import (
    DimensionError,
    MalformedInputError,
    NotWellDefinedError,
    UnsupportedRingError,
)
from .functors import FPFunctor, covdefect, defect
from .invariants import K0Class, hilbert_data, lmc, rmc
from .modules import FPModule, ModuleMorphism, StructureInvariants, annihilator
from .ziegler import ClosedSet, NSet, PrimeSet, vanishing_locus

RING_TAG = "ZZ"


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _int(x, what="integer") -> int:
    if isinstance(x, bool):
        raise MalformedInputError(f"expected {what}, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str) and re.fullmatch(r"\s*-?\d+\s*", x):
        return int(x)
    raise MalformedInputError(f"expected {what} as a decimal string, got {x!r}")


def _get(obj, key, kind=None):
    if not isinstance(obj, dict) or key not in obj:
        raise MalformedInputError(f"missing key {key!r}")
    value = obj[key]
    if kind is not None and not isinstance(value, kind):
        raise MalformedInputError(f"key {key!r} has the wrong type")
    return value


def matrix_to_json(A) -> list:
    return [[str(int(x)) for x in row] for row in A]


def matrix_from_json(rows, shape) -> "linalg.np.ndarray":
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise MalformedInputError("a matrix is an array of rows")
    m, n = shape
    if m == 0:
        if rows and any(rows):
            raise MalformedInputError("rows given for a matrix with no rows")
        return linalg.zeros(0, n or 0)
    if len(rows) != m:
        raise MalformedInputError(f"expected {m} rows, got {len(rows)}")
    if n is None:
        n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise MalformedInputError("ragged matrix")
    return linalg.matrix([[_int(x, "matrix entry") for x in r] for r in rows], (m, n))


# modules


def module_to_json(M: FPModule) -> dict:
    return {"generators": M.generators, "relations": matrix_to_json(M.relations)}


def module_from_json(obj) -> FPModule:
    g = _int(_get(obj, "generators"), "generator count")
    if g < 0:
        raise MalformedInputError("negative generator count")
    rows = _get(obj, "relations", list)
    return FPModule(g, matrix_from_json(rows, (g, None)))


_TERM = re.compile(r"^(?:0|Z(?:/(\d+))?(?:\^(\d+))?)$")


def parse_module(text: str) -> FPModule:
    """Parse the mini-DSL: ``"Z/8+Z/2+Z"``, ``"Z^2"``, ``"0"``."""
    orders = []
    for term in text.replace(" ", "").split("+"):
        match = _TERM.match(term)
        if not match:
            raise MalformedInputError(f"cannot parse module term {term!r}")
        if term == "0":
            continue
        d = int(match.group(1)) if match.group(1) else 0
        if match.group(1) and d == 0:
            raise MalformedInputError("Z/0 is ambiguous; write Z")
        orders += [d] * (int(match.group(2)) if match.group(2) else 1)
    return FPModule.from_orders(orders)


def invariants_to_json(inv: StructureInvariants) -> dict:
    return {
        "free_rank": str(inv.free_rank),
        "torsion": [
            {"p": str(p), "l": l, "mult": m} for (p, l), m in sorted(inv.torsion.items())
        ],
    }


def invariants_from_json(obj) -> StructureInvariants:
    torsion = {}
    for e in _get(obj, "torsion", list):
        torsion[(_int(_get(e, "p")), _int(_get(e, "l")))] = _int(_get(e, "mult"))
    return StructureInvariants(_int(_get(obj, "free_rank")), torsion)


# functors


def functor_to_json(G: FPFunctor) -> dict:
    return {
        "ring": RING_TAG,
        "A": module_to_json(G.A),
        "B": module_to_json(G.B),
        "alpha": matrix_to_json(G.alpha.matrix),
    }


def functor_from_json(obj) -> FPFunctor:
    ring = _get(obj, "ring")
    if ring != RING_TAG:
        raise UnsupportedRingError(f"unsupported ring {ring!r}; only {RING_TAG!r}")
    A = module_from_json(_get(obj, "A"))
    B = module_from_json(_get(obj, "B"))
    alpha = matrix_from_json(_get(obj, "alpha", list), (B.generators, A.generators))
    try:
        return FPFunctor(ModuleMorphism(A, B, alpha))
    except (NotWellDefinedError, DimensionError) as exc:
        raise MalformedInputError(f"alpha is not a morphism A -> B: {exc}") from exc


# K0 classes


def k0_to_json(c: K0Class) -> dict:
    return {
        "pr": c.pr,
        "torsion": [{"p": str(p), "l": l, "mult": m} for (p, l), m in c.torsion.items()],
    }


def k0_from_json(obj) -> K0Class:
    torsion = {}
    for e in _get(obj, "torsion", list):
        key = (_int(_get(e, "p")), _int(_get(e, "l")))
        torsion[key] = torsion.get(key, 0) + _int(_get(e, "mult"))
    return K0Class(_int(_get(obj, "pr")), torsion)


# closed sets


def _primeset_to_json(ps: PrimeSet) -> dict:
    return {"mode": ps.mode, "primes": [str(p) for p in ps.primes]}


def _mode(obj) -> bool:
    mode = _get(obj, "mode")
    if mode not in ("finite", "cofinite"):
        raise MalformedInputError(f"mode must be finite or cofinite, got {mode!r}")
    return mode == "cofinite"


def _primeset_from_json(obj) -> PrimeSet:
    try:
        return PrimeSet(_mode(obj), tuple(_int(p) for p in _get(obj, "primes", list)))
    except ValueError as exc:
        raise MalformedInputError(str(exc)) from exc


def closed_set_to_json(S: ClosedSet) -> dict:
    return {
        "q": S.q,
        "a": _primeset_to_json(S.a),
        "p": _primeset_to_json(S.pset),
        "f_default": S.f_default,
        "f_exceptions": [
            {"prime": str(p), "mode": ns.mode, "ns": list(ns.items)}
            for p, ns in S.f_exceptions
        ],
    }


def closed_set_from_json(obj) -> ClosedSet:
    q = _get(obj, "q", bool)
    exceptions = {}
    try:
        for e in _get(obj, "f_exceptions", list):
            ns = NSet(_mode(e), tuple(_int(n) for n in _get(e, "ns", list)))
            exceptions[_int(_get(e, "prime"))] = ns
        return ClosedSet(
            q,
            _primeset_from_json(_get(obj, "a")),
            _primeset_from_json(_get(obj, "p")),
            _get(obj, "f_default", str),
            exceptions,
        )
    except MalformedInputError:
        raise
    except ValueError as exc:
        raise MalformedInputError(str(exc)) from exc


# reports


@dataclass(frozen=True)
class ModuleSummary:
    invariants: StructureInvariants
    annihilator: int

    @classmethod
    def of(cls, M: FPModule) -> ModuleSummary:
        return cls(M.invariants, annihilator(M))

    def to_json(self) -> dict:
        return {
            "annihilator": str(self.annihilator),
            "structure": invariants_to_json(self.invariants),
            "display": str(self.invariants),
        }

    @classmethod
    def from_json(cls, obj) -> ModuleSummary:
        return cls(invariants_from_json(_get(obj, "structure")), _int(_get(obj, "annihilator")))


@dataclass(frozen=True)
class HilbertRow:
    prime: int
    slope: int
    constant: int
    threshold: int
    values: tuple

    def to_json(self) -> dict:
        return {
            "prime": str(self.prime),
            "polynomial": {
                "slope": str(self.slope),
                "constant": str(self.constant),
                "threshold": str(self.threshold),
            },
            "values": [str(v) for v in self.values],
        }

    @classmethod
    def from_json(cls, obj) -> HilbertRow:
        poly = _get(obj, "polynomial")
        return cls(
            _int(_get(obj, "prime")),
            _int(_get(poly, "slope")),
            _int(_get(poly, "constant")),
            _int(_get(poly, "threshold")),
            tuple(_int(v) for v in _get(obj, "values", list)),
        )


@dataclass(frozen=True)
class Report:
    """Everything the ``invariants`` subcommand prints about one functor.

    ``hilbert`` lists, for each prime in the torsion support, the polynomial
    and the values ``Hilb(p, 1..threshold+1)``.
    """

    functor: str
    rank: int
    lmc: K0Class
    rmc: K0Class
    defect: ModuleSummary
    covdefect: ModuleSummary
    hilbert: tuple
    vanishing_locus: ClosedSet

    @classmethod
    def build(cls, G: FPFunctor, name: str = "<functor>") -> Report:
        hilb = hilbert_data(G)
        rows = []
        for p in hilb.primes():
            slope, const, m = hilb.polynomial(p)
            rows.append(HilbertRow(p, slope, const, m, tuple(hilb(p, n) for n in range(1, m + 2))))
        return cls(
            functor=name,
            rank=hilb.rank,
            lmc=lmc(G),
            rmc=rmc(G),
            defect=ModuleSummary.of(defect(G)),
            covdefect=ModuleSummary.of(covdefect(G)),
            hilbert=tuple(rows),
            vanishing_locus=vanishing_locus(G),
        )

    def to_json(self) -> dict:
        return {
            "functor": self.functor,
            "rank": str(self.rank),
            "lmc": k0_to_json(self.lmc),
            "rmc": k0_to_json(self.rmc),
            "defect": self.defect.to_json(),
            "covdefect": self.covdefect.to_json(),
            "hilbert": [row.to_json() for row in self.hilbert],
            "vanishing_locus": closed_set_to_json(self.vanishing_locus),
        }

    @classmethod
    def from_json(cls, obj) -> Report:
        return cls(
            functor=_get(obj, "functor", str),
            rank=_int(_get(obj, "rank")),
            lmc=k0_from_json(_get(obj, "lmc")),
            rmc=k0_from_json(_get(obj, "rmc")),
            defect=ModuleSummary.from_json(_get(obj, "defect")),
            covdefect=ModuleSummary.from_json(_get(obj, "covdefect")),
            hilbert=tuple(HilbertRow.from_json(r) for r in _get(obj, "hilbert", list)),
            vanishing_locus=closed_set_from_json(_get(obj, "vanishing_locus")),
        )

    def to_text(self) -> str:
        def k0(c: K0Class) -> str:
            terms = [f"{m:+d}[Z/{p}^{l}]" for (p, l), m in c.torsion.items()]
            return " ".join([f"{c.pr}[Z]"] + terms)

        lines = [
            f"functor    : {self.functor}",
            f"rank       : {self.rank}",
            f"lmc        : {k0(self.lmc)}",
            f"rmc        : {k0(self.rmc)}",
            f"defect     : {self.defect.invariants} (annihilator {self.defect.annihilator})",
            f"covdefect  : {self.covdefect.invariants} (annihilator {self.covdefect.annihilator})",
        ]
        for row in self.hilbert:
            values = ", ".join(str(v) for v in row.values)
            lines.append(
                f"hilbert p={row.prime}: {values}; polynomial {row.slope}*n + {row.constant}"
                f" for n >= {row.threshold}"
            )
        if not self.hilbert:
            lines.append(f"hilbert    : {self.rank}*n at every prime")
        lines.append("vanishing locus:")
        lines += ["  " + line for line in self.vanishing_locus.describe().splitlines()]
        return "\n".join(lines) + "\n"


def load_json_file(path) -> object:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise MalformedInputError(f"{path}: {exc}") from exc
