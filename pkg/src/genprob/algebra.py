"""Ordered algebraic structures and executable axiom checks.

A :class:`StructureDescriptor` bundles a totally ordered carrier with an
addition (the mu-monoid side), a multiplication (the nu-monoid side), their
identities, and optional inverses and residuation.  Group structure,
distributivity and residuation are advertised through :class:`Capability`
flags; derived operations refuse to run when their capability is absent.

Axiom identifiers follow the usual naming::

    MMP1-4   commutative, associative, unital, monotone addition
    NMP1-5   commutative, associative, unital multiplication with a
             biconditional annihilator, monotone on non-negative elements
    MGP1-5   additive group (MGP4 is the additive inverse)
    NGP1-6   multiplicative group (NGP4 plain annihilation, NGP5 inverse)
    DIST     multiplication distributes over addition (extension)
    RES      residuation is the greatest solution of x*b <= a (extension)
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from .errors import CapabilityMissing, DivisionByZero, LawViolation

__all__ = [
    "Capability",
    "StructureDescriptor",
    "AxiomResult",
    "LawReport",
    "AXIOMS",
    "axioms_for",
    "evaluate_axiom",
    "check_laws",
]


class Capability(enum.Enum):
    ADDITIVE_GROUP = "additive_group"
    MULTIPLICATIVE_GROUP = "multiplicative_group"
    DISTRIBUTIVE = "distributive"
    HAS_RESIDUATION = "has_residuation"


def _exact_parse(text):
    return Fraction(str(text).strip())


@dataclass(frozen=True, eq=False)
class StructureDescriptor:
    """A pluggable (S, +, *, >=) structure.

    ``tolerance`` is ``None`` for exact carriers; otherwise two values
    compare equal when they differ by at most ``tolerance`` (absolute).
    ``kind`` selects the canonical text form used by :meth:`format`.
    """

    name: str
    add: Callable[[Any, Any], Any]
    mul: Callable[[Any, Any], Any]
    zero: Any
    one: Any
    neg: Callable[[Any], Any] | None = None
    recip: Callable[[Any], Any] | None = None
    residuate: Callable[[Any, Any], Any] | None = None
    capabilities: frozenset = frozenset()
    sampler: Callable[[random.Random], Any] | None = None
    tolerance: float | None = None
    kind: str = "rational"
    parse: Callable[[Any], Any] = _exact_parse

    def __post_init__(self):
        object.__setattr__(self, "capabilities", frozenset(self.capabilities))
        if self.eq(self.zero, self.one):
            raise ValueError(f"{self.name}: zero and one must differ")
        if Capability.ADDITIVE_GROUP in self.capabilities and self.neg is None:
            raise ValueError(f"{self.name}: additive_group requires neg")
        if Capability.MULTIPLICATIVE_GROUP in self.capabilities and self.recip is None:
            raise ValueError(f"{self.name}: multiplicative_group requires recip")
        if Capability.HAS_RESIDUATION in self.capabilities and self.residuate is None:
            raise ValueError(f"{self.name}: has_residuation requires residuate")

    def __repr__(self):
        return f"StructureDescriptor({self.name!r})"

    def has(self, capability: Capability) -> bool:
        return capability in self.capabilities

    # -- order ---------------------------------------------------------

    def compare(self, a, b) -> int:
        """Sign of a - b in the structure's order: -1, 0 or 1."""
        if self.tolerance is not None and abs(a - b) <= self.tolerance:
            return 0
        return (a > b) - (a < b)

    def eq(self, a, b) -> bool:
        return self.compare(a, b) == 0

    def ge(self, a, b) -> bool:
        return self.compare(a, b) >= 0

    def gt(self, a, b) -> bool:
        return self.compare(a, b) > 0

    def le(self, a, b) -> bool:
        return self.compare(a, b) <= 0

    def lt(self, a, b) -> bool:
        return self.compare(a, b) < 0

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero)

    # -- derived operations -------------------------------------------

    def sub(self, a, b):
        if not self.has(Capability.ADDITIVE_GROUP):
            raise CapabilityMissing(f"{self.name} has no additive inverse")
        return self.add(a, self.neg(b))

    def div(self, a, b):
        if not self.has(Capability.MULTIPLICATIVE_GROUP):
            raise CapabilityMissing(f"{self.name} has no multiplicative inverse")
        if self.is_zero(b):
            raise DivisionByZero(f"{self.name}: division by zero")
        return self.mul(a, self.recip(b))

    def negate(self, a):
        if not self.has(Capability.ADDITIVE_GROUP):
            raise CapabilityMissing(f"{self.name} has no additive inverse")
        return self.neg(a)

    def fold_add(self, xs: Iterable) -> Any:
        total = self.zero
        for x in xs:
            total = self.add(total, x)
        return total

    def fold_mul(self, xs: Iterable) -> Any:
        total = self.one
        for x in xs:
            total = self.mul(total, x)
        return total

    # -- text ----------------------------------------------------------

    def format(self, value) -> str:
        """Canonical text: ``p/q`` for rationals, 12 significant digits otherwise."""
        if self.kind == "rational":
            return str(Fraction(value))
        if self.kind == "float":
            return format(float(value), ".12g")
        if self.kind == "boolean":
            return "1" if value else "0"
        return _decimal_text(Fraction(value))


def _decimal_text(x: Fraction) -> str:
    from decimal import Decimal, localcontext

    with localcontext() as ctx:
        ctx.prec = 12
        d = Decimal(x.numerator) / Decimal(x.denominator)
    if d == 0:
        return "0"
    return format(d.normalize(), "f")


# ---------------------------------------------------------------------------
# law checking
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AxiomResult:
    axiom: str
    passed: bool
    counterexample: tuple | None = None


@dataclass
class LawReport:
    structure: str
    results: list
    samples: int
    pool: tuple = field(default=(), repr=False)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, axiom: str) -> AxiomResult:
        for r in self.results:
            if r.axiom == axiom:
                return r
        raise KeyError(axiom)

    @property
    def failures(self) -> list:
        return [r for r in self.results if not r.passed]


def _nonneg(s, *xs):
    return all(s.ge(x, s.zero) for x in xs)


def _mmp1(s, a, b, c, pool):
    return s.eq(s.add(a, b), s.add(b, a))


def _mmp2(s, a, b, c, pool):
    return s.eq(s.add(a, s.add(b, c)), s.add(s.add(a, b), c))


def _mmp3(s, a, b, c, pool):
    return s.eq(s.add(a, s.zero), a) and s.eq(s.add(s.zero, a), a)


def _mmp4(s, a, b, c, pool):
    if s.lt(b, c):
        b, c = c, b
    return s.ge(s.add(a, b), s.add(a, c))


def _nmp1(s, a, b, c, pool):
    return s.eq(s.mul(a, b), s.mul(b, a))


def _nmp2(s, a, b, c, pool):
    return s.eq(s.mul(a, s.mul(b, c)), s.mul(s.mul(a, b), c))


def _nmp3(s, a, b, c, pool):
    return s.eq(s.mul(a, s.one), a) and s.eq(s.mul(s.one, a), a)


def _nmp4(s, a, b, c, pool):
    return s.is_zero(s.mul(a, b)) == (s.is_zero(a) or s.is_zero(b))


def _nmp5(s, a, b, c, pool):
    if not _nonneg(s, a, b, c):
        return True
    if s.lt(b, c):
        b, c = c, b
    return s.ge(s.mul(a, b), s.mul(a, c))


def _mgp4(s, a, b, c, pool):
    if s.neg is not None:
        n = s.neg(a)
        return s.is_zero(s.add(a, n)) and s.is_zero(s.add(n, a))
    # no inverse operation supplied: search the sample pool for a witness
    return any(s.is_zero(s.add(a, y)) and s.is_zero(s.add(y, a)) for y in pool)


def _ngp4(s, a, b, c, pool):
    return s.is_zero(s.mul(a, s.zero)) and s.is_zero(s.mul(s.zero, a))


def _ngp5(s, a, b, c, pool):
    if s.is_zero(a):
        return True
    if s.recip is not None:
        r = s.recip(a)
        return s.eq(s.mul(a, r), s.one) and s.eq(s.mul(r, a), s.one)
    return any(s.eq(s.mul(a, y), s.one) and s.eq(s.mul(y, a), s.one) for y in pool)


def _dist(s, a, b, c, pool):
    return s.eq(s.mul(a, s.add(b, c)), s.add(s.mul(a, b), s.mul(a, c)))


def _res(s, a, b, c, pool):
    x = s.residuate(a, b)
    if not s.le(s.mul(x, b), a):
        return False
    # c doubles as a probe candidate; pool members above x must overshoot
    for y in (c, *pool[:8]):
        if s.le(y, s.one) and s.gt(y, x) and s.le(s.mul(y, b), a):
            return False
        if s.lt(y, x) and not s.le(s.mul(y, b), a):
            return False
    return True


# axiom id -> (capability gate, predicate); None means always applicable
AXIOMS: dict[str, tuple[Capability | None, Callable]] = {
    "MMP1": (None, _mmp1),
    "MMP2": (None, _mmp2),
    "MMP3": (None, _mmp3),
    "MMP4": (None, _mmp4),
    "NMP1": (None, _nmp1),
    "NMP2": (None, _nmp2),
    "NMP3": (None, _nmp3),
    "NMP4": (None, _nmp4),
    "NMP5": (None, _nmp5),
    "MGP1": (Capability.ADDITIVE_GROUP, _mmp1),
    "MGP2": (Capability.ADDITIVE_GROUP, _mmp2),
    "MGP3": (Capability.ADDITIVE_GROUP, _mmp3),
    "MGP4": (Capability.ADDITIVE_GROUP, _mgp4),
    "MGP5": (Capability.ADDITIVE_GROUP, _mmp4),
    "NGP1": (Capability.MULTIPLICATIVE_GROUP, _nmp1),
    "NGP2": (Capability.MULTIPLICATIVE_GROUP, _nmp2),
    "NGP3": (Capability.MULTIPLICATIVE_GROUP, _nmp3),
    "NGP4": (Capability.MULTIPLICATIVE_GROUP, _ngp4),
    "NGP5": (Capability.MULTIPLICATIVE_GROUP, _ngp5),
    "NGP6": (Capability.MULTIPLICATIVE_GROUP, _nmp5),
    "DIST": (Capability.DISTRIBUTIVE, _dist),
    "RES": (Capability.HAS_RESIDUATION, _res),
}


def axioms_for(claimed: Iterable[Capability]) -> list[str]:
    claimed = set(claimed)
    return [ax for ax, (gate, _) in AXIOMS.items() if gate is None or gate in claimed]


def evaluate_axiom(s: StructureDescriptor, axiom: str, args: Sequence, pool: Sequence = ()) -> bool:
    """True when ``axiom`` holds at the triple ``args``."""
    a, b, c = (tuple(args) + (s.zero, s.zero, s.zero))[:3]
    _, predicate = AXIOMS[axiom]
    if axiom == "RES" and s.residuate is None:
        return False
    return bool(predicate(s, a, b, c, tuple(pool)))


def check_laws(
    s: StructureDescriptor,
    claimed: Iterable[Capability] | None = None,
    samples: int = 500,
    seed: int = 0,
) -> LawReport:
    """Sample ``samples`` random triples and test every applicable axiom.

    ``claimed`` defaults to the structure's own capability set.  Failures
    are recorded with the first violating triple, never raised.
    """
    if s.sampler is None:
        raise ValueError(f"{s.name} has no sampler")
    if samples <= 0:
        raise ValueError("samples must be positive")
    claimed = s.capabilities if claimed is None else frozenset(claimed)
    rng = random.Random(seed)
    triples = [(s.sampler(rng), s.sampler(rng), s.sampler(rng)) for _ in range(samples)]

    pool, seen = [s.zero, s.one], set()
    for t in triples:
        for v in t:
            key = repr(v)
            if key not in seen:
                seen.add(key)
                pool.append(v)
    pool = tuple(pool)

    results = []
    for axiom in axioms_for(claimed):
        failure = None
        for t in triples:
            if not evaluate_axiom(s, axiom, t, pool):
                failure = t
                break
        results.append(AxiomResult(axiom, failure is None, failure))
    return LawReport(s.name, results, samples, pool)


def require_laws(s: StructureDescriptor, claimed=None, samples: int = 500, seed: int = 0) -> LawReport:
    """Like :func:`check_laws` but raise LawViolation on the first failed axiom."""
    report = check_laws(s, claimed, samples, seed)
    for r in report.failures:
        shown = "(" + ", ".join(s.format(v) for v in r.counterexample) + ")"
        raise LawViolation(r.axiom, r.counterexample, s.name, shown)
    return report
