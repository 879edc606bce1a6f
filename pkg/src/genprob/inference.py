"""Conditioning, Bayes, total probability and the subtractive event formulas.

Conditioning solves ``x * P(B) = P(A & B)`` for ``x``.  With a
multiplicative group the solution is the quotient; without one the
structure's residuation supplies the greatest ``x`` with
``x * P(B) <= P(A & B)`` and the result records whether it actually solves
the equation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .algebra import Capability
from .errors import (
    CapabilityMissing,
    EmptyIntersection,
    NotAPartition,
    NotMeasurable,
    UnresolvableTerm,
    ZeroCondition,
)
from .measure import AbstractProbabilityMeasure
from .space import Event

__all__ = [
    "ConditioningResult",
    "conditional",
    "bayes",
    "total_probability",
    "complement_prob",
    "union_prob",
    "difference_prob",
]

UNIQUE = "unique"
RESIDUATED = "residuated"
UNCONDITIONABLE = "unconditionable"


@dataclass(frozen=True)
class ConditioningResult:
    kind: str
    value: Any = None
    verified: bool = False
    reason: str | None = None

    @classmethod
    def unique(cls, value):
        return cls(UNIQUE, value, True)

    @classmethod
    def residuated(cls, value, verified):
        return cls(RESIDUATED, value, bool(verified))

    @classmethod
    def unconditionable(cls, reason):
        return cls(UNCONDITIONABLE, reason=reason)

    @property
    def resolved(self) -> bool:
        """True for a unique value or a verified residuated one."""
        return self.kind != UNCONDITIONABLE and self.verified

    def describe(self) -> str:
        if self.kind == RESIDUATED:
            return f"residuated, verified={'true' if self.verified else 'false'}"
        if self.kind == UNCONDITIONABLE:
            return f"unconditionable ({self.reason})"
        return self.kind


def _require_measurable(P, *events):
    for e in events:
        if not P.algebra.is_measurable(e):
            raise NotMeasurable(f"{e!r} is not measurable")


def _solve(P: AbstractProbabilityMeasure, joint, given) -> ConditioningResult:
    """Solve ``x * given = joint``."""
    s = P.structure
    if s.has(Capability.MULTIPLICATIVE_GROUP):
        if s.is_zero(given):
            raise ZeroCondition("conditioning event has zero probability")
        return ConditioningResult.unique(s.div(joint, given))
    if s.has(Capability.HAS_RESIDUATION):
        x = s.residuate(joint, given)
        return ConditioningResult.residuated(x, s.eq(s.mul(x, given), joint))
    return ConditioningResult.unconditionable(f"{s.name} has neither inverses nor residuation")


def conditional(P: AbstractProbabilityMeasure, A: Event, B: Event) -> ConditioningResult:
    """Probability of A given B."""
    _require_measurable(P, A, B)
    both = A & B
    if not both:
        raise EmptyIntersection(f"{A!r} and {B!r} are disjoint")
    return _solve(P, P.prob(both), P.prob(B))


def bayes(P: AbstractProbabilityMeasure, A: Event, B: Event) -> ConditioningResult:
    """Probability of B given A, routed through P(A given B).

    With a multiplicative group this is ``(P(A|B) * P(B)) / P(A)``.
    Otherwise B is conditioned on A directly and ``verified`` additionally
    requires the symmetric identity ``P(B|A) * P(A) = P(A|B) * P(B)``.
    """
    s = P.structure
    a_given_b = conditional(P, A, B)
    p_a, p_b = P.prob(A), P.prob(B)
    if s.has(Capability.MULTIPLICATIVE_GROUP):
        if s.is_zero(p_a):
            raise ZeroCondition(f"P({A!r}) is zero")
        return ConditioningResult.unique(s.div(s.mul(a_given_b.value, p_b), p_a))
    b_given_a = conditional(P, B, A)
    if b_given_a.kind == UNCONDITIONABLE or a_given_b.kind == UNCONDITIONABLE:
        return b_given_a if b_given_a.kind == UNCONDITIONABLE else a_given_b
    symmetric = s.eq(s.mul(b_given_a.value, p_a), s.mul(a_given_b.value, p_b))
    return ConditioningResult.residuated(
        b_given_a.value, b_given_a.verified and a_given_b.verified and symmetric
    )


def _check_partition(P, cells: Sequence[Event]):
    space = P.space
    if not cells:
        raise NotAPartition("empty partition")
    covered = 0
    for i, h in enumerate(cells):
        if h.space != space:
            raise NotAPartition(f"cell {i} belongs to another space")
        if not P.algebra.is_measurable(h):
            raise NotAPartition(f"cell {i} {h!r} is not measurable")
        if h.bits & covered:
            raise NotAPartition(f"cell {i} {h!r} overlaps an earlier cell")
        covered |= h.bits
    if covered != space.full_mask:
        raise NotAPartition("cells do not cover the sample space")


def total_probability(P: AbstractProbabilityMeasure, A: Event, cells: Sequence[Event]):
    """Fold of ``P(H_i) * P(A | H_i)`` over a partition ``cells``.

    A cell disjoint from A, or one of probability zero, contributes zero
    directly: its term must equal ``P(A & H_i)``, which is zero there.
    """
    s = P.structure
    cells = list(cells)
    _check_partition(P, cells)
    _require_measurable(P, A)
    terms = []
    for i, h in enumerate(cells):
        p_h = P.prob(h)
        if not (A & h) or s.is_zero(p_h):
            terms.append(s.zero)
            continue
        cond = conditional(P, A, h)
        if not cond.resolved:
            raise UnresolvableTerm(i, f"cell {i} {h!r}: {cond.describe()}")
        terms.append(s.mul(p_h, cond.value))
    return s.fold_add(terms)


def complement_prob(P: AbstractProbabilityMeasure, A: Event):
    s = P.structure
    if not s.has(Capability.ADDITIVE_GROUP):
        raise CapabilityMissing(f"{s.name} has no additive inverse")
    return s.sub(s.one, P.prob(A))


def union_prob(P: AbstractProbabilityMeasure, A: Event, B: Event):
    s = P.structure
    if not s.has(Capability.ADDITIVE_GROUP):
        raise CapabilityMissing(f"{s.name} has no additive inverse")
    return s.sub(s.add(P.prob(A), P.prob(B)), P.prob(A & B))


def difference_prob(P: AbstractProbabilityMeasure, B: Event, A: Event):
    """``P(B) - P(A)`` for ``A`` inside ``B``."""
    s = P.structure
    if not A <= B:
        raise ValueError(f"{A!r} is not a subset of {B!r}")
    return s.sub(P.prob(B), P.prob(A))
