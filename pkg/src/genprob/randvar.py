"""Carrier-valued random variables on finite spaces and their distributions."""

from __future__ import annotations

from functools import cmp_to_key
from typing import Iterable, Mapping, Sequence

from .errors import EmptyIntersection, NotMeasurable, SpaceMismatch
from .inference import ConditioningResult, _solve, conditional
from .measure import AbstractProbabilityMeasure, make_probability
from .space import Event, SampleSpace, SigmaAlgebra, power_set_algebra

__all__ = [
    "RandomVariable",
    "preimage",
    "pushforward",
    "joint",
    "rv_independent",
    "conditional_distribution",
    "conditional_distribution_literal",
    "distribution",
]


class RandomVariable:
    """One carrier value per atom, hence measurable by construction."""

    def __init__(self, algebra: SigmaAlgebra, values: Sequence):
        values = tuple(values)
        if len(values) != len(algebra.atoms):
            raise ValueError(f"expected {len(algebra.atoms)} atom values, got {len(values)}")
        self.algebra = algebra
        self.values = values

    @classmethod
    def from_outcomes(cls, structure, algebra: SigmaAlgebra, table: Mapping[str, object]) -> "RandomVariable":
        """Build from an outcome -> value table, which must be constant on atoms."""
        space = algebra.space
        missing = [o for o in space.outcomes if o not in table]
        if missing:
            raise KeyError(f"no value for outcomes {missing}")
        values = []
        for atom in algebra.atoms:
            vals = [table[space.outcomes[i]] for i in atom.indices]
            if any(not structure.eq(v, vals[0]) for v in vals[1:]):
                raise NotMeasurable(f"variable is not constant on atom {atom!r}")
            values.append(vals[0])
        return cls(algebra, values)

    @classmethod
    def constant(cls, algebra: SigmaAlgebra, value) -> "RandomVariable":
        return cls(algebra, [value] * len(algebra.atoms))

    @property
    def space(self) -> SampleSpace:
        return self.algebra.space

    def __call__(self, outcome: int):
        return self.values[self.algebra.atom_of(outcome)]

    def map(self, fn) -> "RandomVariable":
        return RandomVariable(self.algebra, [fn(v) for v in self.values])

    def range(self, structure) -> list:
        """Distinct values, ascending in the structure's order."""
        out = []
        for v in sorted(self.values, key=cmp_to_key(structure.compare)):
            if not out or not structure.eq(out[-1], v):
                out.append(v)
        return out

    def __repr__(self):
        return f"RandomVariable({list(self.values)!r})"


def values_on(P: AbstractProbabilityMeasure, f: RandomVariable) -> list:
    """Value of ``f`` on each atom of ``P``'s algebra.

    ``f`` may live on a coarser algebra of the same space; it must be
    constant on every atom of ``P``'s algebra.
    """
    if f.space != P.space:
        raise SpaceMismatch("variable and measure live on different spaces")
    if f.algebra == P.algebra:
        return list(f.values)
    s = P.structure
    out = []
    for atom in P.algebra.atoms:
        vals = [f(i) for i in atom.indices]
        if any(not s.eq(v, vals[0]) for v in vals[1:]):
            raise NotMeasurable(f"variable is not constant on atom {atom!r}")
        out.append(vals[0])
    return out


def preimage(structure, X: RandomVariable, values: Iterable) -> Event:
    """The event ``{X in values}``; membership uses the structure's equality."""
    values = list(values)
    hit = [k for k, v in enumerate(X.values) if any(structure.eq(v, w) for w in values)]
    return X.algebra.union_of(hit)


def pushforward(P: AbstractProbabilityMeasure, X: RandomVariable, values: Iterable):
    return P.prob(preimage(P.structure, X, values))


def joint(P: AbstractProbabilityMeasure, X: RandomVariable, Y: RandomVariable, A: Iterable, B: Iterable):
    s = P.structure
    return P.prob(preimage(s, X, A) & preimage(s, Y, B))


def rv_independent(P, X, Y, A, B) -> bool:
    s = P.structure
    ea, eb = preimage(s, X, A), preimage(s, Y, B)
    if not (ea & eb):
        raise EmptyIntersection("{X in A} and {Y in B} are disjoint")
    return s.eq(P.prob(ea & eb), s.mul(P.prob(ea), P.prob(eb)))


def conditional_distribution(P, X, A, Y, B) -> ConditioningResult:
    """Probability of ``{X in A}`` given ``{Y in B}``.

    The result ``x`` satisfies ``joint(X in A, Y in B) = x * P(Y in B)``.
    """
    s = P.structure
    return conditional(P, preimage(s, X, A), preimage(s, Y, B))


def conditional_distribution_literal(P, X, A, Y, B) -> ConditioningResult:
    """Solution of ``joint(X in A, Y in B) = P(X in A) * x``.

    This divides by the marginal of X rather than of Y.  It agrees with
    :func:`conditional_distribution` only when ``P(X in A) = P(Y in B)``;
    it is kept as a diagnostic.
    """
    s = P.structure
    ea, eb = preimage(s, X, A), preimage(s, Y, B)
    if not (ea & eb):
        raise EmptyIntersection("{X in A} and {Y in B} are disjoint")
    return _solve(P, P.prob(ea & eb), P.prob(ea))


def distribution(P: AbstractProbabilityMeasure, X: RandomVariable) -> AbstractProbabilityMeasure:
    """The induced measure on the range of ``X`` (power-set algebra).

    Outcome labels of the range space are the canonical text forms of the
    values.  Construction re-runs the probability-measure validation.
    """
    s = P.structure
    values = X.range(s)
    space = SampleSpace(tuple(s.format(v) for v in values))
    weights = [pushforward(P, X, [v]) for v in values]
    return make_probability(s, power_set_algebra(space), weights)
