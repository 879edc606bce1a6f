"""Abstract measures and abstract probability measures on finite spaces.

A measure is stored as one carrier value per atom of its sigma-algebra and
extended to measurable events by folding the addition over the atoms the
event contains, so additivity over disjoint events holds by construction.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .algebra import StructureDescriptor
from .errors import EmptyIntersection, NegativeWeight, NotNormalized
from .space import Event, SigmaAlgebra

__all__ = [
    "AbstractMeasure",
    "AbstractProbabilityMeasure",
    "make_measure",
    "make_probability",
    "atom_weights_from_outcomes",
    "is_independent",
]


class AbstractMeasure:
    """Carrier-valued measure defined by per-atom weights."""

    def __init__(self, structure: StructureDescriptor, algebra: SigmaAlgebra, atom_weights: Sequence):
        atom_weights = tuple(atom_weights)
        if len(atom_weights) != len(algebra.atoms):
            raise ValueError(f"expected {len(algebra.atoms)} atom weights, got {len(atom_weights)}")
        for atom, w in zip(algebra.atoms, atom_weights):
            if structure.lt(w, structure.zero):
                raise NegativeWeight(f"weight {structure.format(w)} on atom {atom!r} is below zero")
        self.structure = structure
        self.algebra = algebra
        self.atom_weights = atom_weights

    @property
    def space(self):
        return self.algebra.space

    def measure(self, event: Event):
        weights = self.atom_weights
        return self.structure.fold_add(weights[k] for k in self.algebra.atoms_in(event))

    __call__ = measure

    def total(self):
        return self.structure.fold_add(self.atom_weights)

    def __repr__(self):
        s = self.structure
        body = ", ".join(f"{a!r}: {s.format(w)}" for a, w in zip(self.algebra.atoms, self.atom_weights))
        return f"{type(self).__name__}({s.name}; {body})"


class AbstractProbabilityMeasure(AbstractMeasure):
    """Measure whose atom weights lie in [0, 1] and fold to exactly 1."""

    def __init__(self, structure, algebra, atom_weights):
        super().__init__(structure, algebra, atom_weights)
        s = structure
        total = self.total()
        if not s.eq(total, s.one):
            raise NotNormalized(f"total mass {s.format(total)} is not {s.format(s.one)}")
        for atom, w in zip(algebra.atoms, self.atom_weights):
            if s.gt(w, s.one):
                raise NotNormalized(f"weight {s.format(w)} on atom {atom!r} exceeds one")

    def prob(self, event: Event):
        return self.measure(event)


def make_measure(structure, algebra, atom_weights) -> AbstractMeasure:
    return AbstractMeasure(structure, algebra, atom_weights)


def make_probability(structure, algebra, atom_weights) -> AbstractProbabilityMeasure:
    return AbstractProbabilityMeasure(structure, algebra, atom_weights)


def atom_weights_from_outcomes(structure, algebra: SigmaAlgebra, weights: Mapping[str, object]) -> list:
    """Fold per-outcome weights into per-atom weights."""
    space = algebra.space
    out = []
    for atom in algebra.atoms:
        ws = [weights[space.outcomes[i]] for i in atom.indices]
        for label, w in zip(atom.labels, ws):
            if structure.lt(w, structure.zero):
                raise NegativeWeight(f"weight {structure.format(w)} on outcome {label!r} is below zero")
        out.append(structure.fold_add(ws))
    return out


def is_independent(P: AbstractProbabilityMeasure, A: Event, B: Event) -> bool:
    """Whether P(A & B) equals P(A) * P(B).

    The independence predicate is only stated for overlapping events, so a
    disjoint pair raises :class:`EmptyIntersection` rather than answering.
    """
    s = P.structure
    both = A & B
    p_a, p_b = P.prob(A), P.prob(B)
    if not both:
        raise EmptyIntersection(f"{A!r} and {B!r} are disjoint")
    return s.eq(P.prob(both), s.mul(p_a, p_b))
