"""Finite sample spaces, bitset events and atom-generated sigma-algebras."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import NotMeasurable, SpaceMismatch

__all__ = [
    "SampleSpace",
    "Event",
    "SigmaAlgebra",
    "power_set_algebra",
    "generate_algebra",
]


@dataclass(frozen=True)
class SampleSpace:
    outcomes: tuple
    index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        outcomes = tuple(str(o) for o in self.outcomes)
        if not outcomes:
            raise ValueError("sample space must be non-empty")
        if len(set(outcomes)) != len(outcomes):
            raise ValueError("outcome labels must be unique")
        object.__setattr__(self, "outcomes", outcomes)
        object.__setattr__(self, "index", {o: i for i, o in enumerate(outcomes)})

    def __len__(self):
        return len(self.outcomes)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.outcomes)) - 1

    def event(self, labels: Iterable[str] = ()) -> "Event":
        bits = 0
        for label in labels:
            try:
                bits |= 1 << self.index[str(label)]
            except KeyError:
                raise KeyError(f"unknown outcome {label!r}") from None
        return Event(self, bits)

    def from_indices(self, indices: Iterable[int]) -> "Event":
        bits = 0
        for i in indices:
            bits |= 1 << i
        return Event(self, bits)

    def empty(self) -> "Event":
        return Event(self, 0)

    def full(self) -> "Event":
        return Event(self, self.full_mask)

    def all_events(self) -> Iterator["Event"]:
        for bits in range(1 << len(self)):
            yield Event(self, bits)


@dataclass(frozen=True)
class Event:
    """A subset of a sample space stored as an integer bitset."""

    space: SampleSpace
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits > self.space.full_mask:
            raise ValueError("bitset does not fit the sample space")

    def _other(self, other: "Event") -> int:
        if not isinstance(other, Event):
            raise TypeError(f"expected Event, got {type(other).__name__}")
        if other.space != self.space:
            raise SpaceMismatch("events belong to different sample spaces")
        return other.bits

    def __or__(self, other):
        return Event(self.space, self.bits | self._other(other))

    def __and__(self, other):
        return Event(self.space, self.bits & self._other(other))

    def __sub__(self, other):
        return Event(self.space, self.bits & ~self._other(other))

    def __invert__(self):
        return Event(self.space, self.space.full_mask & ~self.bits)

    union = __or__
    intersection = __and__
    difference = __sub__
    complement = __invert__

    def __le__(self, other):
        return self.bits & ~self._other(other) == 0

    def __ge__(self, other):
        return other <= self

    def issubset(self, other) -> bool:
        return self <= other

    def isdisjoint(self, other) -> bool:
        return self.bits & self._other(other) == 0

    def __bool__(self):
        return self.bits != 0

    def __len__(self):
        return bin(self.bits).count("1")

    def __contains__(self, index: int) -> bool:
        return bool(self.bits >> index & 1)

    @property
    def indices(self) -> tuple:
        return tuple(i for i in range(len(self.space)) if self.bits >> i & 1)

    @property
    def labels(self) -> tuple:
        return tuple(self.space.outcomes[i] for i in self.indices)

    def __repr__(self):
        return "{" + ",".join(self.labels) + "}"


@dataclass(frozen=True)
class SigmaAlgebra:
    """A finite sigma-algebra described by its atoms (a partition of the space)."""

    space: SampleSpace
    atoms: tuple
    _atom_of: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        atoms = tuple(self.atoms)
        seen = 0
        for atom in atoms:
            if atom.space != self.space:
                raise SpaceMismatch("atom from a different sample space")
            if not atom:
                raise ValueError("atoms must be non-empty")
            if atom.bits & seen:
                raise ValueError("atoms must be pairwise disjoint")
            seen |= atom.bits
        if seen != self.space.full_mask:
            raise ValueError("atoms must cover the sample space")
        # canonical order: by lowest member index
        atoms = tuple(sorted(atoms, key=lambda a: a.indices[0]))
        object.__setattr__(self, "atoms", atoms)
        owner = [0] * len(self.space)
        for k, atom in enumerate(atoms):
            for i in atom.indices:
                owner[i] = k
        object.__setattr__(self, "_atom_of", tuple(owner))

    def __len__(self):
        return len(self.atoms)

    def atom_of(self, outcome: int) -> int:
        """Index of the atom containing outcome index ``outcome``."""
        return self._atom_of[outcome]

    def atoms_in(self, event: Event) -> list[int]:
        """Indices of atoms inside ``event``; raises if ``event`` is not measurable."""
        if event.space != self.space:
            raise SpaceMismatch("event from a different sample space")
        inside, covered = [], 0
        for k, atom in enumerate(self.atoms):
            if atom.bits & event.bits == atom.bits:
                inside.append(k)
                covered |= atom.bits
        if covered != event.bits:
            raise NotMeasurable(f"{event!r} is not a union of atoms")
        return inside

    def is_measurable(self, event: Event) -> bool:
        try:
            self.atoms_in(event)
        except NotMeasurable:
            return False
        return True

    def union_of(self, atom_indices: Iterable[int]) -> Event:
        bits = 0
        for k in atom_indices:
            bits |= self.atoms[k].bits
        return Event(self.space, bits)

    def events(self) -> Iterator[Event]:
        """Every measurable event, 2**len(atoms) of them."""
        n = len(self.atoms)
        for mask in range(1 << n):
            yield self.union_of(k for k in range(n) if mask >> k & 1)


def power_set_algebra(space: SampleSpace) -> SigmaAlgebra:
    return SigmaAlgebra(space, tuple(Event(space, 1 << i) for i in range(len(space))))


def generate_algebra(space: SampleSpace, generators: Iterable[Event]) -> SigmaAlgebra:
    """Smallest sigma-algebra containing ``generators``.

    Outcomes are grouped by their membership signature across the
    generators; each group is an atom.
    """
    generators = list(generators)
    for g in generators:
        if g.space != space:
            raise SpaceMismatch("generator from a different sample space")
    cells: dict[tuple, int] = {}
    for i in range(len(space)):
        signature = tuple(i in g for g in generators)
        cells[signature] = cells.get(signature, 0) | 1 << i
    algebra = SigmaAlgebra(space, tuple(Event(space, bits) for bits in cells.values()))
    assert all(algebra.is_measurable(g) for g in generators)
    return algebra
