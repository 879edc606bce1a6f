"""Concrete structures: Kolmogorov, possibility, Viterbi and Boolean."""

from __future__ import annotations

import operator
from fractions import Fraction

from .algebra import Capability, StructureDescriptor
from .errors import ParseError, UnknownInstance

__all__ = [
    "classical_rational",
    "classical_float",
    "possibility",
    "viterbi",
    "boolean",
    "REGISTRY",
    "get_structure",
]

_ALL = frozenset(Capability) - {Capability.HAS_RESIDUATION}


def _unit_fraction_sampler(denominators):
    def sample(rng):
        r = rng.random()
        if r < 0.1:
            return Fraction(0)
        if r < 0.2:
            return Fraction(1)
        d = rng.choice(denominators)
        return Fraction(rng.randint(0, d), d)

    return sample


def _unit_decimal_sampler(rng):
    r = rng.random()
    if r < 0.1:
        return Fraction(0)
    if r < 0.2:
        return Fraction(1)
    return Fraction(rng.randint(0, 100), 100)


def _unit_float_sampler(rng):
    r = rng.random()
    if r < 0.1:
        return 0.0
    if r < 0.2:
        return 1.0
    return rng.random()


def _unit_parse(text):
    value = Fraction(str(text).strip())
    if not 0 <= value <= 1:
        raise ParseError(f"value {text!r} outside [0, 1]")
    return value


def _godel_residuum(a, b):
    # greatest x in [0, 1] with min(x, b) <= a
    return type(a)(1) if b <= a else a


def _product_residuum(a, b):
    # greatest x in [0, 1] with x * b <= a
    if b <= a:
        return Fraction(1)
    return Fraction(a) / Fraction(b)


def classical_rational() -> StructureDescriptor:
    """The rational field with the usual order; exact arithmetic."""
    return StructureDescriptor(
        name="classical-rational",
        add=operator.add,
        mul=operator.mul,
        zero=Fraction(0),
        one=Fraction(1),
        neg=operator.neg,
        recip=lambda a: 1 / Fraction(a),
        capabilities=_ALL,
        sampler=_unit_fraction_sampler((1, 2, 3, 4, 5, 6, 8, 10, 12)),
        kind="rational",
    )


def classical_float(tolerance: float = 1e-9) -> StructureDescriptor:
    """Real field on IEEE doubles; equality up to an absolute tolerance."""
    return StructureDescriptor(
        name="classical-float",
        add=operator.add,
        mul=operator.mul,
        zero=0.0,
        one=1.0,
        neg=operator.neg,
        recip=lambda a: 1.0 / a,
        capabilities=_ALL,
        sampler=_unit_float_sampler,
        tolerance=tolerance,
        kind="float",
        parse=lambda text: float(Fraction(str(text).strip())),
    )


def possibility() -> StructureDescriptor:
    """([0, 1], max, min): the possibility-measure case."""
    return StructureDescriptor(
        name="possibility",
        add=max,
        mul=min,
        zero=Fraction(0),
        one=Fraction(1),
        residuate=_godel_residuum,
        capabilities={Capability.DISTRIBUTIVE, Capability.HAS_RESIDUATION},
        sampler=_unit_decimal_sampler,
        kind="decimal",
        parse=_unit_parse,
    )


def viterbi() -> StructureDescriptor:
    """([0, 1], max, *): max-product; inverses live in the positive rationals."""
    return StructureDescriptor(
        name="viterbi",
        add=max,
        mul=operator.mul,
        zero=Fraction(0),
        one=Fraction(1),
        recip=lambda a: 1 / Fraction(a),
        residuate=_product_residuum,
        capabilities={
            Capability.MULTIPLICATIVE_GROUP,
            Capability.DISTRIBUTIVE,
            Capability.HAS_RESIDUATION,
        },
        sampler=_unit_decimal_sampler,
        kind="decimal",
        parse=_unit_parse,
    )


def _bool_parse(text):
    t = str(text).strip().lower()
    if t in ("1", "true"):
        return 1
    if t in ("0", "false"):
        return 0
    raise ParseError(f"not a boolean value: {text!r}")


def boolean() -> StructureDescriptor:
    """({0, 1}, or, and); 1 is its own multiplicative inverse."""
    return StructureDescriptor(
        name="boolean",
        add=operator.or_,
        mul=operator.and_,
        zero=0,
        one=1,
        recip=lambda a: 1,
        residuate=lambda a, b: 1 if b <= a else 0,
        capabilities={
            Capability.MULTIPLICATIVE_GROUP,
            Capability.DISTRIBUTIVE,
            Capability.HAS_RESIDUATION,
        },
        sampler=lambda rng: rng.randint(0, 1),
        kind="boolean",
        parse=_bool_parse,
    )


REGISTRY = {
    "classical-rational": classical_rational,
    "classical-float": classical_float,
    "possibility": possibility,
    "viterbi": viterbi,
    "boolean": boolean,
}


def get_structure(name: str, tolerance: float | None = None) -> StructureDescriptor:
    try:
        factory = REGISTRY[name]
    except KeyError:
        raise UnknownInstance(f"unknown instance {name!r}; choose from {sorted(REGISTRY)}") from None
    if tolerance is not None:
        if name != "classical-float":
            raise ParseError("--tolerance applies to float instances only")
        return factory(tolerance=tolerance)
    return factory()
