"""JSON model files.

Schema::

    {
      "structure": "classical-rational",        # instance id
      "outcomes": ["1", "2", ...],
      "weights": {"1": "1/6", ...},             # "p/q" strings or decimals
      "algebra": [["1", "2"], ...],             # optional generator events
      "events": {"even": ["2", "4", "6"]},
      "variables": {"X": {"1": "1/10", ...}}
    }

Schema problems raise :class:`ParseError`; measure-axiom problems raise
the measure module's errors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .algebra import StructureDescriptor
from .errors import GenProbError, NotMeasurable, ParseError
from .instances import get_structure
from .measure import AbstractProbabilityMeasure, atom_weights_from_outcomes, make_probability
from .randvar import RandomVariable
from .space import SampleSpace, SigmaAlgebra, generate_algebra, power_set_algebra

__all__ = ["Model", "load_model", "build_model"]


@dataclass
class Model:
    structure: StructureDescriptor
    space: SampleSpace
    algebra: SigmaAlgebra
    measure: AbstractProbabilityMeasure
    events: dict = field(default_factory=dict)
    variables: dict = field(default_factory=dict)
    source: str = "<memory>"


def load_model(path, instance: str | None = None, tolerance: float | None = None) -> Model:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    if not isinstance(data, dict):
        raise ParseError(f"{path}: model must be a JSON object")
    name = instance or data.get("structure")
    if not isinstance(name, str):
        raise ParseError(f"{path}: missing 'structure'")
    model = build_model(data, get_structure(name, tolerance))
    model.source = str(path)
    return model


def _value(structure, raw, where):
    if isinstance(raw, bool) or not isinstance(raw, (str, int, float)):
        raise ParseError(f"{where}: expected a number or 'p/q' string, got {raw!r}")
    try:
        return structure.parse(raw)
    except GenProbError:
        raise
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{where}: cannot parse {raw!r}") from None


def _labels(space, raw, where):
    if not isinstance(raw, list):
        raise ParseError(f"{where}: expected a list of outcome labels")
    try:
        return space.event(str(x) for x in raw)
    except KeyError as exc:
        raise ParseError(f"{where}: {exc.args[0]}") from None


def build_model(data: dict, structure: StructureDescriptor) -> Model:
    if not isinstance(data, dict):
        raise ParseError("model must be a JSON object")
    outcomes = data.get("outcomes")
    if not isinstance(outcomes, list) or not outcomes:
        raise ParseError("'outcomes' must be a non-empty list")
    try:
        space = SampleSpace(tuple(str(o) for o in outcomes))
    except ValueError as exc:
        raise ParseError(f"outcomes: {exc}") from None

    raw_weights = data.get("weights")
    if not isinstance(raw_weights, dict):
        raise ParseError("'weights' must map outcome labels to values")
    unknown = sorted(set(map(str, raw_weights)) - set(space.outcomes))
    if unknown:
        raise ParseError(f"weights: unknown outcomes {unknown}")
    missing = [o for o in space.outcomes if o not in raw_weights]
    if missing:
        raise ParseError(f"weights: no weight for outcomes {missing}")
    weights = {o: _value(structure, raw_weights[o], f"weights[{o}]") for o in space.outcomes}

    generators = data.get("algebra")
    if generators is None:
        algebra = power_set_algebra(space)
    else:
        if not isinstance(generators, list):
            raise ParseError("'algebra' must be a list of events")
        algebra = generate_algebra(space, [_labels(space, g, f"algebra[{i}]") for i, g in enumerate(generators)])

    measure = make_probability(structure, algebra, atom_weights_from_outcomes(structure, algebra, weights))

    events = {}
    for name, raw in (data.get("events") or {}).items():
        event = _labels(space, raw, f"events[{name}]")
        if not algebra.is_measurable(event):
            raise NotMeasurable(f"event {name!r} {event!r} is not measurable")
        events[name] = event

    variables = {}
    for name, table in (data.get("variables") or {}).items():
        if not isinstance(table, dict):
            raise ParseError(f"variables[{name}]: expected an outcome -> value map")
        missing = [o for o in space.outcomes if o not in table]
        if missing:
            raise ParseError(f"variables[{name}]: no value for outcomes {missing}")
        values = {o: _value(structure, table[o], f"variables[{name}][{o}]") for o in space.outcomes}
        variables[name] = RandomVariable.from_outcomes(structure, algebra, values)

    return Model(structure, space, algebra, measure, events, variables)
