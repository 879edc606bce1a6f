"""Probability, conditioning and integration over ordered algebraic structures."""

from .algebra import Capability, LawReport, StructureDescriptor, check_laws, require_laws
from .errors import GenProbError
from .inference import (
    ConditioningResult,
    bayes,
    complement_prob,
    conditional,
    total_probability,
    union_prob,
)
from .instances import REGISTRY, boolean, classical_float, classical_rational, get_structure, possibility, viterbi
from .integral import (
    SimpleFunction,
    expected_value,
    indicator,
    integrate_nonneg,
    integrate_over,
    integrate_signed,
    integrate_simple,
    signed_parts,
)
from .measure import AbstractMeasure, AbstractProbabilityMeasure, is_independent, make_measure, make_probability
from .randvar import RandomVariable, conditional_distribution, joint, pushforward, rv_independent
from .space import Event, SampleSpace, SigmaAlgebra, generate_algebra, power_set_algebra

__version__ = "0.1.0"
