import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from genprob import check_laws, get_structure
from genprob.algebra import Capability
from genprob.errors import ParseError, UnknownInstance
from genprob.instances import REGISTRY, classical_rational, possibility, viterbi

from gen_models import ALL_INSTANCES, random_event, random_probability


def test_registry_ids():
    assert set(REGISTRY) == {"classical-rational", "classical-float", "possibility", "viterbi", "boolean"}
    with pytest.raises(UnknownInstance):
        get_structure("lukasiewicz")
    with pytest.raises(ParseError):
        get_structure("possibility", tolerance=1e-6)
    assert get_structure("classical-float", tolerance=1e-3).tolerance == 1e-3


@pytest.mark.parametrize("name", ALL_INSTANCES)
def test_registered_instances_pass_their_laws(name):
    report = check_laws(get_structure(name), samples=200, seed=11)
    assert report.passed, report.failures


def test_classical_identities():
    s = classical_rational()
    assert s.zero == 0 and s.one == 1
    assert s.add(F(1, 2), F(1, 2)) == 1
    assert s.capabilities == {
        Capability.ADDITIVE_GROUP,
        Capability.MULTIPLICATIVE_GROUP,
        Capability.DISTRIBUTIVE,
    }


def test_possibility_capabilities():
    s = possibility()
    assert not s.has(Capability.ADDITIVE_GROUP) and not s.has(Capability.MULTIPLICATIVE_GROUP)
    assert s.has(Capability.DISTRIBUTIVE) and s.has(Capability.HAS_RESIDUATION)
    assert s.residuate(F("0.3"), F("0.7")) == F("0.3")
    assert s.residuate(F("0.7"), F("0.7")) == 1


def test_viterbi_examples():
    s = viterbi()
    assert s.mul(F("0.5"), F("0.5")) == F("0.25")
    assert s.add(F("0.5"), F("0.25")) == F("0.5")
    assert check_laws(s, samples=200, seed=2).passed


def test_unit_interval_parsing():
    with pytest.raises(ParseError):
        possibility().parse("1.5")
    assert possibility().parse("0.70") == F(7, 10)
    assert classical_rational().parse("-3/6") == F(-1, 2)


@given(st.randoms(use_true_random=False))
def test_kolmogorov_axioms(rng):
    P = random_probability("classical-rational", rng)
    events = list(P.algebra.events())
    assert all(isinstance(P.prob(A), F) and P.prob(A) >= 0 for A in events)
    assert P.prob(P.space.full()) == 1 and P.prob(P.space.empty()) == 0
    family = [A for A in P.algebra.atoms if rng.random() < 0.7]
    union = P.space.empty()
    for A in family:
        union = union | A
    assert P.prob(union) == sum((P.prob(A) for A in family), F(0))


@given(st.randoms(use_true_random=False))
def test_possibility_axioms(rng):
    P = random_probability("possibility", rng)
    assert all(0 <= P.prob(A) <= 1 for A in P.algebra.events())
    assert P.prob(P.space.full()) == 1 and P.prob(P.space.empty()) == 0
    # disjoint family built from random atom blocks
    k = len(P.algebra.atoms)
    labels = [rng.randrange(3) for _ in range(k)]
    family = [P.algebra.union_of(a for a in range(k) if labels[a] == c) for c in range(3)]
    union = family[0] | family[1] | family[2]
    assert P.prob(union) == max(P.prob(A) for A in family)


@given(st.randoms(use_true_random=False), st.sampled_from(ALL_INSTANCES))
def test_acpa_for_every_instance(rng, name):
    P = random_probability(name, rng)
    s = P.structure
    A, B = random_event(P, rng), random_event(P, rng)
    assert s.ge(P.prob(A), s.zero)
    assert s.eq(P.prob(P.space.full()), s.one)
    assert s.is_zero(P.prob(P.space.empty()))
    assert s.eq(P.prob((A - B) | B), s.add(P.prob(A - B), P.prob(B)))


def test_samplers_stay_in_unit_interval():
    rng = random.Random(0)
    for name in ALL_INSTANCES:
        s = get_structure(name)
        for _ in range(200):
            v = s.sampler(rng)
            assert s.ge(v, s.zero) and s.le(v, s.one)
