"""All unit tests for the boundedness certificate and the nonexistence probe are defined here."""

import math

import pytest

from siglo.exceptions.logic.solver import ExistenceHypothesisError
from siglo.kpoint import boundedness_certificate, check_existence_hypothesis, nonexistence_probe
from siglo.measure import Atom, MeasureComponent, SignedMeasure, bounding_ball


def test_masses_of_the_fermat_weber_instance(fermat_weber):
    assert check_existence_hypothesis(fermat_weber) == (8.0, 5.0)


def test_balanced_masses_violate_the_hypothesis():
    phi = SignedMeasure(
        plus=MeasureComponent(atoms=(Atom((1.0,), 1.0),)),
        minus=MeasureComponent(atoms=(Atom((0.0,), 1.0),)),
        dimension=1,
    )

    with pytest.raises(ExistenceHypothesisError):
        check_existence_hypothesis(phi)


def test_certificate_radius(fermat_weber):
    _, radius = bounding_ball(fermat_weber)

    assert boundedness_certificate(fermat_weber, -14.0) == pytest.approx((-14.0 + 13 * radius) / 3)


def test_certificate_grows_with_the_bound(fermat_weber):
    assert boundedness_certificate(fermat_weber, 0.0) > boundedness_certificate(fermat_weber, -14.0)


def test_probe_values():
    probe = nonexistence_probe([0.5 * i for i in range(21)], 10_000)
    values = dict(probe.rows)

    assert values[0.0] == pytest.approx(1.0, abs=1e-3)
    assert values[1.0] == pytest.approx(4 / math.pi - 1, abs=1e-3)
    assert probe.strictly_decreasing


def test_probe_needs_enough_circle_nodes():
    with pytest.raises(ValueError):
        nonexistence_probe([0.0], 4)
