"""All unit tests for signed measures and their quadrature are defined here."""

import math

import numpy as np
import pytest

from siglo.exceptions.logic.measure import EmptyMeasureError, InvalidMeasureError
from siglo.measure import (
    Atom,
    GriddedDensity,
    MeasureComponent,
    SignedMeasure,
    ball_mass,
    bounding_ball,
    discretize,
    quadrature_nodes,
    total_mass,
    w1_distance,
)
from siglo.measure.expressions import compile_expression

from .conftest import uniform_density


def test_atom_rejects_nonpositive_weight():
    with pytest.raises(InvalidMeasureError):
        Atom((0.0,), 0.0)


def test_density_rejects_negative_values():
    with pytest.raises(InvalidMeasureError):
        GriddedDensity(lower=[0.0], upper=[1.0], values=[-1.0, 1.0])


def test_density_rejects_empty_box():
    with pytest.raises(InvalidMeasureError):
        GriddedDensity(lower=[1.0], upper=[1.0], values=[1.0])


def test_component_rejects_mixed_dimensions():
    with pytest.raises(InvalidMeasureError):
        MeasureComponent(atoms=(Atom((0.0,), 1.0), Atom((0.0, 0.0), 1.0)))


def test_signed_measure_rejects_dimension_mismatch():
    with pytest.raises(InvalidMeasureError):
        SignedMeasure(plus=MeasureComponent(atoms=(Atom((0.0, 0.0), 1.0),)), dimension=1)


def test_total_mass_sums_atoms_and_densities():
    component = MeasureComponent(
        atoms=(Atom((0.5,), 2.0),),
        densities=(uniform_density([0.0], [2.0], [10], 3.0),),
    )

    assert total_mass(component) == pytest.approx(8.0)


def test_zero_cells_produce_no_nodes():
    density = GriddedDensity(lower=[0.0], upper=[4.0], values=[1.0, 0.0, 0.0, 2.0])

    nodes = quadrature_nodes(MeasureComponent(densities=(density,)))

    assert nodes.points[:, 0].tolist() == [0.5, 3.5]
    assert nodes.weights.tolist() == [1.0, 2.0]


def test_signed_nodes_put_plus_first_with_negative_minus(fermat_weber):
    nodes = fermat_weber.signed_nodes

    assert nodes.points[:, 0].tolist() == [1.0, 8.0, 0.0, 4.0]
    assert nodes.weights.tolist() == [2.0, 6.0, -1.0, -4.0]


def test_quadrature_step_is_largest_cell_diagonal():
    density = uniform_density([0.0, 0.0], [1.0, 2.0], [4, 4])

    assert MeasureComponent(densities=(density,)).quadrature_step == pytest.approx(math.hypot(0.25, 0.5))
    assert MeasureComponent(atoms=(Atom((0.0, 0.0), 1.0),)).quadrature_step == 0.0


def test_discretize_conserves_mass_exactly():
    rng = np.random.default_rng(3)
    component = MeasureComponent.from_arrays(rng.uniform(-1, 1, size=(500, 2)), rng.uniform(0.01, 1, size=500))

    atoms = discretize(component, 0.1)

    assert math.fsum(atom.weight for atom in atoms) == total_mass(component)
    assert len(atoms) <= 400


def test_discretize_keeps_atoms_in_their_cells():
    component = MeasureComponent.from_arrays(np.array([[0.01], [0.09], [0.55]]), [1.0, 3.0, 2.0])

    atoms = discretize(component, 0.1)

    assert [atom.location for atom in atoms] == [pytest.approx((0.07,)), pytest.approx((0.55,))]
    assert [atom.weight for atom in atoms] == [4.0, 2.0]


def _random_component(rng: np.random.Generator, dimension: int) -> MeasureComponent:
    count = int(rng.integers(1, 30))
    points, weights = rng.uniform(-1, 1, size=(count, dimension)), rng.uniform(1e-3, 3, size=count)
    atoms = MeasureComponent.from_arrays(points, weights).atoms
    resolution = tuple(int(r) for r in rng.integers(2, 12, size=dimension))
    density = GriddedDensity(lower=-np.ones(dimension), upper=np.ones(dimension), values=rng.uniform(0, 2, resolution))
    return MeasureComponent(atoms=atoms, densities=(density,))


@pytest.mark.parametrize("dimension", [1, 2, 3])
def test_discretize_total_mass_is_bit_identical(dimension):
    rng = np.random.default_rng(dimension)
    for _ in range(100):
        component = _random_component(rng, dimension)
        step = float(rng.uniform(0.01, 1.5))

        atoms = discretize(component, step)

        assert total_mass(MeasureComponent(atoms=tuple(atoms))) == total_mass(component)


@pytest.mark.parametrize("dimension", [1, 2])
def test_discretize_moves_mass_at_most_one_cell_diagonal(dimension):
    rng = np.random.default_rng(10 + dimension)
    for _ in range(20):
        component = _random_component(rng, dimension)
        step = float(rng.uniform(0.05, 0.8))

        moved = w1_distance(component.nodes, discretize(component, step))

        assert moved <= total_mass(component) * step * math.sqrt(dimension) + 1e-9


def test_discretize_rejects_nonpositive_step(fermat_weber):
    with pytest.raises(InvalidMeasureError):
        discretize(fermat_weber.plus, 0.0)


def test_ball_mass_counts_open_ball(fermat_weber):
    assert ball_mass(fermat_weber.plus, np.array([0.0]), 1.0) == 0.0
    assert ball_mass(fermat_weber.plus, np.array([0.0]), 1.5) == 2.0


def test_bounding_ball_contains_both_parts(fermat_weber):
    center, radius = bounding_ball(fermat_weber)

    assert center.tolist() == [4.0]
    assert radius == 4.0


def test_bounding_ball_of_empty_measure_raises():
    with pytest.raises(EmptyMeasureError):
        bounding_ball(SignedMeasure(plus=MeasureComponent(), dimension=2))


def test_shifted_moves_every_part(fermat_weber):
    shifted = fermat_weber.shifted([1.0])

    assert shifted.signed_nodes.points[:, 0].tolist() == [2.0, 9.0, 1.0, 5.0]


def test_expression_is_sampled_at_midpoints():
    func = compile_expression("where(r < 1, 2, 0)", 2)

    values = func(np.array([[0.5, 0.0], [1.0, 1.0]]))

    assert values.tolist() == [2.0, 0.0]


def test_expression_with_unknown_name_raises():
    with pytest.raises(InvalidMeasureError, match="unknown names"):
        compile_expression("open('x')", 1)


def test_negative_expression_raises():
    func = compile_expression("x - 1", 1)

    with pytest.raises(InvalidMeasureError):
        func(np.array([[0.0]]))
