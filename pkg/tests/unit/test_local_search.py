"""All unit tests for the multistart local search are defined here."""

import numpy as np
import pytest

from siglo.exceptions.logic.solver import ExistenceHypothesisError
from siglo.kpoint import SolverConfig
from siglo.kpoint.descent import CoordinateDescent, NearestAssignment
from siglo.kpoint.solve import local_search
from siglo.measure import Atom, MeasureComponent, QuadratureNodes, SignedMeasure
from siglo.services.impl import LocalSearchSolver
from siglo.services.impl.local_search import clip_to_ball, essential_cleanup


def test_fermat_weber_matches_exhaustive_value(fermat_weber):
    report = local_search(fermat_weber, SolverConfig(k=2, restarts=8))

    assert report.value == pytest.approx(-14.0, abs=1e-3)
    assert len(report.per_restart_values) == 8
    assert report.value <= min(report.per_restart_values) + 1e-12


def test_traces_never_increase(line_measure):
    report = local_search(line_measure, SolverConfig(k=4, restarts=3, seed=5))

    for trace in report.traces:
        assert all(b <= a + 1e-12 for a, b in zip(trace, trace[1:]))


def test_same_seed_same_result_with_any_worker_count(line_measure):
    config = SolverConfig(k=6, restarts=4, seed=7)

    first = local_search(line_measure, config, max_workers=4)
    second = local_search(line_measure, config, max_workers=1)

    assert np.array_equal(first.best.points, second.best.points)
    assert first.value == second.value


def test_best_lies_within_certificate(line_measure):
    report = local_search(line_measure, SolverConfig(k=5, restarts=2))

    for points in [report.best.points, *report.restart_points]:
        distances = np.linalg.norm(points - report.bounding_center, axis=1)
        assert np.all(distances <= report.bounding_radius + 1e-9)


def test_every_iterate_stays_in_its_certificate_ball(fermat_weber, mocker):
    moves = mocker.spy(NearestAssignment, "move")
    report = local_search(fermat_weber, SolverConfig(k=2, restarts=4, seed=3))

    assert moves.call_count > 0
    for call in moves.call_args_list:
        target = call.args[2]
        assert np.linalg.norm(target - report.bounding_center) <= report.bounding_radius + 1e-9


def test_descent_is_projected_onto_the_ball():
    nodes = QuadratureNodes(points=np.array([[5.0]]), weights=np.array([1.0]))
    descent = CoordinateDescent(
        nodes, init_step=0.5, max_step=5.0, step_decay=0.5, tol=1e-9, max_iters=100, scale=5.0, ball=(np.zeros(1), 1.0)
    )

    result = descent.run(np.array([[0.0]]))

    assert result.points.ravel().tolist() == pytest.approx([1.0])
    assert result.value == pytest.approx(4.0)


def test_existence_hypothesis_is_checked():
    phi = SignedMeasure(
        plus=MeasureComponent(atoms=(Atom((1.0,), 1.0),)),
        minus=MeasureComponent(atoms=(Atom((0.0,), 2.0),)),
        dimension=1,
    )

    with pytest.raises(ExistenceHypothesisError) as error:
        local_search(phi, SolverConfig(k=1))
    assert error.value.get_exit_code() == 3


def test_enough_points_sit_on_the_nodes():
    phi = SignedMeasure(plus=MeasureComponent.from_arrays(np.array([[0.0], [3.0]]), [1.0, 1.0]), dimension=1)

    report = local_search(phi, SolverConfig(k=3))

    assert report.value == 0.0
    assert report.iterations_used == 0


def test_every_restart_is_logged(line_measure, mocker):
    logger = mocker.MagicMock()

    LocalSearchSolver(logger=logger).solve(line_measure, SolverConfig(k=2, restarts=3))

    assert logger.debug.call_count == 3
    logger.info.assert_called_once()


def test_essential_cleanup_moves_idle_points(fermat_weber):
    points = np.array([[0.0], [8.0], [50.0]])

    cleaned = essential_cleanup(points, fermat_weber)

    assert cleaned.ravel().tolist() == [0.0, 8.0, 8.0]


def test_clip_to_ball():
    points = np.array([[3.0, 4.0], [0.5, 0.0]])

    clipped = clip_to_ball(points, np.zeros(2), 1.0)

    assert clipped[0].tolist() == pytest.approx([0.6, 0.8])
    assert clipped[1].tolist() == [0.5, 0.0]


@pytest.mark.parametrize("kwargs", [{"k": 0}, {"k": 1, "restarts": 0}, {"k": 1, "step_decay": 1.0}, {"k": 1, "tol": 0}])
def test_solver_config_validation(kwargs):
    with pytest.raises(ValueError):
        SolverConfig(**kwargs)
