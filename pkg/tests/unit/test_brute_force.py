"""All unit tests for the exhaustive k-point solver are defined here."""

import numpy as np
import pytest

from siglo.exceptions.logic.solver import EmptyCandidateListError, EnumerationCapError
from siglo.kpoint import CandidateGrid, SolverConfig
from siglo.kpoint.solve import brute_force
from siglo.services.impl import BruteForceSolver, make_solver
from siglo.services.impl.brute_force import subset_count

CANDIDATES = np.arange(17, dtype=float)[:, None] * 0.5


def test_subset_count():
    assert subset_count(17, 2) == 17 + 136
    assert subset_count(3, 5) == 7


def test_fermat_weber_optimum(fermat_weber):
    report = brute_force(fermat_weber, CANDIDATES, 2)

    assert sorted(report.best.points.ravel().tolist()) == [0.0, 8.0]
    assert report.value == -14.0
    assert report.iterations_used == subset_count(17, 2)
    assert report.solver == "brute_force"


def test_candidate_grid_from_config(fermat_weber):
    grid = CandidateGrid(lower=(0.0,), upper=(8.0,), resolution=(17,))

    report = BruteForceSolver().solve(fermat_weber, SolverConfig(k=2, candidate_grid=grid))

    assert report.value == -14.0


def test_single_point_optimum(fermat_weber):
    report = brute_force(fermat_weber, CANDIDATES, 1)

    assert report.best.cardinality == 1
    assert report.value == min(
        2 * abs(1 - c) + 6 * abs(8 - c) - abs(c) - 4 * abs(4 - c) for c in CANDIDATES.ravel()
    )


def test_cap_is_enforced(fermat_weber):
    with pytest.raises(EnumerationCapError):
        brute_force(fermat_weber, CANDIDATES, 2, cap=10)


def test_missing_candidates(fermat_weber):
    with pytest.raises(EmptyCandidateListError):
        BruteForceSolver().solve(fermat_weber, SolverConfig(k=2))


def test_finish_is_logged(fermat_weber, mocker):
    logger = mocker.MagicMock()

    BruteForceSolver(candidates=CANDIDATES, logger=logger).solve(fermat_weber, SolverConfig(k=2))

    logger.info.assert_called_once()
    assert logger.info.call_args.kwargs["value"] == -14.0


def test_make_solver_by_name():
    assert isinstance(make_solver("brute_force", candidates=CANDIDATES), BruteForceSolver)
    with pytest.raises(ValueError):
        make_solver("annealing")
