"""k-sweep convergence experiments: rescaled objective gap, Hausdorff distance to the region and W1 to the limit."""

import dataclasses
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from siglo.geometry import BallComplementRegion, hausdorff
from siglo.kpoint.certificates import check_existence_hypothesis
from siglo.kpoint.solve import local_search
from siglo.kpoint.types import SolveReport, SolverConfig
from siglo.measure import QuadratureNodes, SignedMeasure, discretize, w1_distance
from siglo.objective import eval_F_region, rescaled_gap

from .density import empirical_measure
from .types import ConvergenceRow, DensityField


def comparison_step(rho_star: DensityField, k: int) -> float:
    """(|supp rho*| / k)^(1/n): the cell size k evenly spread points would occupy."""
    n = rho_star.dimension
    support = np.count_nonzero(rho_star.values) * rho_star.cell_volume
    return (support / k) ** (1 / n)


def region_targets(phi: SignedMeasure, m_star: BallComplementRegion) -> np.ndarray:
    """Positive-part quadrature nodes lying in M: a net of M restricted to the positive support."""
    nodes = phi.plus.nodes.points
    targets = nodes[m_star.contains(nodes)]
    return targets if targets.shape[0] else nodes


def convergence_row(  # pylint: disable=too-many-arguments
    report: SolveReport,
    k: int,
    F_ref: float,  # pylint: disable=invalid-name
    targets: np.ndarray,
    rho_star: DensityField,
    dimension: int,
) -> ConvergenceRow:
    mu = empirical_measure(report.best)
    rho_atoms = discretize(rho_star.as_component(), comparison_step(rho_star, k))
    rho_nodes = QuadratureNodes(
        points=np.array([atom.location for atom in rho_atoms], dtype=float).reshape(-1, dimension),
        weights=np.array([atom.weight for atom in rho_atoms], dtype=float),
    )
    return ConvergenceRow(
        k=k,
        F_value=report.value,
        rescaled_gap=rescaled_gap(k, report.value, F_ref, dimension),
        hausdorff_to_M=hausdorff(report.best.points, targets),
        w1_to_rho=w1_distance(mu.as_nodes(), rho_nodes),
        extrapolated=dimension == 1,
    )


def convergence_report(  # pylint: disable=too-many-arguments
    phi: SignedMeasure,
    k_schedule: Sequence[int],
    cfg: SolverConfig,
    m_star: BallComplementRegion,
    rho_star: DensityField,
    *,
    mesh: float | None = None,
    max_workers: int = 1,
) -> list[ConvergenceRow]:
    """One row per k of the schedule, solved independently in a thread pool and returned in schedule order.

    Rows are reported as computed: heuristic noise may make the trends non-monotone.
    """
    schedule = list(k_schedule)
    if not schedule or any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise ValueError(f"k schedule must be nonempty and strictly increasing, got {schedule}")
    check_existence_hypothesis(phi)

    mesh = mesh if mesh is not None else max(phi.quadrature_step, 1e-3 * m_star.scene_diameter)
    f_ref = eval_F_region(m_star, phi, mesh).value
    targets = region_targets(phi, m_star)

    def solve(k: int) -> ConvergenceRow:
        report = local_search(phi, dataclasses.replace(cfg, k=k))
        return convergence_row(report, k, f_ref, targets, rho_star, phi.dimension)

    with ThreadPoolExecutor(max_workers=max(1, min(max_workers, len(schedule)))) as pool:
        return list(pool.map(solve, schedule))
