"""Radius selection for ball-complement regions: stationary radius of a single ball and cyclic radius descent."""

import math
from collections.abc import Callable

import numpy as np

from siglo.exceptions.logic.geometry import InvalidRegionError
from siglo.exceptions.logic.solver import NoRootError
from siglo.geometry import BallComplementRegion
from siglo.kpoint.certificates import boundedness_certificate
from siglo.measure import MeasureComponent, SignedMeasure, ball_mass, bounding_ball, total_mass
from siglo.objective import ObjectiveValue, eval_F_region

from .canonical import negative_atoms

_INV_PHI = (math.sqrt(5) - 1) / 2
_INV_PHI_SQ = (3 - math.sqrt(5)) / 2
_BISECTION_STEPS = 200


def stationary_radius(phi_plus: MeasureComponent, center, target_mass: float, tol: float) -> float:
    """Radius r with |phi+(B_r(center)) - target_mass| <= tol, by bisection on the ball mass.

    Quadrature makes the ball mass a step function of r; when no radius meets `tol` the crossing radius is returned.
    """
    total = total_mass(phi_plus)
    if not target_mass < total:
        raise NoRootError(target_mass, total)
    if not target_mass > 0:
        raise ValueError(f"target mass must be positive, got {target_mass}")
    center = np.asarray(center, dtype=float).reshape(-1)

    lower_box, upper_box = phi_plus.support_box()
    corners = np.maximum(np.abs(lower_box - center), np.abs(upper_box - center))
    low, high = 0.0, float(np.linalg.norm(corners)) * (1 + 1e-9) + 1e-12
    for _ in range(_BISECTION_STEPS):
        middle = 0.5 * (low + high)
        mass = ball_mass(phi_plus, center, middle)
        if abs(mass - target_mass) <= tol:
            return middle
        if mass < target_mass:
            low = middle
        else:
            high = middle
        if high - low <= 1e-15 * max(high, 1.0):
            break
    return 0.5 * (low + high)


def golden_section(func: Callable[[float], float], low: float, high: float, tol: float) -> tuple[float, float]:
    """Minimize a unimodal function on [low, high]; returns the best evaluated point and its value."""
    best_x, best_y = low, func(low)
    dist = high - low
    if dist <= tol:
        return best_x, best_y
    steps = int(math.ceil(math.log(tol / dist) / math.log(_INV_PHI)))
    c, d = low + _INV_PHI_SQ * dist, low + _INV_PHI * dist
    yc, yd = func(c), func(d)
    for x, y in ((c, yc), (d, yd)):
        if y < best_y:
            best_x, best_y = x, y
    for _ in range(max(0, steps - 1)):
        dist *= _INV_PHI
        if yc < yd:
            high, d, yd = d, c, yc
            c = low + _INV_PHI_SQ * dist
            yc = func(c)
            if yc < best_y:
                best_x, best_y = c, yc
        else:
            low, c, yc = c, d, yd
            d = low + _INV_PHI * dist
            yd = func(d)
            if yd < best_y:
                best_x, best_y = d, yd
    return best_x, best_y


def optimize_radii(  # pylint: disable=too-many-locals
    phi: SignedMeasure,
    init: BallComplementRegion,
    mesh: float,
    max_iters: int,
    trace: list[float] | None = None,
) -> tuple[BallComplementRegion, ObjectiveValue]:
    """Cyclic coordinate descent over the radii, each updated by golden section over [mesh, R_out + 2R].

    With several balls every sweep ends with a golden search over a common shift of all radii: balls of a canonical
    region touch the same configuration points, so a single radius is often on a flat stretch of F.

    Only strict improvements are kept, so F never increases; sweeps stop once every radius moved by less than mesh.
    F after every sweep (initial value first) is appended to `trace` when given.
    """
    centers, _ = negative_atoms(phi)
    if not np.array_equal(centers, init.centers):
        raise InvalidRegionError("region centers must be the negative atoms of the measure")

    region = init
    current = eval_F_region(region, phi, mesh)
    _, support_radius = bounding_ball(phi)
    upper = boundedness_certificate(phi, current.value) + 2 * support_radius
    if trace is not None:
        trace.append(current.value)

    for _ in range(max_iters):
        largest_change = 0.0
        for i in range(region.radii.size):
            radii = region.radii.copy()

            def objective(r: float, i=i, radii=radii, base=region) -> float:
                radii[i] = r
                return eval_F_region(base.with_radii(radii), phi, mesh).value

            radius, value = golden_section(objective, mesh, max(upper, mesh), mesh)
            if value < current.value:
                radii[i] = radius
                largest_change = max(largest_change, abs(radius - region.radii[i]))
                region = region.with_radii(radii)
                current = eval_F_region(region, phi, mesh)
        if region.radii.size > 1:
            region, current, shift = _shift_radii(phi, region, current, mesh, upper)
            largest_change = max(largest_change, shift)
        if trace is not None:
            trace.append(current.value)
        if largest_change < mesh:
            break
    return region, current


def _shift_radii(
    phi: SignedMeasure, region: BallComplementRegion, current: ObjectiveValue, mesh: float, upper: float
) -> tuple[BallComplementRegion, ObjectiveValue, float]:
    low = mesh - float(region.radii.min())
    high = max(upper - float(region.radii.max()), low + mesh)

    def objective(t: float) -> float:
        return eval_F_region(region.with_radii(region.radii + t), phi, mesh).value

    shift, value = golden_section(objective, low, high, mesh)
    if value < current.value:
        shifted = region.with_radii(region.radii + shift)
        return shifted, eval_F_region(shifted, phi, mesh), abs(shift)
    return region, current, 0.0
