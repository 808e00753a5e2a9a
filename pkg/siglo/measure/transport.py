"""Kantorovich-Wasserstein distance between finite atomic measures is defined here."""

import math
from collections.abc import Sequence

import numpy as np
import ot
from scipy.spatial.distance import cdist
from scipy.stats import wasserstein_distance

from siglo.exceptions.logic.measure import MassMismatchError

from .types import Atom, QuadratureNodes

MASS_RELATIVE_TOLERANCE = 1e-9


def atoms_to_arrays(atoms: Sequence[Atom]) -> QuadratureNodes:
    if not atoms:
        return QuadratureNodes(points=np.empty((0, 1)), weights=np.empty(0))
    return QuadratureNodes(
        points=np.array([a.location for a in atoms], dtype=float),
        weights=np.array([a.weight for a in atoms], dtype=float),
    )


def w1_distance(mu: Sequence[Atom] | QuadratureNodes, nu: Sequence[Atom] | QuadratureNodes) -> float:
    """Exact W1 cost between two atomic measures of equal total mass (no renormalization).

    One-dimensional inputs use the sorted-CDF formula, other dimensions an exact network simplex plan.
    """
    mu_nodes = mu if isinstance(mu, QuadratureNodes) else atoms_to_arrays(mu)
    nu_nodes = nu if isinstance(nu, QuadratureNodes) else atoms_to_arrays(nu)

    mass_mu, mass_nu = mu_nodes.total, nu_nodes.total
    if abs(mass_mu - mass_nu) > MASS_RELATIVE_TOLERANCE * max(abs(mass_mu), abs(mass_nu)):
        raise MassMismatchError(mass_mu, mass_nu)
    if len(mu_nodes) == 0:
        return 0.0

    mass = (mass_mu + mass_nu) / 2
    if mu_nodes.points.shape[1] == 1:
        return mass * float(
            wasserstein_distance(
                mu_nodes.points[:, 0], nu_nodes.points[:, 0], u_weights=mu_nodes.weights, v_weights=nu_nodes.weights
            )
        )
    return mass * w1_network_simplex(mu_nodes, nu_nodes)


def w1_network_simplex(mu: QuadratureNodes, nu: QuadratureNodes) -> float:
    """W1 between the normalized measures via an exact min-cost flow on the bipartite atom graph."""
    cost = cdist(mu.points, nu.points)
    a = mu.weights / math.fsum(mu.weights)
    b = nu.weights / math.fsum(nu.weights)
    b = b * (math.fsum(a) / math.fsum(b))
    return float(ot.emd2(a, b, cost, numItermax=max(100_000, 50 * a.size * b.size)))
