"""Starting configurations for the local search."""

import numpy as np

from siglo.measure import MeasureComponent


def sample_initial(plus: MeasureComponent, k: int, rng: np.random.Generator) -> np.ndarray:
    """k positive-part quadrature nodes drawn proportionally to weight (without replacement while possible)."""
    nodes = plus.nodes
    probabilities = nodes.weights / nodes.weights.sum()
    index = rng.choice(len(nodes), size=k, replace=k > len(nodes), p=probabilities)
    return nodes.points[np.sort(index)].copy()


def lattice_side(k: int, n: int) -> int:
    """Smallest c with c^n >= k."""
    side = max(1, int(round(k ** (1 / n))))
    while side**n < k:
        side += 1
    while side > 1 and (side - 1) ** n >= k:
        side -= 1
    return side


def lattice_initial(plus: MeasureComponent, k: int) -> np.ndarray:
    """Cell midpoints of a c^n lattice over the positive support box, thinned evenly to k points."""
    lower, upper = plus.support_box()
    n = lower.size
    side = lattice_side(k, n)
    axes = [lo + (np.arange(side) + 0.5) * (hi - lo) / side for lo, hi in zip(lower, upper)]
    grid = np.stack([a.ravel() for a in np.meshgrid(*axes, indexing="ij")], axis=1)
    if grid.shape[0] > k:
        grid = grid[np.round(np.linspace(0, grid.shape[0] - 1, k)).astype(np.int64)]
    return grid
