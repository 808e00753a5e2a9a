"""Coordinate-wise descent of F over a fixed number of points.

Every node keeps its nearest and second nearest configuration point, so moving one point only touches the nodes
that are within reach of it: the restricted objective of point j is the sum of w(x) min(d_excl(x), |x - q|) over
nodes x near j, where d_excl is the distance to the closest other point.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import cKDTree

from siglo.measure import QuadratureNodes

_ACCEPT_RELATIVE = 1e-13


@dataclass
class DescentResult:
    """Final points of one restart with its F trace (initial value first, then one value per sweep)."""

    points: np.ndarray
    value: float
    initial_value: float
    iterations: int
    trace: list[float] = field(default_factory=list)
    local_evaluations: int = 0


class NearestAssignment:
    """Nearest and second nearest configuration point of every node."""

    def __init__(self, nodes: QuadratureNodes, points: np.ndarray):
        self.nodes = nodes.points
        self.weights = nodes.weights
        self.points = np.array(points, dtype=float)
        count = self.nodes.shape[0]
        self.d1 = np.empty(count)
        self.d2 = np.empty(count)
        self.i1 = np.empty(count, dtype=np.int64)
        self.i2 = np.empty(count, dtype=np.int64)
        self.refresh(np.arange(count))

    @property
    def k(self) -> int:
        return self.points.shape[0]

    def refresh(self, index: np.ndarray) -> None:
        """Recompute both neighbours from scratch for the given nodes."""
        if index.size == 0:
            return
        if self.k == 1:
            self.d1[index] = np.linalg.norm(self.nodes[index] - self.points[0], axis=1)
            self.i1[index] = 0
            self.d2[index] = np.inf
            self.i2[index] = -1
            return
        distances, nearest = cKDTree(self.points).query(self.nodes[index], k=2)
        self.d1[index], self.d2[index] = distances[:, 0], distances[:, 1]
        self.i1[index], self.i2[index] = nearest[:, 0], nearest[:, 1]

    def value(self) -> float:
        return math.fsum(self.weights * self.d1)

    def move(self, j: int, target: np.ndarray, node_tree: cKDTree) -> None:
        """Move point j to `target` and update the neighbours of the affected nodes."""
        stale = np.flatnonzero((self.i1 == j) | (self.i2 == j))
        self.points[j] = target
        if self.k > 1:
            reach = float(np.max(self.d2))
            near = np.asarray(node_tree.query_ball_point(target, reach), dtype=np.int64)
            near = near[~np.isin(near, stale)]
            if near.size:
                dq = np.linalg.norm(self.nodes[near] - target, axis=1)
                first = dq < self.d1[near]
                second = ~first & (dq < self.d2[near])

                promoted = near[first]
                self.d2[promoted], self.i2[promoted] = self.d1[promoted], self.i1[promoted]
                self.d1[promoted], self.i1[promoted] = dq[first], j
                demoted = near[second]
                self.d2[demoted], self.i2[demoted] = dq[second], j
        self.refresh(stale)


class CoordinateDescent:  # pylint: disable=too-many-instance-attributes
    """Moves one point at a time along a central-difference descent direction with backtracking."""

    def __init__(  # pylint: disable=too-many-arguments
        self,
        nodes: QuadratureNodes,
        *,
        init_step: float,
        max_step: float,
        step_decay: float,
        tol: float,
        max_iters: int,
        scale: float,
        ball: tuple[np.ndarray, float] | None = None,
    ):
        self.nodes = nodes
        self.node_tree = cKDTree(nodes.points)
        self.init_step = init_step
        self.max_step = max(max_step, init_step)
        self.step_decay = step_decay
        self.tol = tol
        self.max_iters = max_iters
        self.accept_margin = _ACCEPT_RELATIVE * math.fsum(np.abs(nodes.weights)) * max(scale, tol)
        self.evaluations = 0
        self.ball = ball

    def run(self, initial: np.ndarray) -> DescentResult:
        state = NearestAssignment(self.nodes, initial)
        steps = np.full(state.k, self.init_step)
        initial_value = state.value()
        trace = [initial_value]
        iterations = 0
        while iterations < self.max_iters:
            iterations += 1
            moved = False
            reach = float(np.max(state.d1))
            for j in range(state.k):
                accepted, steps[j] = self._improve_point(state, j, steps[j], reach)
                if accepted is not None:
                    state.move(j, accepted, self.node_tree)
                    reach = max(reach, float(np.max(state.d1)))
                    moved = True
            trace.append(state.value())
            if not moved:
                break
        return DescentResult(
            points=state.points.copy(),
            value=state.value(),
            initial_value=initial_value,
            iterations=iterations,
            trace=trace,
            local_evaluations=self.evaluations,
        )

    def _improve_point(
        self, state: NearestAssignment, j: int, step: float, reach: float
    ) -> tuple[np.ndarray | None, float]:
        """Return (new location or None, step size to remember for point j)."""
        center = state.points[j]
        first_trial = min(step / self.step_decay, self.max_step)
        index = np.asarray(
            self.node_tree.query_ball_point(center, reach + first_trial + 2 * self.tol), dtype=np.int64
        )
        if index.size == 0:
            return None, step
        nodes = self.nodes.points[index]
        weights = self.nodes.weights[index]
        excluded = np.where(state.i1[index] == j, state.d2[index], state.d1[index])

        def local(q: np.ndarray) -> float:
            self.evaluations += 1
            return float(np.sum(weights * np.minimum(excluded, np.linalg.norm(nodes - q, axis=1))))

        base = local(center)
        gradient = self._gradient(local, center, nodes)
        norm = float(np.linalg.norm(gradient))
        if not norm > 0 or not math.isfinite(norm):
            return None, step
        direction = -gradient / norm

        trial = first_trial
        while trial >= self.tol:
            candidate = self._clip(center + trial * direction)
            if local(candidate) < base - self.accept_margin:
                return candidate, trial
            trial *= self.step_decay
        return None, trial

    def _clip(self, point: np.ndarray) -> np.ndarray:
        """Radial projection onto the certificate ball; every accepted point stays inside it."""
        if self.ball is None:
            return point
        ball_center, radius = self.ball
        offset = point - ball_center
        norm = float(np.linalg.norm(offset))
        if norm <= radius:
            return point
        return ball_center + offset * (radius / norm)

    def _gradient(self, local, center: np.ndarray, nodes: np.ndarray) -> np.ndarray:
        h = self.tol
        dimension = center.size
        if np.min(np.linalg.norm(nodes - center, axis=1)) < h:
            # dist is not differentiable on a node
            center = center + h / math.sqrt(dimension)
        gradient = np.empty(dimension)
        for axis in range(dimension):
            offset = np.zeros(dimension)
            offset[axis] = h
            gradient[axis] = (local(center + offset) - local(center - offset)) / (2 * h)
        return gradient
