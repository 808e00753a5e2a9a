"""Scenario file schemas are defined here."""

from typing import Annotated, Literal

from pydantic import Field, model_validator

from .base import StrictModel
from .measure import MeasureSpec


class GridSpec(StrictModel):
    """Regular candidate grid: `resolution` points per axis from `lower` to `upper` inclusive."""

    lower: list[float] = Field(..., min_length=1)
    upper: list[float] = Field(..., min_length=1)
    resolution: list[int] = Field(..., min_length=1)


class RegionSpec(StrictModel):
    """Ball-complement region given explicitly."""

    centers: list[list[float]] = Field(..., min_length=1)
    radii: list[float] = Field(..., min_length=1)

    @model_validator(mode="after")
    def _check_sizes(self) -> "RegionSpec":
        if len(self.centers) != len(self.radii):
            raise ValueError(f"{len(self.centers)} centers but {len(self.radii)} radii")
        return self


class SolverParams(StrictModel):
    """Local search parameters; unset values are taken from the application config."""

    restarts: int | None = Field(None, ge=1)
    max_iters: int | None = Field(None, ge=1)
    init_step: float | None = Field(None, gt=0)
    step_decay: float | None = Field(None, gt=0, lt=1)
    tol: float | None = Field(None, gt=0)
    init: Literal["sample", "lattice"] = "sample"


class SolveKTask(SolverParams):
    """Solve the k-point problem."""

    kind: Literal["solve_k"]
    solver: Literal["local_search", "brute_force"] = "local_search"
    k: int = Field(..., ge=1)
    candidates: list[list[float]] | None = Field(None, description="explicit candidate points for brute_force")
    candidate_grid: GridSpec | None = None
    cap: int | None = Field(None, ge=1, description="brute_force subset cap")


class RegionTask(SolverParams):
    """Canonicalize, optimize and certify a ball-complement region.

    The starting region comes from `sigma` (canonicalized), from `radii` around the negative atoms, or from a
    local search with `k` points followed by canonicalization.
    """

    kind: Literal["region"]
    sigma: list[list[float]] | None = None
    radii: list[float] | None = None
    k: int | None = Field(None, ge=1)
    discretize_step: float | None = Field(None, gt=0, description="grid step collapsing a negative density to atoms")
    optimize: bool = True
    mesh: float = Field(1e-3, gt=0)
    max_sweeps: int = Field(50, ge=1)
    enlargement: float | None = Field(None, gt=0)
    external_ball_samples: int = Field(256, ge=1)

    @model_validator(mode="after")
    def _check_start(self) -> "RegionTask":
        given = [name for name in ("sigma", "radii", "k") if getattr(self, name) is not None]
        if len(given) != 1:
            raise ValueError("exactly one of `sigma`, `radii` and `k` is required")
        return self


class ThetaTask(StrictModel):
    """Estimate the quantization constant of the unit cube."""

    kind: Literal["theta"]
    n: int = Field(..., ge=1, le=3)
    k: int = Field(..., ge=1)
    restarts: int = Field(8, ge=1)
    grid_res: int = Field(256, ge=1)
    init: Literal["sample", "lattice"] = "lattice"
    max_iters: int = Field(200, ge=1)
    tol: float = Field(1e-7, gt=0)


class DensityTask(StrictModel):
    """Limit density of the first positive density on a region and its energy."""

    kind: Literal["density"]
    region: RegionSpec
    theta: float | None = Field(None, gt=0, description="quantization constant, the configured one when unset")


class ConvergeTask(SolverParams):
    """k-sweep against a reference region and its limit density."""

    kind: Literal["converge"]
    k_schedule: list[int] = Field(..., min_length=1)
    region: RegionSpec
    mesh: float | None = Field(None, gt=0)
    theta: float | None = Field(None, gt=0)

    @model_validator(mode="after")
    def _check_schedule(self) -> "ConvergeTask":
        if any(k < 1 for k in self.k_schedule) or any(b <= a for a, b in zip(self.k_schedule, self.k_schedule[1:])):
            raise ValueError("k_schedule must be strictly increasing positive integers")
        return self


class ProbeTask(StrictModel):
    """F of a single point at distance r from the center of a uniform circle against a central atom."""

    kind: Literal["probe"]
    radii: list[float] = Field(default_factory=lambda: [0.5 * i for i in range(21)], min_length=2)
    circle_nodes: int = Field(10_000, ge=8)


class ValidateTask(StrictModel):
    """Run the check battery."""

    kind: Literal["validate"]
    quick: bool = False
    checks: list[str] | None = None
    theta_1: float | None = Field(None, gt=0, description="override of the one-dimensional constant")


class ExampleTask(StrictModel):
    """Run a built-in scenario."""

    kind: Literal["example"]
    name: str


Task = Annotated[
    SolveKTask | RegionTask | ThetaTask | DensityTask | ConvergeTask | ProbeTask | ValidateTask | ExampleTask,
    Field(discriminator="kind"),
]

MEASURE_TASKS = ("solve_k", "region", "density", "converge")


class Scenario(StrictModel):
    """One experiment: a signed measure, a task and the seed every random choice derives from."""

    name: str = Field(..., min_length=1)
    dimension: int = Field(1, ge=1, le=3)
    seed: int = Field(..., ge=0, lt=2**64)
    output_dir: str | None = None
    measure: MeasureSpec | None = None
    task: Task

    @model_validator(mode="after")
    def _check_measure(self) -> "Scenario":
        if self.task.kind in MEASURE_TASKS and self.measure is None:
            raise ValueError(f"task `{self.task.kind}` needs a `measure` section")
        if self.task.kind == "density" and (self.measure is None or not self.measure.plus.densities):
            raise ValueError("task `density` needs a positive density")
        if self.task.kind == "converge" and (self.measure is None or not self.measure.plus.densities):
            raise ValueError("task `converge` needs a positive density")
        return self

    @model_validator(mode="after")
    def _check_dimensions(self) -> "Scenario":
        rows: list[tuple[str, list]] = []
        if self.measure is not None:
            for part in (self.measure.plus, self.measure.minus):
                rows += [("atom location", atom.location) for atom in part.atoms]
                rows += [("density box", density.lower) for density in part.densities]
        for name in ("candidates", "sigma"):
            rows += [(name, point) for point in getattr(self.task, name, None) or []]
        grid = getattr(self.task, "candidate_grid", None)
        if grid is not None:
            rows += [("candidate_grid", value) for value in (grid.lower, grid.upper, grid.resolution)]
        region = getattr(self.task, "region", None)
        if region is not None:
            rows += [("region center", center) for center in region.centers]
        for what, row in rows:
            if len(row) != self.dimension:
                raise ValueError(f"{what} {row} has {len(row)} coordinates but the dimension is {self.dimension}")
        return self
