"""Point configurations, ball-complement regions, distances, projections and nets."""

from .distance import (
    RegionDistances,
    config_distances,
    dist_to_config,
    dist_to_region,
    enlarge,
    hausdorff,
    project_region,
    region_distances,
)
from .nets import external_ball_check, perimeter_bound, surface_net, unit_ball_volume, volume_net
from .types import BallComplementRegion, BallUnion, Net, PointConfig

__all__ = [
    "BallComplementRegion",
    "BallUnion",
    "Net",
    "PointConfig",
    "RegionDistances",
    "config_distances",
    "dist_to_config",
    "dist_to_region",
    "enlarge",
    "external_ball_check",
    "hausdorff",
    "perimeter_bound",
    "project_region",
    "region_distances",
    "surface_net",
    "unit_ball_volume",
    "volume_net",
]
