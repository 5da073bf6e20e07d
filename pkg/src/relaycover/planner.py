"""End-to-end deployment planning: base station position plus relay chains.

The base station goes at the center of the polygon's smallest covering disk
(optionally restricted to the exterior or boundary).  Destinations beyond
the single-hop coverage radius get the minimum number of relays, deployed
on the straight segment from the base station to the destination at the
reach-optimal hop split scaled down to the actual distance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .channel import DevicePowers, QosSpec, RadioEnvironment, Scheme, budgets
from .errors import InfeasibleConfiguration, TargetBeyondReach
from .geometry import (
    Disk,
    Point,
    Polygon,
    RegionClass,
    classify_point,
    constrained_min_enclosing_disk,
    min_enclosing_disk,
)
from .relay_opt import min_relays_for_distance, solve_optimal_distances


class PlacementMode(Enum):
    ANYWHERE = "anywhere"
    EXTERIOR_OR_BOUNDARY = "exterior_or_boundary"


@dataclass(frozen=True)
class Scenario:
    """A deployment problem: radio model, QoS, region, and optional targets."""

    env: RadioEnvironment
    qos: QosSpec
    device_powers: DevicePowers
    scheme: Scheme
    polygon: Polygon
    placement_mode: PlacementMode
    destinations: tuple[Point, ...] | None = None

    def __post_init__(self):
        if self.destinations is not None:
            object.__setattr__(
                self, "destinations", tuple(Point(*d) for d in self.destinations)
            )
            for d in self.destinations:
                if classify_point(self.polygon, d) is RegionClass.EXTERIOR:
                    raise ValueError(
                        f"destination {tuple(d)} lies outside the deployment polygon"
                    )


@dataclass(frozen=True)
class DestinationPlan:
    """Relay chain serving one destination (or explaining why none can)."""

    destination: Point
    distance_m: float
    relay_count: int
    relay_positions: tuple[Point, ...]
    achieved_reach_m: float
    feasible: bool


@dataclass(frozen=True)
class DeploymentPlan:
    bs_position: Point
    single_hop_radius_m: float
    coverage_disk: Disk
    destinations: tuple[DestinationPlan, ...]
    worst_vertex: DestinationPlan


def coverage_radius(
    env: RadioEnvironment, qos: QosSpec, device_powers: DevicePowers, scheme: Scheme
) -> float:
    """Maximum relay-free link distance meeting both rate requirements."""
    budg = budgets(env, qos, 1, scheme)
    if budg.fwd <= 0 or budg.bwd <= 0:
        raise InfeasibleConfiguration(
            "a single hop cannot meet the rate requirement at any distance"
        )
    chain = device_powers.chain(1)
    alpha = env.pathloss_exponent
    reach_fwd = (budg.fwd * chain.fwd_watts[0]) ** (1.0 / alpha)
    reach_bwd = (budg.bwd * chain.bwd_watts[0]) ** (1.0 / alpha)
    return min(reach_fwd, reach_bwd)


def _plan_destination(scenario: Scenario, bs: Point, dest: Point) -> DestinationPlan:
    distance = math.dist(bs, dest)
    if distance == 0.0:
        reach = coverage_radius(
            scenario.env, scenario.qos, scenario.device_powers, scenario.scheme
        )
        return DestinationPlan(dest, 0.0, 0, (), reach, True)
    try:
        relays = min_relays_for_distance(
            scenario.env, scenario.qos, scenario.device_powers, scenario.scheme, distance
        )
    except TargetBeyondReach as exc:
        return DestinationPlan(dest, distance, exc.best_relays, (), exc.best_reach_m, False)
    links = relays + 1
    result = solve_optimal_distances(
        scenario.env,
        scenario.qos,
        scenario.device_powers.chain(links),
        links,
        scenario.scheme,
    )
    # Shrink the reach-optimal hop split onto the actual distance; budgets
    # are monotone in every hop length so the scaled chain stays feasible.
    ratio = distance / result.total
    ux = (dest.x - bs.x) / distance
    uy = (dest.y - bs.y) / distance
    positions = []
    offset = 0.0
    for hop in result.distances.d[:-1]:
        offset += hop * ratio
        positions.append(Point(bs.x + ux * offset, bs.y + uy * offset))
    return DestinationPlan(dest, distance, relays, tuple(positions), result.total, True)


def plan(scenario: Scenario) -> DeploymentPlan:
    """Compute the full deployment plan for a scenario.

    Per-destination infeasibility is recorded in the plan rather than
    raised, so one unreachable target never aborts the rest.
    """
    if scenario.placement_mode is PlacementMode.ANYWHERE:
        disk = min_enclosing_disk(scenario.polygon)
    else:
        disk = constrained_min_enclosing_disk(scenario.polygon)
    bs = disk.center
    radius = coverage_radius(
        scenario.env, scenario.qos, scenario.device_powers, scenario.scheme
    )
    worst = max(scenario.polygon.vertices, key=lambda v: (math.dist(bs, v), v.x, v.y))
    worst_plan = _plan_destination(scenario, bs, worst)
    dest_plans = tuple(
        _plan_destination(scenario, bs, d) for d in (scenario.destinations or ())
    )
    return DeploymentPlan(
        bs_position=bs,
        single_hop_radius_m=radius,
        coverage_disk=disk,
        destinations=dest_plans,
        worst_vertex=worst_plan,
    )
