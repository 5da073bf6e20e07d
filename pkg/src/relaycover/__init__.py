"""Coverage planning for relay-assisted wireless networks.

Computes where to place decode-and-forward relays to maximize the reach
from a base station under an end-to-end rate requirement, where to place a
mobile base station to cover a polygonal region (anywhere, or restricted to
the region's exterior and boundary), and how many relays specific
destinations need.  A Monte Carlo fading simulator provides an empirical
check of the analytic outage and rate formulas.
"""

from .channel import (
    Budgets,
    ChainPowers,
    DevicePowers,
    QosSpec,
    RadioEnvironment,
    Scheme,
    budgets,
    db_to_linear,
    dbm_to_watts,
    end_to_end_rate,
    linear_to_db,
    outage_probability,
    path_gain,
    watts_to_dbm,
)
from .errors import InfeasibleConfiguration, PlanningError, TargetBeyondReach
from .fadingsim import SimConfig, SimReport, estimate
from .geometry import (
    Disk,
    Point,
    Polygon,
    RegionClass,
    bisector_edge_candidate,
    circumcenter,
    classify_point,
    constrained_min_enclosing_disk,
    foot_of_perpendicular,
    max_dist_to_vertices,
    min_enclosing_disk,
    pair_candidate,
)
from .planner import (
    DeploymentPlan,
    DestinationPlan,
    PlacementMode,
    Scenario,
    coverage_radius,
    plan,
)
from .relay_opt import (
    DistanceTuple,
    KktCase,
    Multipliers,
    ReachResult,
    RelaySweep,
    best_relay_count,
    distances_from_multipliers,
    identical_closed_form,
    max_relay_count,
    min_relays_for_distance,
    prop2_turning_points,
    solve_both_constraints,
    solve_optimal_distances,
    solve_single_constraint,
)

__version__ = "0.1.0"

__all__ = [
    "Budgets",
    "ChainPowers",
    "DevicePowers",
    "QosSpec",
    "RadioEnvironment",
    "Scheme",
    "budgets",
    "db_to_linear",
    "dbm_to_watts",
    "end_to_end_rate",
    "linear_to_db",
    "outage_probability",
    "path_gain",
    "watts_to_dbm",
    "InfeasibleConfiguration",
    "PlanningError",
    "TargetBeyondReach",
    "SimConfig",
    "SimReport",
    "estimate",
    "Disk",
    "Point",
    "Polygon",
    "RegionClass",
    "bisector_edge_candidate",
    "circumcenter",
    "classify_point",
    "constrained_min_enclosing_disk",
    "foot_of_perpendicular",
    "max_dist_to_vertices",
    "min_enclosing_disk",
    "pair_candidate",
    "DeploymentPlan",
    "DestinationPlan",
    "PlacementMode",
    "Scenario",
    "coverage_radius",
    "plan",
    "DistanceTuple",
    "KktCase",
    "Multipliers",
    "ReachResult",
    "RelaySweep",
    "best_relay_count",
    "distances_from_multipliers",
    "identical_closed_form",
    "max_relay_count",
    "min_relays_for_distance",
    "prop2_turning_points",
    "solve_both_constraints",
    "solve_optimal_distances",
    "solve_single_constraint",
]
