import math

import pytest

from relaycover import (
    DevicePowers,
    PlacementMode,
    Point,
    Polygon,
    QosSpec,
    Scenario,
    Scheme,
    coverage_radius,
    end_to_end_rate,
    plan,
    solve_optimal_distances,
)

TD = Scheme.TIME_DIVISION
FD = Scheme.FREQUENCY_DIVISION


def _scenario(env, qos, devices, quad, scheme=TD, mode=PlacementMode.ANYWHERE, dests=None):
    return Scenario(
        env=env,
        qos=qos,
        device_powers=devices,
        scheme=scheme,
        polygon=quad,
        placement_mode=mode,
        destinations=dests,
    )


def test_coverage_radius_values(env, qos, devices):
    assert coverage_radius(env, qos, devices, TD) == pytest.approx(204.0, abs=2.0)
    assert coverage_radius(env, qos, devices, FD) == pytest.approx(245.0, abs=2.0)


def test_coverage_radius_symmetric_setup(env, qos):
    devices = DevicePowers(bs_dbm=18.0, relay_dbm=15.0, dest_dbm=18.0)
    budg_free = coverage_radius(env, qos, devices, TD)
    # Equal endpoint powers and symmetric QoS: both directions give the
    # same radius, so tightening either side by 3 dB moves it identically.
    asym_fwd = coverage_radius(env, qos, DevicePowers(15.0, 15.0, 18.0), TD)
    asym_bwd = coverage_radius(env, qos, DevicePowers(18.0, 15.0, 15.0), TD)
    assert asym_fwd == pytest.approx(asym_bwd, rel=1e-12)
    assert asym_fwd < budg_free


def test_destinations_must_lie_in_polygon(env, qos, devices, quad):
    with pytest.raises(ValueError):
        _scenario(env, qos, devices, quad, dests=((5000.0, 5000.0),))


def test_plan_base_station_position_and_radius(env, qos, devices, quad):
    result = plan(_scenario(env, qos, devices, quad))
    assert result.bs_position == pytest.approx((303.5714285714286, 367.8571428571429))
    assert result.coverage_disk.radius == pytest.approx(304.096, abs=0.01)
    assert result.single_hop_radius_m == pytest.approx(204.0, abs=2.0)
    assert result.destinations == ()


def test_plan_constrained_base_station(env, qos, devices, quad):
    result = plan(_scenario(env, qos, devices, quad, mode=PlacementMode.EXTERIOR_OR_BOUNDARY))
    assert result.bs_position == pytest.approx((324.4897959183674, 322.9591836734694))


def test_plan_far_vertex_needs_one_relay(env, qos, devices, quad):
    result = plan(_scenario(env, qos, devices, quad, dests=((0.0, 350.0),)))
    entry = result.destinations[0]
    assert entry.feasible
    assert entry.relay_count == 1
    assert entry.distance_m == pytest.approx(304.096, abs=0.01)
    assert len(entry.relay_positions) == 1
    # The relay sits on the segment at the scaled share of the optimal split.
    bs = result.bs_position
    solved = solve_optimal_distances(env, qos, devices.chain(2), 2, TD)
    expected_offset = solved.distances.d[0] * entry.distance_m / solved.total
    assert math.dist(bs, entry.relay_positions[0]) == pytest.approx(expected_offset, rel=1e-9)
    cross = (entry.destination.x - bs.x) * (entry.relay_positions[0].y - bs.y) - (
        entry.destination.y - bs.y
    ) * (entry.relay_positions[0].x - bs.x)
    assert abs(cross) < 1e-6


def test_plan_hops_recover_optimal_split_at_full_reach(env, qos, devices):
    # A destination exactly at the two-hop maximum reach gets the unscaled
    # optimal split: first hop about 192 m under time division.
    solved = solve_optimal_distances(env, qos, devices.chain(2), 2, TD)
    poly = Polygon([(0.0, 0.0), (solved.total, 0.0), (solved.total, 10.0), (0.0, 10.0)])
    scenario = Scenario(
        env=env,
        qos=qos,
        device_powers=devices,
        scheme=TD,
        polygon=poly,
        placement_mode=PlacementMode.ANYWHERE,
        destinations=None,
    )
    result = plan(scenario)
    bs = result.bs_position
    target = Point(bs.x + solved.total, bs.y)
    from relaycover.planner import _plan_destination

    entry = _plan_destination(scenario, bs, target)
    assert entry.relay_count == 1
    assert math.dist(bs, entry.relay_positions[0]) == pytest.approx(192.0, abs=2.0)


def test_plan_scaled_hops_meet_rate_requirement(env, qos, devices, quad):
    result = plan(_scenario(env, qos, devices, quad, dests=((0.0, 350.0), (450.0, 550.0))))
    bs = result.bs_position
    for entry in result.destinations:
        assert entry.feasible
        points = (bs,) + entry.relay_positions + (entry.destination,)
        hops = [math.dist(points[i], points[i + 1]) for i in range(len(points) - 1)]
        assert sum(hops) == pytest.approx(entry.distance_m, rel=1e-9)
        if entry.distance_m == 0.0:
            continue
        powers = devices.chain(len(hops))
        rate_fwd, rate_bwd = end_to_end_rate(env, powers, hops, qos, TD)
        assert rate_fwd >= qos.rate_fwd_bps * (1 - 1e-9)
        assert rate_bwd >= qos.rate_bwd_bps * (1 - 1e-9)


def test_plan_in_coverage_destination_gets_no_relays(env, qos, devices, quad):
    near = (350.0, 400.0)  # well inside the single-hop radius of the center
    result = plan(_scenario(env, qos, devices, quad, dests=(near,)))
    entry = result.destinations[0]
    assert entry.relay_count == 0
    assert entry.relay_positions == ()
    assert entry.feasible


def test_plan_destination_on_base_station(env, qos, devices, quad):
    bs = plan(_scenario(env, qos, devices, quad)).bs_position
    result = plan(_scenario(env, qos, devices, quad, dests=(tuple(bs),)))
    entry = result.destinations[0]
    assert entry.relay_count == 0
    assert entry.distance_m == 0.0
    assert entry.feasible


def test_plan_records_infeasible_destination(env, devices, quad):
    # A rate requirement harsh enough that only one relay is admissible
    # makes the far vertex unreachable without aborting the plan.
    qos = QosSpec(7e6, 7e6, 20.0, 20.0)
    result = plan(_scenario(env, qos, devices, quad, dests=((0.0, 350.0), (350.0, 400.0))))
    far, near = result.destinations
    assert not far.feasible
    assert far.relay_positions == ()
    assert far.achieved_reach_m < far.distance_m
    assert near.feasible


def test_plan_worst_vertex_analysis(env, qos, devices, quad):
    result = plan(_scenario(env, qos, devices, quad))
    worst = result.worst_vertex
    assert worst.distance_m == pytest.approx(304.096, abs=0.01)
    assert worst.relay_count == 1
    assert worst.feasible
    # No polygon vertex is farther from the base station.
    assert all(
        math.dist(result.bs_position, v) <= worst.distance_m * (1 + 1e-12)
        for v in quad.vertices
    )


def test_closer_destination_never_needs_more_relays(env, qos, devices, quad):
    bs = plan(_scenario(env, qos, devices, quad)).bs_position
    far = Point(0.0, 350.0)
    ux = (far.x - bs.x) / math.dist(bs, far)
    uy = (far.y - bs.y) / math.dist(bs, far)
    counts = []
    for frac in (1.0, 0.75, 0.5, 0.25, 0.05):
        dist = frac * math.dist(bs, far)
        dest = (bs.x + ux * dist, bs.y + uy * dist)
        result = plan(_scenario(env, qos, devices, quad, dests=(dest,)))
        counts.append(result.destinations[0].relay_count)
    assert counts == sorted(counts, reverse=True)


def test_plan_is_deterministic(env, qos, devices, quad):
    scenario = _scenario(env, qos, devices, quad, dests=((0.0, 350.0),))
    assert plan(scenario) == plan(scenario)
