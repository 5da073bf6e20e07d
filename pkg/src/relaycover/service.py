"""HTTP service exposing the planners, plus the handlers the CLI reuses.

Each endpoint body is a plain function taking a request model and returning
a response model, so the CLI can call the same logic in process without a
running server.
"""

from __future__ import annotations

import math

from fastapi import FastAPI, HTTPException

from . import geometry, planner, relay_opt
from .channel import Scheme
from .errors import InfeasibleConfiguration
from .fadingsim import SimConfig, estimate
from .planner import DestinationPlan
from .schemas import (
    CoverRequest,
    CoverResponse,
    DestinationPlanModel,
    PlanRequest,
    PlanResponse,
    RelayRow,
    RelaysRequest,
    RelaysResponse,
    SimulateRequest,
    SimulateResponse,
    SimulateRow,
)


def _relay_row(scenario, power_dbm: float, links: int) -> RelayRow:
    env = scenario.radio_environment()
    qos = scenario.qos_spec()
    devices = scenario.device_powers()
    result = relay_opt.solve_optimal_distances(
        env, qos, devices.chain(links), links, scenario.scheme_enum()
    )
    return RelayRow(
        scheme=scenario.scheme,
        power_dbm=power_dbm,
        relays=links - 1,
        links=links,
        total_m=result.total,
        distances_m=list(result.distances.d),
    )


def run_relays(request: RelaysRequest) -> RelaysResponse:
    scenario = request.scenario
    env = scenario.radio_environment()
    qos = scenario.qos_spec()
    if request.power_sweep is not None:
        links = (request.relays if request.relays is not None else 1) + 1
        base = scenario.powers
        rows = []
        for p in request.power_sweep.values():
            shifted = scenario.model_copy(deep=True)
            shifted.powers.bs_dbm = p
            shifted.powers.relay_dbm = p + (base.relay_dbm - base.bs_dbm)
            shifted.powers.dest_dbm = p + (base.dest_dbm - base.bs_dbm)
            rows.append(_relay_row(shifted, p, links))
        return RelaysResponse(rows=rows)
    if request.relays is not None and not request.sweep:
        row = _relay_row(scenario, scenario.powers.bs_dbm, request.relays + 1)
        return RelaysResponse(rows=[row])
    sweep = relay_opt.best_relay_count(
        env, qos, scenario.device_powers(), scenario.scheme_enum()
    )
    rows = [
        RelayRow(
            scheme=scenario.scheme,
            power_dbm=scenario.powers.bs_dbm,
            relays=entry.relays,
            links=entry.links,
            total_m=entry.result.total,
            distances_m=list(entry.result.distances.d),
        )
        for entry in sweep.table
    ]
    return RelaysResponse(rows=rows)


def run_cover(request: CoverRequest) -> CoverResponse:
    scenario = request.scenario
    poly = scenario.polygon_shape()
    if scenario.placement_mode == "anywhere":
        disk = geometry.min_enclosing_disk(poly)
    else:
        disk = geometry.constrained_min_enclosing_disk(poly)
    vertices = [tuple(v) for v in scenario.polygon.vertices]
    return CoverResponse(
        placement_mode=scenario.placement_mode,
        center=(disk.center.x, disk.center.y),
        radius_m=disk.radius,
        vertices=vertices,
        distances_m=[math.dist(disk.center, v) for v in vertices],
    )


def _destination_model(entry: DestinationPlan, bs) -> DestinationPlanModel:
    return DestinationPlanModel(
        destination=(entry.destination.x, entry.destination.y),
        distance_m=entry.distance_m,
        relays=entry.relay_count,
        relay_positions=[(p.x, p.y) for p in entry.relay_positions],
        relay_offsets_m=[math.dist(bs, p) for p in entry.relay_positions],
        achieved_reach_m=entry.achieved_reach_m,
        feasible=entry.feasible,
    )


def run_plan(request: PlanRequest) -> PlanResponse:
    scenario = request.scenario
    result = planner.plan(scenario.scenario())
    bs = result.bs_position
    return PlanResponse(
        scheme=scenario.scheme,
        placement_mode=scenario.placement_mode,
        bs_position=(bs.x, bs.y),
        single_hop_radius_m=result.single_hop_radius_m,
        covering_radius_m=result.coverage_disk.radius,
        destinations=[_destination_model(d, bs) for d in result.destinations],
        worst_vertex=_destination_model(result.worst_vertex, bs),
    )


def run_simulate(request: SimulateRequest) -> SimulateResponse:
    scenario = request.scenario
    env = scenario.radio_environment()
    qos = scenario.qos_spec()
    devices = scenario.device_powers()
    scheme = scenario.scheme_enum()
    if request.distances_m is not None:
        distances = tuple(request.distances_m)
        links = len(distances)
        if links < 1:
            raise InfeasibleConfiguration("explicit distances must name at least one link")
    else:
        links = request.relays + 1
        result = relay_opt.solve_optimal_distances(
            env, qos, devices.chain(links), links, scheme
        )
        distances = result.distances.d
    config = SimConfig(
        env=env,
        powers=devices.chain(links),
        distances=distances,
        qos=qos,
        scheme=scheme,
        trials=request.trials,
        seed=request.seed,
    )
    report = estimate(config)
    rows = [
        SimulateRow(
            direction="fwd",
            scheme=scenario.scheme,
            links=links,
            trials=report.trials,
            seed=report.seed,
            empirical_outage=report.empirical_outage_fwd,
            analytic_outage=report.analytic_outage_fwd,
            stderr=report.stderr_fwd,
            z_score=report.z_fwd,
            empirical_rate_bps=report.empirical_rate_fwd,
            analytic_rate_bps=report.analytic_rate_fwd,
        ),
        SimulateRow(
            direction="bwd",
            scheme=scenario.scheme,
            links=links,
            trials=report.trials,
            seed=report.seed,
            empirical_outage=report.empirical_outage_bwd,
            analytic_outage=report.analytic_outage_bwd,
            stderr=report.stderr_bwd,
            z_score=report.z_bwd,
            empirical_rate_bps=report.empirical_rate_bwd,
            analytic_rate_bps=report.analytic_rate_bwd,
        ),
    ]
    return SimulateResponse(rows=rows)


app = FastAPI(
    title="relaycover",
    description="Coverage planning for relay-assisted wireless networks",
)


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/relays", response_model=RelaysResponse)
def relays_endpoint(request: RelaysRequest) -> RelaysResponse:
    try:
        return run_relays(request)
    except InfeasibleConfiguration as exc:
        raise HTTPException(status_code=409, detail=str(exc))


@app.post("/cover", response_model=CoverResponse)
def cover_endpoint(request: CoverRequest) -> CoverResponse:
    try:
        return run_cover(request)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.post("/plan", response_model=PlanResponse)
def plan_endpoint(request: PlanRequest) -> PlanResponse:
    try:
        return run_plan(request)
    except InfeasibleConfiguration as exc:
        raise HTTPException(status_code=409, detail=str(exc))
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.post("/simulate", response_model=SimulateResponse)
def simulate_endpoint(request: SimulateRequest) -> SimulateResponse:
    try:
        return run_simulate(request)
    except InfeasibleConfiguration as exc:
        raise HTTPException(status_code=409, detail=str(exc))
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
