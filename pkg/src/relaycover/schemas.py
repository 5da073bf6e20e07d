"""Pydantic models for scenario files and service requests/responses.

The scenario document is the single wire format: the CLI reads it from a
JSON file and the HTTP service receives it embedded in request bodies.
Unknown keys are rejected everywhere; omitted sections fall back to the
default deployment scenario (LTE-style radio parameters, 2 Mbps both ways,
20/17/14 dBm devices, and a four-vertex demonstration polygon).
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .channel import DevicePowers, QosSpec, RadioEnvironment, Scheme
from .geometry import Point, Polygon
from .planner import PlacementMode, Scenario

DEFAULT_POLYGON = [[0.0, 350.0], [300.0, 650.0], [500.0, 600.0], [600.0, 300.0]]


class _StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class RadioParams(_StrictModel):
    pathloss_const_db: float = -15.3
    pathloss_exponent: float = 3.76
    noise_psd_dbm_per_hz: float = -174.0
    bandwidth_mhz: float = Field(default=9.0, gt=0)


class QosParams(_StrictModel):
    rate_fwd_mbps: float = Field(default=2.0, gt=0)
    rate_bwd_mbps: float = Field(default=2.0, gt=0)
    snr_fwd_db: float = 20.0
    snr_bwd_db: float = 20.0


class PowerParams(_StrictModel):
    bs_dbm: float = 20.0
    relay_dbm: float = 17.0
    dest_dbm: float = 14.0


class PolygonParams(_StrictModel):
    vertices: list[tuple[float, float]] = Field(min_length=3)


class ScenarioFile(_StrictModel):
    """Complete deployment scenario as stored on disk or sent over HTTP."""

    radio: RadioParams = Field(default_factory=RadioParams)
    qos: QosParams = Field(default_factory=QosParams)
    powers: PowerParams = Field(default_factory=PowerParams)
    scheme: Literal["td", "fd"] = "td"
    polygon: PolygonParams = Field(
        default_factory=lambda: PolygonParams(vertices=[tuple(v) for v in DEFAULT_POLYGON])
    )
    placement_mode: Literal["anywhere", "exterior_or_boundary"] = "anywhere"
    destinations: Optional[list[tuple[float, float]]] = None

    def radio_environment(self) -> RadioEnvironment:
        return RadioEnvironment(
            pathloss_const_db=self.radio.pathloss_const_db,
            pathloss_exponent=self.radio.pathloss_exponent,
            noise_psd_dbm_per_hz=self.radio.noise_psd_dbm_per_hz,
            bandwidth_hz=self.radio.bandwidth_mhz * 1e6,
        )

    def qos_spec(self) -> QosSpec:
        return QosSpec(
            rate_fwd_bps=self.qos.rate_fwd_mbps * 1e6,
            rate_bwd_bps=self.qos.rate_bwd_mbps * 1e6,
            snr_thresh_fwd_db=self.qos.snr_fwd_db,
            snr_thresh_bwd_db=self.qos.snr_bwd_db,
        )

    def device_powers(self) -> DevicePowers:
        return DevicePowers(
            bs_dbm=self.powers.bs_dbm,
            relay_dbm=self.powers.relay_dbm,
            dest_dbm=self.powers.dest_dbm,
        )

    def scheme_enum(self) -> Scheme:
        return Scheme(self.scheme)

    def polygon_shape(self) -> Polygon:
        return Polygon(self.polygon.vertices)

    def scenario(self) -> Scenario:
        dests = (
            tuple(Point(*d) for d in self.destinations)
            if self.destinations is not None
            else None
        )
        return Scenario(
            env=self.radio_environment(),
            qos=self.qos_spec(),
            device_powers=self.device_powers(),
            scheme=self.scheme_enum(),
            polygon=self.polygon_shape(),
            placement_mode=PlacementMode(self.placement_mode),
            destinations=dests,
        )


class PowerSweepParams(_StrictModel):
    lo_dbm: float
    hi_dbm: float
    step_dbm: float = Field(gt=0)

    @model_validator(mode="after")
    def _ordered(self):
        if self.hi_dbm < self.lo_dbm:
            raise ValueError("hi_dbm must not be below lo_dbm")
        return self

    def values(self) -> list[float]:
        out = []
        v = self.lo_dbm
        while v <= self.hi_dbm + 1e-9:
            out.append(round(v, 9))
            v += self.step_dbm
        return out


class RelaysRequest(_StrictModel):
    """Solve for one relay count, sweep relay counts, or sweep transmit power."""

    scenario: ScenarioFile = Field(default_factory=ScenarioFile)
    relays: Optional[int] = Field(default=None, ge=0)
    sweep: bool = False
    power_sweep: Optional[PowerSweepParams] = None

    @model_validator(mode="after")
    def _one_mode(self):
        if self.sweep and (self.power_sweep is not None or self.relays is not None):
            raise ValueError("sweep excludes relays and power_sweep")
        return self


class RelayRow(_StrictModel):
    scheme: str
    power_dbm: float
    relays: int
    links: int
    total_m: float
    distances_m: list[float]


class RelaysResponse(_StrictModel):
    rows: list[RelayRow]


class CoverRequest(_StrictModel):
    scenario: ScenarioFile = Field(default_factory=ScenarioFile)


class CoverResponse(_StrictModel):
    placement_mode: str
    center: tuple[float, float]
    radius_m: float
    vertices: list[tuple[float, float]]
    distances_m: list[float]


class PlanRequest(_StrictModel):
    scenario: ScenarioFile = Field(default_factory=ScenarioFile)


class DestinationPlanModel(_StrictModel):
    destination: tuple[float, float]
    distance_m: float
    relays: int
    relay_positions: list[tuple[float, float]]
    relay_offsets_m: list[float]
    achieved_reach_m: float
    feasible: bool


class PlanResponse(_StrictModel):
    scheme: str
    placement_mode: str
    bs_position: tuple[float, float]
    single_hop_radius_m: float
    covering_radius_m: float
    destinations: list[DestinationPlanModel]
    worst_vertex: DestinationPlanModel


class SimulateRequest(_StrictModel):
    """Simulate a chain: either the reach-optimal one for ``relays`` or
    explicit hop lengths."""

    scenario: ScenarioFile = Field(default_factory=ScenarioFile)
    trials: int = Field(default=100_000, ge=1)
    seed: int = Field(default=1, ge=0, lt=2**64)
    relays: int = Field(default=1, ge=0)
    distances_m: Optional[list[float]] = None


class SimulateRow(_StrictModel):
    direction: str
    scheme: str
    links: int
    trials: int
    seed: int
    empirical_outage: float
    analytic_outage: float
    stderr: float
    z_score: float
    empirical_rate_bps: float
    analytic_rate_bps: float


class SimulateResponse(_StrictModel):
    rows: list[SimulateRow]
