"""Radio link model: path gain, outage probability, and end-to-end data rate.

A chain of K links connects a base station to a destination through K-1
relays that fully decode and re-transmit in both directions.  Each link sees
independent Rayleigh fading (exponential unit-mean power gain) on top of a
power-law path loss, and the chain is scheduled with uniform time division
(each of the 2K link-directions gets a 1/(2K) share of time over the full
band) or uniform frequency division (a 1/(2K) share of the band over the
full time).

All computation is carried out in linear SI units (watts, hertz, meters);
decibel quantities appear only in the constructors and converters below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Literal, Sequence


class Scheme(Enum):
    """Uniform scheduling scheme for sharing time or bandwidth among links."""

    TIME_DIVISION = "td"
    FREQUENCY_DIVISION = "fd"


Direction = Literal["fwd", "bwd"]


def db_to_linear(value_db: float) -> float:
    """Convert a dB power ratio to linear scale."""
    return 10.0 ** (value_db / 10.0)


def linear_to_db(value: float) -> float:
    """Convert a linear power ratio to dB."""
    if value <= 0:
        raise ValueError("linear power ratio must be positive")
    return 10.0 * math.log10(value)


def dbm_to_watts(value_dbm: float) -> float:
    """Convert a power level in dBm to watts."""
    return 10.0 ** ((value_dbm - 30.0) / 10.0)


def watts_to_dbm(value_w: float) -> float:
    """Convert a power level in watts to dBm."""
    if value_w <= 0:
        raise ValueError("power must be positive")
    return 10.0 * math.log10(value_w) + 30.0


@dataclass(frozen=True)
class RadioEnvironment:
    """Propagation and noise parameters.

    Attributes
    ----------
    pathloss_const_db:
        Mean channel gain at 1 m in dB (absorbs shadowing and antenna gains).
    pathloss_exponent:
        Power-law distance exponent; must exceed 1 for the relay placement
        solver's exponents to be well defined.
    noise_psd_dbm_per_hz:
        White Gaussian noise power spectral density in dBm/Hz.
    bandwidth_hz:
        Total system bandwidth in Hz.
    """

    pathloss_const_db: float
    pathloss_exponent: float
    noise_psd_dbm_per_hz: float
    bandwidth_hz: float

    def __post_init__(self):
        if not self.pathloss_exponent > 1.0:
            raise ValueError("pathloss_exponent must exceed 1")
        if not self.bandwidth_hz > 0.0:
            raise ValueError("bandwidth_hz must be positive")
        if not math.isfinite(self.noise_psd_dbm_per_hz):
            raise ValueError("noise PSD must be finite")

    @property
    def pathloss_const(self) -> float:
        """Mean gain at 1 m, linear scale."""
        return db_to_linear(self.pathloss_const_db)

    @property
    def noise_psd_w_per_hz(self) -> float:
        """Noise power spectral density in W/Hz."""
        return dbm_to_watts(self.noise_psd_dbm_per_hz)


@dataclass(frozen=True)
class QosSpec:
    """End-to-end rate requirements and per-link SNR decoding thresholds."""

    rate_fwd_bps: float
    rate_bwd_bps: float
    snr_thresh_fwd_db: float
    snr_thresh_bwd_db: float

    def __post_init__(self):
        if self.rate_fwd_bps <= 0 or self.rate_bwd_bps <= 0:
            raise ValueError("rate requirements must be positive")
        if not (math.isfinite(self.snr_thresh_fwd_db) and math.isfinite(self.snr_thresh_bwd_db)):
            raise ValueError("SNR thresholds must be finite")

    @property
    def snr_thresh_fwd(self) -> float:
        return db_to_linear(self.snr_thresh_fwd_db)

    @property
    def snr_thresh_bwd(self) -> float:
        return db_to_linear(self.snr_thresh_bwd_db)


@dataclass(frozen=True)
class ChainPowers:
    """Per-link transmit powers of a K-link chain, in watts.

    ``fwd_watts[k]`` drives the forward direction of link k+1 and
    ``bwd_watts[k]`` the backward direction.
    """

    fwd_watts: tuple[float, ...]
    bwd_watts: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "fwd_watts", tuple(self.fwd_watts))
        object.__setattr__(self, "bwd_watts", tuple(self.bwd_watts))
        if len(self.fwd_watts) != len(self.bwd_watts):
            raise ValueError("forward and backward power lists must have equal length")
        if len(self.fwd_watts) < 1:
            raise ValueError("a chain needs at least one link")
        if any(p <= 0 for p in self.fwd_watts) or any(q <= 0 for q in self.bwd_watts):
            raise ValueError("transmit powers must be positive")

    def __len__(self) -> int:
        return len(self.fwd_watts)


@dataclass(frozen=True)
class DevicePowers:
    """Transmit power of each device class, in dBm.

    The forward direction of link k is transmitted by device k (base
    station for k=1, relays after that); the backward direction of link k is
    transmitted by device k+1 (destination for k=K).
    """

    bs_dbm: float
    relay_dbm: float
    dest_dbm: float

    def __post_init__(self):
        for v in (self.bs_dbm, self.relay_dbm, self.dest_dbm):
            if not math.isfinite(v):
                raise ValueError("device powers must be finite")

    def chain(self, links: int) -> ChainPowers:
        """Map device powers onto the per-link powers of a chain with ``links`` hops."""
        if links < 1:
            raise ValueError("links must be at least 1")
        bs = dbm_to_watts(self.bs_dbm)
        rel = dbm_to_watts(self.relay_dbm)
        dst = dbm_to_watts(self.dest_dbm)
        fwd = (bs,) + (rel,) * (links - 1)
        bwd = (rel,) * (links - 1) + (dst,)
        return ChainPowers(fwd, bwd)


@dataclass(frozen=True)
class Budgets:
    """Distance budgets and rate headroom for a K-link chain.

    The rate requirement on each direction is equivalent to a cap on the
    weighted sum of hop lengths: sum_k d_k^alpha / p_k <= fwd and
    sum_k d_k^alpha / q_k <= bwd.  The values here are already scaled for
    the scheduling scheme (frequency division multiplies both caps by 2K).
    A nonpositive budget signals that the hop count K cannot support the
    required rate at any positive distance.

    ``headroom_fwd`` and ``headroom_bwd`` are the ratios of the zero-distance
    rate ceiling W*ln(1+threshold)/2 to the required rate; the chain is
    feasible only while K stays below them.
    """

    fwd: float
    bwd: float
    headroom_fwd: float
    headroom_bwd: float


def path_gain(env: RadioEnvironment, distance_m: float) -> float:
    """Mean channel power gain at the given distance, linear scale."""
    if distance_m <= 0:
        raise ValueError("distance must be positive")
    return env.pathloss_const * distance_m ** (-env.pathloss_exponent)


def budgets(env: RadioEnvironment, qos: QosSpec, links: int, scheme: Scheme) -> Budgets:
    """Distance budgets for a chain with ``links`` hops under ``scheme``.

    The natural logarithm is used throughout: the rate of one direction is
    (W/2K) * ln(1+threshold) * P[no outage], so the requirement rate >= R
    rewrites into the distance-budget form returned here.
    """
    if links < 1:
        raise ValueError("links must be at least 1")
    w = env.bandwidth_hz
    noise = env.noise_psd_w_per_hz
    a = env.pathloss_const
    headroom_fwd = w * math.log1p(qos.snr_thresh_fwd) / (2.0 * qos.rate_fwd_bps)
    headroom_bwd = w * math.log1p(qos.snr_thresh_bwd) / (2.0 * qos.rate_bwd_bps)
    fwd = a / (qos.snr_thresh_fwd * w * noise) * math.log(headroom_fwd / links)
    bwd = a / (qos.snr_thresh_bwd * w * noise) * math.log(headroom_bwd / links)
    if scheme is Scheme.FREQUENCY_DIVISION:
        fwd *= 2.0 * links
        bwd *= 2.0 * links
    return Budgets(fwd=fwd, bwd=bwd, headroom_fwd=headroom_fwd, headroom_bwd=headroom_bwd)


def _exponent_args(
    env: RadioEnvironment,
    powers: Sequence[float],
    distances: Sequence[float],
    snr_thresh: float,
    scheme: Scheme,
) -> list[float]:
    # Per-link outage exponent threshold*d^alpha*W*noise/(p*A); frequency
    # division narrows each link's band, shrinking the argument by 2K.
    k = len(powers)
    if len(distances) != k:
        raise ValueError(f"expected {k} distances, got {len(distances)}")
    scale = 2.0 * k if scheme is Scheme.FREQUENCY_DIVISION else 1.0
    w_noise = env.bandwidth_hz * env.noise_psd_w_per_hz
    a = env.pathloss_const
    alpha = env.pathloss_exponent
    return [
        snr_thresh * d**alpha * w_noise / (scale * p * a)
        for p, d in zip(powers, distances)
    ]


def outage_probability(
    env: RadioEnvironment,
    powers: ChainPowers,
    distances: Sequence[float],
    qos: QosSpec,
    scheme: Scheme,
    direction: Direction,
) -> float:
    """Probability that any link of the chain decodes below its SNR threshold.

    With independent unit-mean exponential fading per link this is
    1 - prod_k exp(-threshold * d_k^alpha * W * noise / (p_k * A)), the
    frequency-division variant dividing each exponent argument by 2K.
    """
    if direction == "fwd":
        args = _exponent_args(env, powers.fwd_watts, distances, qos.snr_thresh_fwd, scheme)
    elif direction == "bwd":
        args = _exponent_args(env, powers.bwd_watts, distances, qos.snr_thresh_bwd, scheme)
    else:
        raise ValueError(f"direction must be 'fwd' or 'bwd', got {direction!r}")
    return -math.expm1(-sum(args))


def end_to_end_rate(
    env: RadioEnvironment,
    powers: ChainPowers,
    distances: Sequence[float],
    qos: QosSpec,
    scheme: Scheme,
) -> tuple[float, float]:
    """End-to-end (forward, backward) data rates of the chain in bit/s.

    Each direction delivers (W/2K) * ln(1+threshold) * P[no outage]; the rate
    uses the natural-logarithm convention consistently with :func:`budgets`.
    """
    k = len(powers)
    args_fwd = _exponent_args(env, powers.fwd_watts, distances, qos.snr_thresh_fwd, scheme)
    args_bwd = _exponent_args(env, powers.bwd_watts, distances, qos.snr_thresh_bwd, scheme)
    share = env.bandwidth_hz / (2.0 * k)
    rate_fwd = share * math.log1p(qos.snr_thresh_fwd) * math.exp(-sum(args_fwd))
    rate_bwd = share * math.log1p(qos.snr_thresh_bwd) * math.exp(-sum(args_bwd))
    return rate_fwd, rate_bwd
