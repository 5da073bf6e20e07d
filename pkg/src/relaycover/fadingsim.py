"""Monte Carlo fading simulator used as an empirical check of the rate model.

Each trial draws an independent unit-mean exponential power gain per link
and direction, forms the per-link SNRs, and declares an outage whenever the
weakest link falls at or below its threshold.  Trials are generated in
fixed-size blocks from a counter-based generator keyed by the seed, so the
result is reproducible and independent of how blocks would be distributed
across workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import (
    ChainPowers,
    QosSpec,
    RadioEnvironment,
    Scheme,
    end_to_end_rate,
    outage_probability,
)

_BLOCK = 1 << 16
_U53 = float(1 << 53)


@dataclass(frozen=True)
class SimConfig:
    """A chain to simulate plus trial count and seed."""

    env: RadioEnvironment
    powers: ChainPowers
    distances: tuple[float, ...]
    qos: QosSpec
    scheme: Scheme
    trials: int
    seed: int

    def __post_init__(self):
        object.__setattr__(self, "distances", tuple(self.distances))
        if len(self.distances) != len(self.powers):
            raise ValueError("distances and powers must describe the same link count")
        if any(d <= 0 for d in self.distances):
            raise ValueError("distances must be positive")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")


@dataclass(frozen=True)
class SimReport:
    """Empirical outage and rate next to their analytic counterparts."""

    trials: int
    seed: int
    empirical_outage_fwd: float
    empirical_outage_bwd: float
    stderr_fwd: float
    stderr_bwd: float
    analytic_outage_fwd: float
    analytic_outage_bwd: float
    z_fwd: float
    z_bwd: float
    empirical_rate_fwd: float
    empirical_rate_bwd: float
    analytic_rate_fwd: float
    analytic_rate_bwd: float


def exponential_unit_mean(gen: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    """Unit-mean exponential samples via inverse CDF on the open unit interval."""
    u = gen.integers(1, 1 << 53, size=shape).astype(np.float64) / _U53
    return -np.log(u)


def _block_generator(seed: int, block_index: int) -> np.random.Generator:
    # Disjoint 2^128-wide counter ranges keep the blocks' streams independent.
    return np.random.Generator(np.random.Philox(key=seed, counter=block_index << 128))


def _z_score(empirical: float, analytic: float, stderr: float) -> float:
    if stderr > 0.0:
        return (empirical - analytic) / stderr
    if empirical == analytic:
        return 0.0
    return math.copysign(math.inf, empirical - analytic)


def estimate(config: SimConfig) -> SimReport:
    """Run the simulation and compare against the analytic formulas."""
    k = len(config.powers)
    alpha = config.env.pathloss_exponent
    w_noise = config.env.bandwidth_hz * config.env.noise_psd_w_per_hz
    a = config.env.pathloss_const
    band_scale = 2.0 * k if config.scheme is Scheme.FREQUENCY_DIVISION else 1.0

    # Mean per-link SNR; a trial's SNR is this times the fading draw.
    mean_snr_fwd = np.array(
        [band_scale * p * a / (d**alpha * w_noise) for p, d in zip(config.powers.fwd_watts, config.distances)]
    )
    mean_snr_bwd = np.array(
        [band_scale * q * a / (d**alpha * w_noise) for q, d in zip(config.powers.bwd_watts, config.distances)]
    )
    thr_fwd = config.qos.snr_thresh_fwd
    thr_bwd = config.qos.snr_thresh_bwd

    outages_fwd = 0
    outages_bwd = 0
    n_blocks = (config.trials + _BLOCK - 1) // _BLOCK
    for block in range(n_blocks):
        n = min(_BLOCK, config.trials - block * _BLOCK)
        gen = _block_generator(config.seed, block)
        phi_fwd = exponential_unit_mean(gen, (n, k))
        phi_bwd = exponential_unit_mean(gen, (n, k))
        outages_fwd += int(np.count_nonzero((mean_snr_fwd * phi_fwd).min(axis=1) <= thr_fwd))
        outages_bwd += int(np.count_nonzero((mean_snr_bwd * phi_bwd).min(axis=1) <= thr_bwd))

    p_fwd = outages_fwd / config.trials
    p_bwd = outages_bwd / config.trials
    se_fwd = math.sqrt(p_fwd * (1.0 - p_fwd) / config.trials)
    se_bwd = math.sqrt(p_bwd * (1.0 - p_bwd) / config.trials)
    an_fwd = outage_probability(
        config.env, config.powers, config.distances, config.qos, config.scheme, "fwd"
    )
    an_bwd = outage_probability(
        config.env, config.powers, config.distances, config.qos, config.scheme, "bwd"
    )
    rate_fwd, rate_bwd = end_to_end_rate(
        config.env, config.powers, config.distances, config.qos, config.scheme
    )
    share = config.env.bandwidth_hz / (2.0 * k)
    emp_rate_fwd = share * math.log1p(thr_fwd) * (1.0 - p_fwd)
    emp_rate_bwd = share * math.log1p(thr_bwd) * (1.0 - p_bwd)
    return SimReport(
        trials=config.trials,
        seed=config.seed,
        empirical_outage_fwd=p_fwd,
        empirical_outage_bwd=p_bwd,
        stderr_fwd=se_fwd,
        stderr_bwd=se_bwd,
        analytic_outage_fwd=an_fwd,
        analytic_outage_bwd=an_bwd,
        z_fwd=_z_score(p_fwd, an_fwd, se_fwd),
        z_bwd=_z_score(p_bwd, an_bwd, se_bwd),
        empirical_rate_fwd=emp_rate_fwd,
        empirical_rate_bwd=emp_rate_bwd,
        analytic_rate_fwd=rate_fwd,
        analytic_rate_bwd=rate_bwd,
    )
