import math

import pytest

from relaycover import (
    ChainPowers,
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

TD = Scheme.TIME_DIVISION
FD = Scheme.FREQUENCY_DIVISION


def test_unit_conversions():
    assert dbm_to_watts(30.0) == pytest.approx(1.0)
    assert dbm_to_watts(20.0) == pytest.approx(0.1)
    assert db_to_linear(0.0) == pytest.approx(1.0)
    assert db_to_linear(20.0) == pytest.approx(100.0)
    assert watts_to_dbm(dbm_to_watts(17.0)) == pytest.approx(17.0)
    assert linear_to_db(db_to_linear(-3.5)) == pytest.approx(-3.5)


def test_environment_validation():
    with pytest.raises(ValueError):
        RadioEnvironment(-15.3, 1.0, -174.0, 9e6)
    with pytest.raises(ValueError):
        RadioEnvironment(-15.3, 3.76, -174.0, 0.0)
    with pytest.raises(ValueError):
        QosSpec(0.0, 2e6, 20.0, 20.0)
    with pytest.raises(ValueError):
        ChainPowers((0.1,), (0.05, 0.02))
    with pytest.raises(ValueError):
        ChainPowers((0.1, -0.1), (0.05, 0.02))


def test_path_gain_at_one_meter_is_reference_constant(env):
    assert path_gain(env, 1.0) == pytest.approx(10 ** (-15.3 / 10), rel=1e-12)


def test_path_gain_matches_log_distance_law(env):
    # 10*log10(gain) must follow -15.3 - 37.6*log10(d).
    for d in (0.5, 1.0, 7.3, 100.0, 2040.0):
        expected_db = -15.3 - 37.6 * math.log10(d)
        assert 10 * math.log10(path_gain(env, d)) == pytest.approx(expected_db, abs=1e-9)
    # Direct evaluation at 100 m.
    assert path_gain(env, 100.0) == pytest.approx(10 ** (-90.5 / 10), rel=1e-12)


def test_path_gain_rejects_nonpositive_distance(env):
    with pytest.raises(ValueError):
        path_gain(env, 0.0)
    with pytest.raises(ValueError):
        path_gain(env, -4.0)


def test_budget_headroom_value(env, qos):
    b = budgets(env, qos, 1, TD)
    expected = 9e6 * math.log(101.0) / (2 * 2e6)
    assert b.headroom_fwd == pytest.approx(expected, rel=1e-12)
    assert b.headroom_fwd == pytest.approx(10.384021162892834, rel=1e-12)
    assert math.floor(b.headroom_fwd - 1) == 9
    assert b.headroom_bwd == b.headroom_fwd


def test_budget_zero_when_rate_equals_ceiling(env):
    # Requiring exactly the zero-distance rate ceiling leaves no margin.
    w = 9e6
    gamma_db = 20.0
    rate = w * math.log(1 + db_to_linear(gamma_db)) / 2.0
    qos = QosSpec(rate, rate, gamma_db, gamma_db)
    b = budgets(env, qos, 1, TD)
    assert b.fwd == pytest.approx(0.0, abs=1e-12)


def test_frequency_division_scales_budgets_by_2k(env, qos):
    for k in (1, 2, 5):
        td = budgets(env, qos, k, TD)
        fd = budgets(env, qos, k, FD)
        assert fd.fwd == pytest.approx(2 * k * td.fwd, rel=1e-12)
        assert fd.bwd == pytest.approx(2 * k * td.bwd, rel=1e-12)


def _chain(k):
    return ChainPowers((0.1,) + (0.05,) * (k - 1), (0.05,) * (k - 1) + (0.025,))


def test_outage_vanishes_at_zero_distance(env, qos):
    powers = _chain(3)
    assert outage_probability(env, powers, [1e-9] * 3, qos, TD, "fwd") == pytest.approx(0.0, abs=1e-12)


def test_outage_single_link_closed_form(env, qos):
    p = 0.1
    d = 150.0
    powers = ChainPowers((p,), (p,))
    arg = (
        qos.snr_thresh_fwd
        * d**env.pathloss_exponent
        * env.bandwidth_hz
        * env.noise_psd_w_per_hz
        / (p * env.pathloss_const)
    )
    expected = 1 - math.exp(-arg)
    assert outage_probability(env, powers, [d], qos, TD, "fwd") == pytest.approx(expected, rel=1e-12)


def test_outage_rejects_length_mismatch(env, qos):
    with pytest.raises(ValueError):
        outage_probability(env, _chain(2), [100.0], qos, TD, "fwd")
    with pytest.raises(ValueError):
        end_to_end_rate(env, _chain(2), [100.0, 50.0, 10.0], qos, TD)


def test_rate_outage_identity(env, qos):
    # rate == (W/2K) * ln(1+threshold) * (1 - outage), exactly.
    for scheme in (TD, FD):
        for k, distances in ((1, [210.0]), (3, [150.0, 120.0, 90.0])):
            powers = _chain(k)
            rf, rb = end_to_end_rate(env, powers, distances, qos, scheme)
            of = outage_probability(env, powers, distances, qos, scheme, "fwd")
            ob = outage_probability(env, powers, distances, qos, scheme, "bwd")
            cap_f = env.bandwidth_hz / (2 * k) * math.log1p(qos.snr_thresh_fwd)
            cap_b = env.bandwidth_hz / (2 * k) * math.log1p(qos.snr_thresh_bwd)
            assert rf == pytest.approx(cap_f * (1 - of), rel=1e-12)
            assert rb == pytest.approx(cap_b * (1 - ob), rel=1e-12)


def test_zero_distance_rate_limit(env, qos):
    k = 4
    rf, rb = end_to_end_rate(env, _chain(k), [1e-9] * k, qos, TD)
    cap = env.bandwidth_hz / (2 * k) * math.log1p(qos.snr_thresh_fwd)
    assert rf == pytest.approx(cap, rel=1e-9)
    assert rb == pytest.approx(cap, rel=1e-9)


def test_rate_is_tight_at_coverage_radius(env, qos):
    # At the single-hop coverage limit the binding direction delivers
    # exactly the required 2 Mbps.
    b = budgets(env, qos, 1, TD)
    powers = ChainPowers((dbm_to_watts(20.0),), (dbm_to_watts(14.0),))
    radius = min(
        (b.fwd * powers.fwd_watts[0]) ** (1 / env.pathloss_exponent),
        (b.bwd * powers.bwd_watts[0]) ** (1 / env.pathloss_exponent),
    )
    assert radius == pytest.approx(204.102, abs=0.01)
    rf, rb = end_to_end_rate(env, powers, [radius], qos, TD)
    assert min(rf, rb) == pytest.approx(2e6, rel=1e-6)


def test_outage_and_rate_monotone_in_distance(env, qos):
    powers = _chain(3)
    base = [150.0, 120.0, 90.0]
    o0 = outage_probability(env, powers, base, qos, TD, "fwd")
    r0 = end_to_end_rate(env, powers, base, qos, TD)[0]
    for i in range(3):
        longer = list(base)
        longer[i] *= 1.05
        assert outage_probability(env, powers, longer, qos, TD, "fwd") > o0
        assert end_to_end_rate(env, powers, longer, qos, TD)[0] < r0


def test_fd_rate_dominates_td(env, qos):
    powers = _chain(3)
    distances = [150.0, 120.0, 90.0]
    td = end_to_end_rate(env, powers, distances, qos, TD)
    fd = end_to_end_rate(env, powers, distances, qos, FD)
    assert fd[0] > td[0]
    assert fd[1] > td[1]


def test_fd_equals_td_with_powers_scaled_by_2k(env, qos):
    k = 3
    distances = [150.0, 120.0, 90.0]
    powers = _chain(k)
    scaled = ChainPowers(
        tuple(2 * k * p for p in powers.fwd_watts),
        tuple(2 * k * q for q in powers.bwd_watts),
    )
    fd = end_to_end_rate(env, powers, distances, qos, FD)
    td_scaled = end_to_end_rate(env, scaled, distances, qos, TD)
    assert fd[0] == pytest.approx(td_scaled[0], rel=1e-12)
    assert fd[1] == pytest.approx(td_scaled[1], rel=1e-12)
