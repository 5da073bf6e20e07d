import pytest

from relaycover import DevicePowers, Polygon, QosSpec, RadioEnvironment

# Default deployment parameters used throughout the suite.
PAPER_QUAD = [(0.0, 350.0), (300.0, 650.0), (500.0, 600.0), (600.0, 300.0)]

_acceptance_results: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance_results.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for name, outcome in _acceptance_results:
        label = name.replace("test_criterion_", "criterion ").replace("_", " ")
        terminalreporter.write_line(f"  {label}: {outcome.upper()}")


@pytest.fixture
def env():
    return RadioEnvironment(
        pathloss_const_db=-15.3,
        pathloss_exponent=3.76,
        noise_psd_dbm_per_hz=-174.0,
        bandwidth_hz=9e6,
    )


@pytest.fixture
def qos():
    return QosSpec(
        rate_fwd_bps=2e6,
        rate_bwd_bps=2e6,
        snr_thresh_fwd_db=20.0,
        snr_thresh_bwd_db=20.0,
    )


@pytest.fixture
def devices():
    return DevicePowers(bs_dbm=20.0, relay_dbm=17.0, dest_dbm=14.0)


@pytest.fixture
def quad():
    return Polygon(PAPER_QUAD)
