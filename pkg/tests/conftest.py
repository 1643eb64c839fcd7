import numpy as np
import pytest
from hypothesis import settings

from lpbilliards import BoundarySpec

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(scope="session")
def l3():
    return BoundarySpec(3.0)


def away_from_axes(rng, size, margin=1e-3):
    """Uniform parameters at least ``margin`` from multiples of 1/4."""
    out = []
    while len(out) < size:
        t = rng.random()
        r = (t * 4) % 1
        if margin * 4 < r < 1 - margin * 4:
            out.append(t)
    return np.array(out)


def pytest_terminal_summary(terminalreporter):
    reports = [
        r for key in ("passed", "failed", "skipped")
        for r in terminalreporter.stats.get(key, [])
        if "test_acceptance.py" in r.nodeid and r.when in ("call", "setup")
        and (r.when == "call" or r.outcome != "passed")
    ]
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for r in sorted(reports, key=lambda r: r.nodeid):
        props = dict(r.user_properties)
        name = r.nodeid.split("::")[-1]
        line = f"{r.outcome.upper():7} {name}"
        if "measured" in props:
            line += f"  [{props['measured']}]"
        terminalreporter.write_line(line)
