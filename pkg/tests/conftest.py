import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("immanant", max_examples=50, deadline=None)
settings.load_profile("immanant")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_h_point(rng, n, scale=1.0):
    x = rng.uniform(-scale, scale, n + 1)
    return x - x.mean()


ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}")
