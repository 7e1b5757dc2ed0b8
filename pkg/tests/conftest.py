import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ffkdf.field import construct_field

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

SMALL_FIELDS = ("2", "3", "2^2", "5", "7", "2^3", "3^2")


@pytest.fixture(params=SMALL_FIELDS)
def small_field(request):
    return construct_field(request.param)


def fields():
    return st.sampled_from(SMALL_FIELDS).map(construct_field)


@st.composite
def field_and_elements(draw, n=2, nonzero=False):
    F = draw(fields())
    lo = 1 if nonzero else 0
    return (F, *[draw(st.integers(lo, F.q - 1)) for _ in range(n)])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "CRITERIA", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(lines):
        status, detail = lines[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {detail}")
