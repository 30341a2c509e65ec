import pytest

from labatie import GF, QQ, parse_poly

ACCEPTANCE_LINES: list[str] = []

PRIMES = (5, 7, 11, 13)


def P(text, field=QQ):
    return parse_poly(text, field)


def X(text, field=QQ):
    """A polynomial in x alone, as a UniPoly."""
    w = parse_poly(text, field)
    assert w.deg_y <= 0, text
    return w.coeff(0)


@pytest.fixture(params=[QQ, GF(7)], ids=["Q", "GF7"])
def field(request):
    return request.param


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
