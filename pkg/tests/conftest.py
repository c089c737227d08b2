import pytest

from semidual import GF, QQ, build_algebra


@pytest.fixture(scope="session")
def ex_gf():
    """GF(101)[x,y]/(x^2, xy): depth 0, not artinian."""
    return build_algebra(GF(101), "xy", ["x^2", "x*y"], 12)


@pytest.fixture(scope="session")
def ex_qq():
    return build_algebra(QQ, "xy", ["x^2", "x*y"], 12)


@pytest.fixture(scope="session")
def m2():
    """GF(7)[x,y]/(x,y)^2, artinian of type 2."""
    return build_algebra(GF(7), "xy", ["x^2", "x*y", "y^2"], 6)


@pytest.fixture(scope="session")
def gor():
    return build_algebra(QQ, "x", ["x^2"], 8)


@pytest.fixture(scope="session")
def type4():
    """k[x,y,z,w]/((x,y)^2 + (z,w)^2): type 4, with a non-trivial semidualizing module."""
    return build_algebra(GF(31), "xyzw", ["x^2", "x*y", "y^2", "z^2", "z*w", "w^2"], 6)


_ACCEPTANCE = {}


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    number, title = request.node.get_closest_marker("criterion").args
    _ACCEPTANCE[number] = (title, "FAIL")
    yield lambda: _ACCEPTANCE.__setitem__(number, (title, "PASS"))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, outcome = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {outcome}  {title}")
