import pytest

from glpq import fun_preset, u_preset


@pytest.fixture(scope="session")
def mat():
    return fun_preset("mat")


@pytest.fixture(scope="session")
def gl():
    return fun_preset("gl")


@pytest.fixture(scope="session")
def slq():
    return fun_preset("slq")


@pytest.fixture(scope="session")
def upq():
    return u_preset("upq")


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
