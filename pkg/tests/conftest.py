import pytest

from kmroot import catalog
from kmroot.lattice import RootLattice


@pytest.fixture(scope="session")
def e10():
    return RootLattice.from_diagram(catalog.get("E10").diagram)


@pytest.fixture(scope="session")
def ha1():
    return RootLattice.from_diagram(catalog.get("HA_1(1)").diagram)


def lattice_of(name):
    return RootLattice.from_diagram(catalog.get(name).diagram)


_ACCEPTANCE = pytest.StashKey()


@pytest.fixture
def acceptance_log(request):
    """Collects one status line per acceptance criterion."""
    return request.config.stash.setdefault(_ACCEPTANCE, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
