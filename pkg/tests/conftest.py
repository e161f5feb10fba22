import pytest

from posetshuffle.characterize import ShuffleInstance
from posetshuffle.io import load_fixture
from posetshuffle.traces import Language

_ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=0, help="seed for randomized suites")


@pytest.fixture(scope="session")
def seed(request):
    return request.config.getoption("--seed")


@pytest.fixture(scope="session")
def acceptance_report():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE, key=lambda k: int(k.split()[0])):
        ok, detail = _ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")


def words(text: str) -> Language:
    """``"ab ba"`` -> language {ab, ba} with one-character symbols."""
    return Language(tuple(w) for w in text.split())


@pytest.fixture(scope="session")
def known():
    names = ["p_ex", "p_1", "p_2", "lp_t1", "lp_t2", "p_r1", "p_r2a", "p_r2b", "l_1", "l_2"]
    return {n: load_fixture(n) for n in names}


@pytest.fixture(scope="session")
def inst1(known):
    return ShuffleInstance(known["lp_t1"], (known["p_1"], known["p_2"]))


@pytest.fixture(scope="session")
def inst2(known):
    return ShuffleInstance(known["lp_t2"], (known["p_1"], known["p_2"]))
