import pytest

from distpair.testfn import CANONICAL, corpus_generate


@pytest.fixture(scope="session")
def corpus():
    return corpus_generate(42, 50)


@pytest.fixture(scope="session")
def small_corpus():
    return corpus_generate(7, 12)


@pytest.fixture
def gauss():
    return CANONICAL["gauss"]


@pytest.fixture
def xgauss():
    return CANONICAL["xgauss"]


@pytest.fixture
def gauss1():
    return CANONICAL["gauss@1"]


@pytest.fixture
def x2gauss():
    return CANONICAL["x2gauss"]


_CRITERIA: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    """Record one acceptance criterion's outcome for the end-of-run summary."""

    def record(label, ok, detail):
        _CRITERIA[label] = (bool(ok), detail)
        print(f"{label} {'PASS' if ok else 'FAIL'}: {detail}")
        return bool(ok)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_CRITERIA, key=lambda s: int(s[2:])):
        ok, detail = _CRITERIA[label]
        terminalreporter.write_line(f"{label} {'PASS' if ok else 'FAIL'}: {detail}")
