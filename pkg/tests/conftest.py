import pytest

from rffso.validation import reference_config

# acceptance results, printed once at the end of the session
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def weak():
    return reference_config("weak")


@pytest.fixture(scope="session")
def regimes():
    return {name: reference_config(name) for name in ("weak", "moderate", "strong")}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (int("".join(c for c in k if c.isdigit())), k)):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
