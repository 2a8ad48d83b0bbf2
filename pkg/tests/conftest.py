import pytest
from hypothesis import settings

from travlaw.reports import GenerationBudget

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@pytest.fixture
def small_budget():
    return GenerationBudget(max_structure_size=2, atom_domain=(0, 1), max_effect_width=2)


ACCEPTANCE: dict[str, tuple[str, bool, str]] = {}


def record(key: str, title: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE[key] = (title, ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key, (title, ok, detail) in ACCEPTANCE.items():
        line = f"{'PASS' if ok else 'FAIL'} criterion {key}: {title}"
        if detail and not ok:
            line += f" ({detail})"
        terminalreporter.write_line(line)
