import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=1000, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_results: dict = {}
_notes: list = []


@pytest.fixture
def acceptance_note():
    """Record an informational line for the acceptance summary."""
    return _notes.append


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(cid, title): test belongs to an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        cid, title = mark.args
        entry = _results.setdefault(cid, {"title": title, "ok": True, "n": 0})
        entry["n"] += 1
        entry["ok"] = entry["ok"] and rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for cid in sorted(_results, key=lambda c: int(c[2:])):
        r = _results[cid]
        tr.write_line(f"{cid:<5} {'PASS' if r['ok'] else 'FAIL'}  {r['title']} ({r['n']} checks)")
    for note in _notes:
        tr.write_line(f"note: {note}")
