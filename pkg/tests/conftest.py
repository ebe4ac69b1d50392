import sys
from collections import defaultdict
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

_criteria: dict[int, list[tuple[str, bool]]] = defaultdict(list)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _criteria[mark.args[0]].append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for c in sorted(_criteria):
        runs = _criteria[c]
        bad = [name for name, ok in runs if not ok]
        status = "PASS" if not bad else "FAIL"
        line = f"criterion {c}: {status} ({len(runs) - len(bad)}/{len(runs)} checks)"
        if bad:
            line += " failing: " + ", ".join(bad)
        terminalreporter.write_line(line)
