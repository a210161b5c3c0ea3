import os
import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from slopekit.fixtures import load_fixtures  # noqa: E402

settings.register_profile("default", deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def fs():
    return load_fixtures()


ACCEPTANCE = {}  # criterion number -> (ok, seconds, limit, title, detail)


def record_criterion(number, ok, seconds, limit, title, detail=""):
    ACCEPTANCE[number] = (ok, seconds, limit, title, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, seconds, limit, title, detail = ACCEPTANCE[number]
        status = "PASS" if ok else "FAIL"
        timing = f"{seconds:.2f}s" + (f" (limit {limit}s)" if limit else "")
        line = f"criterion {number}: {status}  {title}  [{timing}]"
        terminalreporter.write_line(line + (f"  {detail}" if detail else ""))
