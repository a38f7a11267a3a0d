import json
from pathlib import Path

import pytest

GOLDEN = Path(__file__).parent / "golden"


def load_golden(kind: str, name: str):
    return json.loads((GOLDEN / kind / name).read_text())


@pytest.fixture(scope="session")
def sphere_oracle():
    return load_golden("derived", "sphere_oracle.json")


@pytest.fixture(scope="session")
def published_values():
    return load_golden("published", "values.json")


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(results):
        title, ok, detail = results[num]
        tr.write_line(f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}")
