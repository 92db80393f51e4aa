import sys

import pytest

from logderham import catalog


@pytest.fixture(params=sorted(catalog.SUITE))
def suite_arrangement(request):
    return request.param, catalog.SUITE[request.param]()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
