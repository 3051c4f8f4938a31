import importlib

import pytest

from memotab import _engine_py


def _kernels():
    kernels = [pytest.param(_engine_py, id="py")]
    try:
        ext = importlib.import_module("memotab._engine_ext")
    except ImportError:
        kernels.append(pytest.param(None, id="ext", marks=pytest.mark.skip(reason="compiled engine not built")))
    else:
        kernels.append(pytest.param(ext, id="ext"))
    return kernels


def pytest_generate_tests(metafunc):
    # plain parametrisation rather than a fixture so hypothesis tests can use it
    if "eng" in metafunc.fixturenames:
        metafunc.parametrize("eng", _kernels())


_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance.items():
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
