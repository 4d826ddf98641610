import pytest


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n, title): numbered acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("acceptance")
    terminal = item.config.pluginmanager.getplugin("terminalreporter")
    if m is None or terminal is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        status = "PASS" if rep.passed else "FAIL"
        terminal.write_line(
            f"\n{status} criterion {m.kwargs['n']}: {m.kwargs['title']} ({rep.duration:.1f}s)")
