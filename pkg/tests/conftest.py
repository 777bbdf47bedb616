import pytest


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run the slow tier (n = 6 and friends)")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="slow tier; pass --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


_criteria: dict[int, dict] = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    number, title = marker
    entry = _criteria.setdefault(number, {"title": title, "failed": False, "ran": False, "skipped": 0})
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        if report.skipped:
            entry["skipped"] += 1
        else:
            entry["ran"] = True
            entry["failed"] |= report.failed
    elif report.failed:
        entry["failed"] = True


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        if entry["failed"]:
            status = "FAIL"
        elif entry["ran"]:
            status = "PASS"
        else:
            status = "SKIP"
        note = f" ({entry['skipped']} slow-tier test(s) skipped)" if entry["skipped"] and entry["ran"] else ""
        terminalreporter.write_line(f"criterion {number:>2} {status}: {entry['title']}{note}")
