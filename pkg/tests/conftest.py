import pytest

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    num, title = mark.args
    detail = dict(item.user_properties).get("detail", "")
    ok = rep.passed
    prev = _CRITERIA.get(num)
    if prev is not None and rep.when == "call":
        ok = ok and prev[1]
    if rep.when == "setup" and rep.passed:
        return
    _CRITERIA[num] = (title, ok, detail if rep.passed else _short(rep))


def _short(rep):
    text = str(rep.longrepr).strip().splitlines()
    lines = [ln for ln in text if ln.startswith("E ")]
    return (lines[0][1:].strip() if lines else (text[-1] if text else ""))[:160]


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        title, ok, detail = _CRITERIA[num]
        tr.write_line(f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else ""))
