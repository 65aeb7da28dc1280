import functools
import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

CRITERIA = {}


def criterion(number, title):
    """Record the outcome of an acceptance criterion for the summary."""
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                CRITERIA[number] = (title, "FAIL")
                raise
            CRITERIA[number] = (title, "PASS")
        return run
    return wrap


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        title, status = CRITERIA[number]
        terminalreporter.write_line(f"[{status}] AC{number:02d} {title}")
