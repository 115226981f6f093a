"""Shared pytest plumbing.

The acceptance tests register one summary line per criterion in
ACCEPTANCE_LINES; the sessionfinish hook reprints the block after the
normal pytest output so the pass/fail lines are visible even though
stdout is captured during the run.
"""

ACCEPTANCE_LINES: list[str] = []


def pytest_sessionfinish(session, exitstatus):
    if not ACCEPTANCE_LINES:
        return
    tw = None
    try:
        tw = session.config.get_terminal_writer()
    except Exception:
        pass
    lines = ["", "acceptance criteria:"] + ACCEPTANCE_LINES
    for line in lines:
        if tw is not None:
            tw.line(line)
        else:
            print(line)
