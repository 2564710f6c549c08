"""Prints one PASS/FAIL/SKIP line per acceptance criterion after the run.

Acceptance tests label themselves with ``record_property("criterion", ...)``
and may add ``record_property("detail", ...)`` lines with measurements.
"""


def pytest_terminal_summary(terminalreporter):
    lines = []
    for status, label in (("passed", "PASS"), ("failed", "FAIL"), ("skipped", "SKIP")):
        for rep in terminalreporter.stats.get(status, []):
            if "test_acceptance" not in getattr(rep, "nodeid", "") or rep.when not in ("call", "setup"):
                continue
            props = dict(rep.user_properties)
            if "criterion" not in props:
                continue
            details = [v for k, v in rep.user_properties if k == "detail"]
            if status == "skipped" and isinstance(rep.longrepr, tuple):
                details.append(str(rep.longrepr[2]).removeprefix("Skipped: "))
            lines.append((props["criterion"], label, details))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for crit, label, details in sorted(lines, key=lambda t: t[0]):
        terminalreporter.write_line(f"{label}  criterion {crit}")
        for d in details:
            terminalreporter.write_line(f"        {d}")
