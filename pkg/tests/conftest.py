from hypothesis import settings

settings.register_profile("default", max_examples=80, deadline=None)
settings.load_profile("default")

BATTERY = [
    "{1,2}",
    "{2,3}",
    "{3,5}",
    "{2,4}",
    "{1,5}",
    "1..3",
    "1..5",
    "2..",
    "3..",
    "mod(1,2)",
    "mod(2,3)",
    "not{2}",
    "not{3}",
    "not(2..4)",
]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
