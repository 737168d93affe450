from hypothesis import settings

settings.register_profile("repo", deadline=None, derandomize=True, max_examples=100)
settings.load_profile("repo")

ACCEPTANCE_LINES = {}


def record_criterion(number, title, passed, note=""):
    line = f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {title}"
    if note:
        line += f"  ({note})"
    ACCEPTANCE_LINES[number] = line


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
