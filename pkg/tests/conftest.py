import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# rows top-down of the k = 2 witness, assembled by hand from the block rules
K2_WITNESS_ROWS = [
    ["2", "2", "2", "0", "0", "0"],
    ["2", "2", "1", "0", "0"],
    ["2", "3/2", "1/2", "0"],
    ["2", "1/2", "1/2"],
    ["3/2", "1/2"],
    ["1"],
]


def pytest_terminal_summary(terminalreporter):
    import acceptance_log

    if not acceptance_log.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance_log.RESULTS):
        terminalreporter.write_line(acceptance_log.line(number))
