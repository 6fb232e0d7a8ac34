"""Shared record of acceptance verdicts, printed in the terminal summary."""

RESULTS: dict[int, str] = {}


class Counter:
    """Counts exact checks so a suite can prove how much it exercised."""

    def __init__(self):
        self.n = 0
        self.failures: list[str] = []

    def check(self, ok: bool, what: str = "") -> None:
        self.n += 1
        if not ok:
            self.failures.append(what)


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {number} [{title}]: {'PASS' if ok else 'FAIL'} ({detail})"
    RESULTS[number] = line
    print(line)
