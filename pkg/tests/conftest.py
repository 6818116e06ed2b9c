import pytest

from linkage.parser import parse_ideal, parse_polynomial, parse_ring


class Env:
    def __init__(self, decl):
        self.ctx = parse_ring(decl)

    def I(self, text):
        return parse_ideal(text, self.ctx)

    def P(self, text):
        return parse_polynomial(text, self.ctx)


@pytest.fixture
def ring():
    return Env


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
