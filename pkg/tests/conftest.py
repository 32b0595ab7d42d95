from fractions import Fraction

import pytest

from valsemi.obstruction import example1_generators


def pytest_configure(config):
    config._valsemi_acceptance = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_valsemi_acceptance", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def example1_small():
    return example1_generators(3)


@pytest.fixture
def hand_enumerated_u_below_3():
    # block 1 = {1, 3/2}, block 2 = {2 + j/6}, and the two sums 1+1, 1+3/2 below 3
    return [Fraction(1), Fraction(3, 2), Fraction(2), Fraction(13, 6), Fraction(7, 3),
            Fraction(5, 2), Fraction(8, 3), Fraction(17, 6)]
