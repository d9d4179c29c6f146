"""Shared fixtures: three small universes exercised throughout the suite.

u1: free universe with one genuine inference rule.
u2: a forbidden thing plus rules that make cl({}) non-trivial; C = {{a}}.
u3: two things, no rules; every subset is closed.
"""

import pytest

from desire_kernel.core import RuleSet, Universe


@pytest.fixture
def u1():
    # things a b c; rule a b -> c
    return Universe(["a", "b", "c"], RuleSet(((0b011, 0b100),)))


@pytest.fixture
def u2():
    # things a b c; forbidden c; rule -> a; rule b -> c
    return Universe(["a", "b", "c"], RuleSet(((0, 0b001), (0b010, 0b100))), forbidden=["c"])


@pytest.fixture
def u3():
    return Universe(["a", "b"], RuleSet(()))
