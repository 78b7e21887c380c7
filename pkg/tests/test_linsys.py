"""Exact linear systems: elimination, kernels, forced values."""

from __future__ import annotations

import pytest

from mhsverify.exact import ExactScalar, scalar
from mhsverify.linsys import LinearSystem


def test_unique_solution():
    system = LinearSystem([[1, 1], [1, -1]], [3, 1], ["x", "y"])
    sol = system.solve()
    assert sol.kind == "unique"
    assert sol.particular["x"] == scalar(2)
    assert sol.particular["y"] == scalar(1)
    assert sol.kernel_dimension == 0


def test_underdetermined_kernel():
    system = LinearSystem([[1, 1, 0], [0, 0, 1]], [0, 5], ["x", "y", "z"])
    sol = system.solve()
    assert sol.kind == "underdetermined"
    assert sol.kernel_dimension == 1
    (vec,) = sol.kernel_basis
    assert (vec["x"] + vec["y"]).sign() == 0 and vec["z"].sign() == 0
    assert sol.particular["z"] == scalar(5)


def test_inconsistent():
    system = LinearSystem([[1, 1], [2, 2]], [1, 3], ["x", "y"])
    assert system.solve().kind == "inconsistent"


def test_forced_value_in_underdetermined_system():
    # x + y = 2 and x - y = 0 force x = y = 1 even with a free z
    system = LinearSystem(
        [[1, 1, 0], [1, -1, 0]], [2, 0], ["x", "y", "z"]
    )
    assert system.forced_value("x") == scalar(1)
    assert system.forced_value("y") == scalar(1)
    assert system.forced_value("z") is None
    assert system.forced_functional({"x": 1, "y": 1}) == scalar(2)
    assert system.forced_functional({"x": 1, "z": 1}) is None


def test_quadratic_field_entries():
    from mhsverify.exact import sqrt

    r5 = sqrt(5)
    system = LinearSystem([[r5, 0], [0, 1]], [scalar(5), r5], ["x", "y"])
    sol = system.solve()
    assert sol.particular["x"] == r5
    assert sol.particular["y"].compare(r5).name == "EQ"
