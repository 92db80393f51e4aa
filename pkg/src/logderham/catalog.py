"""Small named arrangements used by the test-suite and the CLI examples."""
from __future__ import annotations

from .arrangement import Arrangement, validate

# weights listed in the order y, z, x+y, x-y, x+z, x-z, y+z, y-z
DELETED_B3_WEIGHTS = ("1/2", "1/2", "-1/2", "-1/2", "1/4", "1/4", "1/4", "1/4")


def single() -> Arrangement:
    return validate([[1]], ["x"], ["x"])


def boolean(n: int) -> Arrangement:
    names = ["x", "y", "z"] if n <= 3 else [f"x{i + 1}" for i in range(n)]
    names = names[:n]
    rows = [[1 if i == k else 0 for i in range(n)] for k in range(n)]
    return validate(rows, names, names)


def three_lines() -> Arrangement:
    return validate([[1, 0], [0, 1], [1, 1]], ["x", "y", "x+y"], ["x", "y"])


def generic_lines() -> Arrangement:
    return validate([[1, 0], [0, 1], [1, 1], [1, 2]], ["x", "y", "x+y", "x+2y"], ["x", "y"])


def braid() -> Arrangement:
    return validate([[1, -1, 0], [1, 0, -1], [0, 1, -1]], ["x-y", "x-z", "y-z"], ["x", "y", "z"])


def deleted_b3() -> Arrangement:
    """yz(x+y)(x-y)(x+z)(x-z)(y+z)(y-z), hyperplanes in that order."""
    rows = [[0, 1, 0], [0, 0, 1], [1, 1, 0], [1, -1, 0], [1, 0, 1], [1, 0, -1], [0, 1, 1], [0, 1, -1]]
    labels = ["y", "z", "x+y", "x-y", "x+z", "x-z", "y+z", "y-z"]
    return validate(rows, labels, ["x", "y", "z"])


def deleted_b3_pencil_first() -> Arrangement:
    """Same arrangement ordered y, z, y+z, y-z, x+y, x-y, x+z, x-z.

    The four planes through the x-axis come first, so the weight list
    ``DELETED_B3_WEIGHTS`` puts +-1/2 on that pencil and 1/4 elsewhere.
    """
    return deleted_b3().permuted([0, 1, 6, 7, 2, 3, 4, 5])


SUITE = {
    "x": single,
    "xy": lambda: boolean(2),
    "xyz": lambda: boolean(3),
    "xy(x+y)": three_lines,
    "braid": braid,
    "deletedB3": deleted_b3,
}
