from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from twofrob.fields import build_affine_spec, to_permutation_group  # noqa: E402
from twofrob.group import enumerate_group  # noqa: E402
from twofrob.groups import (  # noqa: E402
    alternating,
    cyclic,
    dihedral,
    direct_product,
    quaternion,
    symmetric,
)
from twofrob.perm import Permutation  # noqa: E402

EXAMPLE_SPECS = {
    "example2": ([(5, 2)], 3, 2),
    "example3": ([(2, 2), (5, 2)], 3, 2),
    "example4": ([(2, 3)], 7, 3),
    "example5": ([(2, 10)], 11, 10),
    "example6": ([(2, 15)], 151, 15),
}

# valid affine families with |K| <= 2^10, p not dividing d*e (structured path applies)
STRUCTURED_SWEEP = [
    ([(2, 3)], 7, 3),
    ([(2, 6)], 7, 3),
    ([(2, 5)], 31, 5),
    ([(2, 3), (2, 3)], 7, 3),
    ([(3, 4)], 5, 2),
    ([(3, 4)], 5, 4),
    ([(3, 6)], 7, 2),
    ([(5, 2)], 3, 2),
    ([(5, 4)], 13, 2),
    ([(5, 4)], 13, 4),
    ([(11, 2)], 3, 2),
    ([(13, 2)], 7, 2),
]


def _heisenberg_mod3() -> list[Permutation]:
    # maps (x, y) -> (x + a, y + b*x + c) on Z3^2, point index 3*x + y
    def perm(f):
        return Permutation(tuple(3 * X + Y for X, Y in (f(x, y) for x in range(3) for y in range(3))))

    return [
        perm(lambda x, y: ((x + 1) % 3, y)),
        perm(lambda x, y: (x, (y + x) % 3)),
    ]


def _z9_semidirect_z3() -> list[Permutation]:
    return [Permutation(tuple((i + 1) % 9 for i in range(9))), Permutation(tuple(4 * i % 9 for i in range(9)))]


P_GROUPS = {
    "Z8": (cyclic(8), 2),
    "Z4xZ2": (direct_product((cyclic(4), 4), (cyclic(2), 2)), 2),
    "Z2^3": (direct_product((cyclic(2), 2), (cyclic(2), 2), (cyclic(2), 2)), 2),
    "D4": (dihedral(4), 2),
    "Q8": (quaternion(), 2),
    "Z16": (cyclic(16), 2),
    "Z4xZ4": (direct_product((cyclic(4), 4), (cyclic(4), 4)), 2),
    "Z8xZ2": (direct_product((cyclic(8), 8), (cyclic(2), 2)), 2),
    "Z2^4": (direct_product(*[(cyclic(2), 2)] * 4), 2),
    "D8": (dihedral(8), 2),
    "Q8xZ2": (direct_product((quaternion(), 8), (cyclic(2), 2)), 2),
    "D4xZ2": (direct_product((dihedral(4), 4), (cyclic(2), 2)), 2),
    "Z27": (cyclic(27), 3),
    "Z9xZ3": (direct_product((cyclic(9), 9), (cyclic(3), 3)), 3),
    "Z3^3": (direct_product(*[(cyclic(3), 3)] * 3), 3),
    "Heis3": (_heisenberg_mod3(), 3),
    "Z9:Z3": (_z9_semidirect_z3(), 3),
}

NILPOTENT_MIXED = {
    "Z6": cyclic(6),
    "Z12": cyclic(12),
    "Q8xZ3": direct_product((quaternion(), 8), (cyclic(3), 3)),
    "D4xZ3": direct_product((dihedral(4), 4), (cyclic(3), 3)),
    "Z2xZ2xZ5": direct_product((cyclic(2), 2), (cyclic(2), 2), (cyclic(5), 5)),
}


@pytest.fixture(scope="session")
def s4():
    return enumerate_group(symmetric(4))


@pytest.fixture(scope="session")
def a4():
    return enumerate_group(alternating(4))


@pytest.fixture(scope="session")
def s3():
    return enumerate_group(symmetric(3))


@pytest.fixture(scope="session")
def frob30():
    return enumerate_group(dihedral(15))


@pytest.fixture(scope="session")
def q8():
    return enumerate_group(quaternion())


_example_cache: dict = {}


def example_spec(name: str):
    return build_affine_spec(*EXAMPLE_SPECS[name])


def example_group(name: str):
    if name not in _example_cache:
        _example_cache[name] = enumerate_group(to_permutation_group(example_spec(name)))
    return _example_cache[name]


@pytest.fixture(scope="session")
def ex2():
    return example_group("example2")


@pytest.fixture(scope="session")
def ex3():
    return example_group("example3")


@pytest.fixture(scope="session")
def ex4():
    return example_group("example4")


@pytest.fixture(scope="session")
def ex5():
    return example_group("example5")


# -- acceptance summary ------------------------------------------------------------

ACCEPTANCE_LOG: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LOG:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in sorted(ACCEPTANCE_LOG, key=lambda r: int(r[0].split()[1].rstrip("abc"))):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
