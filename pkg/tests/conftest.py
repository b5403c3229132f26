import functools
import warnings

import pytest

from caryb.constructions import adjoint_rack, double_rack, heap_rack
from caryb.groups import builtin
from caryb.hopf import function_algebra, group_algebra


@functools.lru_cache(maxsize=None)
def hopf(group, kind="group"):
    G = builtin(group)
    return group_algebra(G) if kind == "group" else function_algebra(G)


@functools.lru_cache(maxsize=None)
def rack(family, group, kind="group"):
    H = hopf(group, kind)
    build = {"heap": heap_rack, "adjoint": adjoint_rack}[family]
    if kind == "group":
        return build(H)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return build(H, strict=False)


@functools.lru_cache(maxsize=None)
def doubled(group, times):
    R = rack("heap", group)
    for _ in range(times):
        R = double_rack(R)
    return R


@pytest.fixture
def heap_z2():
    return rack("heap", "Z2")


@pytest.fixture
def heap_z3():
    return rack("heap", "Z3")


# PASS/FAIL lines from the acceptance suite, repeated in the terminal summary
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
