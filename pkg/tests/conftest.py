import json

import pytest

from gac_framework.core import AllDifferent, Instance, Table, serialize_instance
from gac_framework.engine import SearchBudget
from gac_framework.harness import suites


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False, help="Also run tests marked slow.")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-budget runs that take minutes")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def f1():
    """(x1 or x2 or x3) and (not x1 or not x2 or not x3): satisfiable"""
    return suites.F1


@pytest.fixture
def f2():
    """All eight sign patterns over three variables: unsatisfiable"""
    return suites.F2


@pytest.fixture
def u1():
    """(x1 or x1 or x1) and (not x1 or not x1 or not x1): unsatisfiable, one occurrence per clause"""
    return suites.U1


@pytest.fixture
def p1():
    return suites.P1


@pytest.fixture
def k3():
    return suites.K3


@pytest.fixture
def k4():
    return suites.K4


@pytest.fixture
def w1():
    return suites.W1


@pytest.fixture
def w2():
    return suites.W2


@pytest.fixture
def disjoint_instance():
    """X1,Y1 in {1,2}; X2,Y2 in {1,3}; Y3 in {2,3}"""
    return suites.disjoint_example()


@pytest.fixture
def pigeonhole():
    domains = {"X1": (1,), "X2": (1,)}
    return Instance(variables=("X1", "X2"), domains=domains, constraint=AllDifferent(scope=("X1", "X2")))


@pytest.fixture
def small_table():
    domains = {"x": (1, 2), "y": (1, 2)}
    return Instance(variables=("x", "y"), domains=domains,
                    constraint=Table(scope=("x", "y"), tuples=((2, 2), (2, 1))))


@pytest.fixture
def budget():
    return SearchBudget(1_000_000)


@pytest.fixture
def write_instance(tmp_path):
    """Write an instance (or raw dict) to a file and return its path"""
    def write(instance, name="instance.json"):
        path = tmp_path / name
        if isinstance(instance, Instance):
            path.write_bytes(serialize_instance(instance))
        else:
            path.write_text(json.dumps(instance), encoding="utf-8")
        return path
    return write
