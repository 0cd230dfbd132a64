import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from platknot import (
    automorphism_group,
    load_diagram,
    load_extension,
    load_group,
    load_registry,
    reduced_multiplier,
    resolve_class,
)

DATA = os.path.join(os.path.dirname(__file__), "..", "data")


def data_path(name: str) -> str:
    return os.path.join(DATA, name)


@pytest.fixture(scope="session")
def s3():
    return load_group(data_path("s3.grp"))


@pytest.fixture(scope="session")
def a5():
    return load_group(data_path("a5.grp"))


@pytest.fixture(scope="session")
def z3():
    return load_group(data_path("z3.grp"))


@pytest.fixture(scope="session")
def z6():
    return load_group(data_path("z6.grp"))


@pytest.fixture(scope="session")
def d10():
    return load_group(data_path("d10.grp"))


@pytest.fixture(scope="session")
def ext():
    return load_extension(data_path("sl25_a5.ext"))


@pytest.fixture(scope="session")
def rm5(ext):
    return reduced_multiplier(ext, resolve_class(ext.base, "5a"))


@pytest.fixture(scope="session")
def rm2(ext):
    return reduced_multiplier(ext, resolve_class(ext.base, "2a"))


@pytest.fixture(scope="session")
def aut_a5(a5):
    return automorphism_group(a5)


@pytest.fixture(scope="session")
def aut_s3(s3):
    return automorphism_group(s3)


@pytest.fixture(scope="session")
def trefoil():
    return load_diagram(data_path("trefoil.pd"))[0]


@pytest.fixture(scope="session")
def unknot():
    return load_diagram(data_path("unknot.pd"))[0]


@pytest.fixture(scope="session")
def figure8():
    return load_diagram(data_path("figure8.pd"))[0]


@pytest.fixture(scope="session")
def registry():
    return load_registry(data_path("gadgets"))
