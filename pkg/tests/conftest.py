import json
from pathlib import Path

import pytest

from hbsiegel.numfield import NumberField, power_basis

FIELDS_DIR = Path(__file__).resolve().parent.parent / "fields"

# minimal polynomials, ascending coefficients
TEST_FIELDS = {
    "golden": [-1, -1, 1],
    "sqrt2": [-2, 0, 1],
    "cubic49": [1, -2, -1, 1],
    "cubic81": [-1, -3, 0, 1],
}


def make_field(minpoly):
    return NumberField(minpoly, power_basis(len(minpoly) - 1))


@pytest.fixture(scope="session")
def golden():
    return make_field(TEST_FIELDS["golden"])


@pytest.fixture(scope="session")
def sqrt2():
    return make_field(TEST_FIELDS["sqrt2"])


@pytest.fixture(scope="session")
def rationals():
    return make_field([0, 1])


@pytest.fixture(scope="session", params=list(TEST_FIELDS))
def field(request):
    return make_field(TEST_FIELDS[request.param])


@pytest.fixture(scope="session", params=["rational"] + list(TEST_FIELDS))
def any_field(request):
    if request.param == "rational":
        return make_field([0, 1])
    return make_field(TEST_FIELDS[request.param])


@pytest.fixture
def field_file(tmp_path):
    def write(obj, name="field.json"):
        p = tmp_path / name
        p.write_text(json.dumps(obj))
        return str(p)
    return write
