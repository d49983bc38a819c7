import json
import os
from fractions import Fraction

import pytest

from nk6 import s3xs3, spaces
from nk6.spacefile import (
    SpaceFormatError,
    dump_space,
    load_space,
    parse_space,
)

ROOT = os.path.join(os.path.dirname(__file__), os.pardir)
FIXTURES = os.path.join(ROOT, "fixtures")


@pytest.mark.parametrize("name", ["s3xs3", "flag", "cp3"])
def test_fixtures_load(name):
    doc = load_space(os.path.join(FIXTURES, f"{name}.json"))
    space = doc.reductive_space()
    assert space.dim_m == 6
    assert "omega" in doc.forms
    assert doc.forms["omega"].k == 2


def test_fixture_matches_catalog():
    doc = load_space(os.path.join(FIXTURES, "s3xs3.json"))
    space = doc.reductive_space()
    catalog = s3xs3.cyclic_space()
    assert space.algebra.c == catalog.algebra.c
    assert doc.forms["omega"] == s3xs3.omega_diagonal(
        Fraction(1), Fraction(1), Fraction(1))


def test_roundtrip_dump_load():
    fm = spaces.flag_model()
    text = dump_space(fm.space, forms={"omega": fm.omega(1, 2, 3)},
                      metric=fm.metric(1, 2, 3))
    doc = parse_space(json.loads(text))
    assert doc.forms["omega"] == fm.omega(1, 2, 3)
    assert doc.metric == fm.metric(1, 2, 3)
    assert doc.reductive_space().algebra.c == fm.space.algebra.c


def test_rational_and_float_values():
    doc = parse_space({
        "dimension": 3,
        "structure_constants": [[0, 1, 2, "-1/2"], [1, 2, 0, -0.5],
                                [0, 2, 1, "1/2"]],
    })
    assert doc.constants[0][1][2] == Fraction(-1, 2)
    assert doc.constants[1][2][0] == -0.5


def test_bad_jacobi_rejected():
    with pytest.raises(SpaceFormatError):
        parse_space({
            "dimension": 3,
            "structure_constants": [[0, 1, 0, "1"], [1, 2, 1, "1"],
                                    [0, 2, 2, "-1"]],
        })


def test_error_paths():
    with pytest.raises(SpaceFormatError, match=r"\$\.dimension"):
        parse_space({})
    with pytest.raises(SpaceFormatError, match="i < j"):
        parse_space({"dimension": 2, "structure_constants": [[1, 0, 0, "1"]]})
    with pytest.raises(SpaceFormatError, match="duplicate"):
        parse_space({"dimension": 3,
                     "structure_constants": [[0, 1, 2, "1"], [0, 1, 2, "1"]]})
    with pytest.raises(SpaceFormatError, match="out of range"):
        parse_space({"dimension": 2, "structure_constants": [[0, 1, 5, "1"]]})
    with pytest.raises(SpaceFormatError, match="bad rational"):
        parse_space({"dimension": 2, "structure_constants": [[0, 1, 0, "x"]]})
    with pytest.raises(SpaceFormatError, match="partition"):
        parse_space({"dimension": 2, "structure_constants": [],
                     "h_indices": [0], "m_indices": [0, 1]})
    with pytest.raises(SpaceFormatError, match="not an m-index"):
        parse_space({"dimension": 2, "structure_constants": [],
                     "h_indices": [0],
                     "forms": {"omega": [[[0, 1], "1"]]}})
    with pytest.raises(SpaceFormatError, match="not symmetric"):
        parse_space({"dimension": 2, "structure_constants": [],
                     "metric": [["1", "1"], ["0", "1"]]})


def test_parse_error_carries_position(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{\n  "dimension": 2,\n  "oops"\n}\n')
    with pytest.raises(SpaceFormatError, match=r"bad\.json:\d+:\d+"):
        load_space(str(bad))


def test_fixtures_validate_against_schema():
    jsonschema = pytest.importorskip("jsonschema")
    with open(os.path.join(ROOT, "schemas", "space.schema.json")) as fh:
        schema = json.load(fh)
    for name in ("s3xs3", "flag", "cp3"):
        with open(os.path.join(FIXTURES, f"{name}.json")) as fh:
            jsonschema.validate(json.load(fh), schema)
