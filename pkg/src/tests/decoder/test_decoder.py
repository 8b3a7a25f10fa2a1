import os
from fractions import Fraction

import pytest

from controller.base import Family
from controller.degenerate import dimorphic_table
from controller.identities import IdentityContext, verify_theorem1
from controller.tables import build_table
from model import BivarPoly
from utils import decoder

dirname = os.path.dirname(__file__)

with open(os.path.join(dirname, "conf.yml"), "rb") as file:
    YAML = file.read()

with open(os.path.join(dirname, "table_dimorphic.json"), "rb") as file:
    JSON = file.read()

LAM = BivarPoly.lam()
X = BivarPoly.x()


def test_yaml_good():
    assert decoder.to_yaml(YAML)["truncation_order"] == 30
    # practically uncommon
    assert decoder.to_yaml(b"{}") == {}
    # but JSON is a subset of YAML
    assert decoder.to_yaml(JSON)["family"] == "dimorphic"


def test_yaml_bad():
    with pytest.raises(TypeError):  # NOTE TypeError
        decoder.to_yaml(b"")
    with pytest.raises(TypeError):
        decoder.to_yaml(b"/\\")
    with pytest.raises(ValueError):
        decoder.to_yaml(b"n_max: [1, 2")


def test_json_good():
    assert decoder.to_json(JSON)["to"] == 3
    assert decoder.to_json(b"{}") == {}


def test_json_bad():
    with pytest.raises(TypeError):
        decoder.to_json(b"[]")
    with pytest.raises(ValueError):  # NOTE ValueError
        decoder.to_json(b"")
    with pytest.raises(ValueError):
        decoder.to_json(YAML)


def test_auto():
    assert decoder.to_dict(YAML) == decoder.to_dict(YAML, "yml") == decoder.to_dict(YAML, ".yaml")
    assert decoder.to_dict(JSON) == decoder.to_dict(JSON, "json") == decoder.to_dict(JSON, ".JSON")
    with pytest.raises(ValueError):
        decoder.to_dict(YAML, "json")


def test_poly():
    poly = X + (LAM - 1) / 2
    doc = decoder.poly_to_dict(poly)
    assert doc == {
        "terms": [
            {"dl": 0, "dx": 0, "num": "-1", "den": "2"},
            {"dl": 0, "dx": 1, "num": "1", "den": "1"},
            {"dl": 1, "dx": 0, "num": "1", "den": "2"},
        ]
    }
    assert decoder.poly_from_dict(doc) == poly
    assert decoder.poly_to_dict(BivarPoly.zero()) == {"terms": []}


def test_poly_big_integers():
    big = BivarPoly.constant(Fraction(2**200 + 1, 3))
    doc = decoder.poly_to_dict(big)
    assert doc["terms"][0]["num"] == str(2**200 + 1)
    assert decoder.poly_from_dict(doc) == big


@pytest.mark.parametrize(
    "doc",
    [
        {},
        {"terms": [{"dl": 0, "dx": 0, "num": 1, "den": "1"}]},
        {"terms": [{"dl": 0, "dx": 0, "num": "1", "den": "0"}]},
        {"terms": [{"dl": -1, "dx": 0, "num": "1", "den": "1"}]},
        {"terms": [{"dl": 0, "dx": 0, "num": "1/2", "den": "1"}]},
        {"terms": [{"dl": 0, "dx": 0, "num": "1", "den": "1", "extra": 1}]},
    ],
)
def test_poly_bad(doc):
    with pytest.raises(ValueError):
        decoder.poly_from_dict(doc)


def test_poly_repeated_term():
    term = {"dl": 0, "dx": 0, "num": "1", "den": "1"}
    with pytest.raises(ValueError):
        decoder.poly_from_dict({"terms": [term, term]})


def test_table_bytes():
    text = decoder.dumps(decoder.table_to_dict(dimorphic_table(3)))
    assert text.encode() == JSON
    table = decoder.table_from_dict(decoder.to_json(JSON))
    assert table == dimorphic_table(3)
    assert decoder.dumps(decoder.table_to_dict(table)).encode() == JSON


@pytest.mark.parametrize("family", [family.value for family in Family])
def test_table_roundtrip(family):
    table = build_table(family, 5)
    text = decoder.dumps(decoder.table_to_dict(table))
    again = decoder.table_from_dict(decoder.to_json(text))
    assert again == table
    assert decoder.dumps(decoder.table_to_dict(again)) == text


def test_table_integral():
    doc = decoder.table_to_dict(build_table("mersenne", 4))
    assert doc["values"] == ["0", "1", "3", "7", "15"]
    doc["values"][1] = 1
    with pytest.raises(ValueError):
        decoder.table_from_dict(doc)


def test_table_bad_range():
    doc = decoder.table_to_dict(build_table("mersenne", 4))
    doc["to"] = 7
    with pytest.raises(ValueError):
        decoder.table_from_dict(doc)


def test_table_csv():
    assert decoder.table_to_csv(build_table("mersenne", 3)) == "n,value\n0,0\n1,1\n2,3\n3,7\n"
    assert decoder.table_to_csv(build_table("dimorphic", 2)) == "n,value\n0,0\n1,1\n2,3 + (-1)λ\n"
    assert decoder.table_to_csv(build_table("stirling2", 1)) == "n,0,1\n0,1,\n1,0,1\n"


def test_table_csv_triangle():
    assert decoder.table_to_csv(build_table("bell-triangle", 3)) == (
        "n,0,1,2,3\n0,1,,,\n1,0,1,,\n2,0,1,1,\n3,0,1,3,1\n"
    )
    assert decoder.table_to_csv(build_table("degenerate-stirling2", 2)) == "n,0,1,2\n0,1,,\n1,0,1,\n2,0,1 + (-1)λ,1\n"


def test_report():
    context = IdentityContext.build(3)
    report = verify_theorem1(3, context=context)
    doc = decoder.report_to_dict(report)
    assert doc["identity"] == "THEOREM1"
    assert doc["allPass"] is True
    assert doc["results"][0] == {"n": 0, "pass": True, "residual": None}
    assert "error" not in doc
    assert decoder.report_from_dict(doc) == report

    broken = verify_theorem1(3, context=context.corrupted())
    doc = decoder.report_to_dict(broken)
    assert doc["allPass"] is False
    assert doc["results"][1]["residual"] == {"terms": [{"dl": 1, "dx": 0, "num": "1", "den": "1"}]}
    assert decoder.report_from_dict(doc) == broken

    doc["results"][1]["pass"] = True
    with pytest.raises(ValueError):
        decoder.report_from_dict(doc)


def test_batch():
    reports = [verify_theorem1(2)]
    doc = decoder.batch_to_dict(reports)
    assert doc["allPass"] is True
    assert decoder.batch_from_dict(doc) == reports
    assert decoder.reports_to_csv(reports) == (
        "identity,n,pass,residual\nTHEOREM1,0,true,0\nTHEOREM1,1,true,0\nTHEOREM1,2,true,0\n"
    )


def test_config_schema():
    decoder.validate(decoder.to_yaml(YAML), "config")
    with pytest.raises(ValueError):
        decoder.validate({"output_format": "xml"}, "config")
    with pytest.raises(ValueError):
        decoder.validate({"colour": "blue"}, "config")
