import json
import pathlib

import jsonschema
import pytest

import qcliff

SCHEMA = json.loads((pathlib.Path(__file__).resolve().parents[2] / "docs/schemas/cli-output.schema.json").read_text())


def validate(doc, definition):
    root = {"$schema": SCHEMA["$schema"], "$defs": SCHEMA["$defs"], "$ref": f"#/$defs/{definition}"}
    jsonschema.Draft202012Validator(root).validate(doc)


def test_classify():
    c = qcliff.classify([4, 2, 1])
    validate(c, "classify")
    assert (c["dim_even"], c["dim_odd"], c["witt_index"]) == (2, 2, 1)
    assert qcliff.classify([1, 1])["count"] == 2


def test_witt_module():
    r = qcliff.witt([4, 2, 1], matrices=True)
    validate(r, "witt")
    assert r["module_check"]["ok"] and r["gram_ok"]
    assert len(r["module"]["T"]) == 3
    assert qcliff.witt([3, 1], var="q")["decomposition"]["witt_index"] == 0


def test_legendre():
    r = qcliff.legendre([1, 2, 3])
    validate(r, "legendre")
    assert r["verified"]


def test_character():
    r = qcliff.character([1, 0])
    assert r["character"]["text"] == "2·x1 + 2·x2"
    assert qcliff.character([2, 1, 0])["symmetric"] == "2·m(2,1,0) + 4·m(1,1,1)"
    assert qcliff.character([3, 1], quantum=True)["highest_coefficient"] == "4"


def test_rejections():
    with pytest.raises(qcliff.PreconditionError):
        qcliff.character([1, 1])
    with pytest.raises(ValueError):
        qcliff.classify([])
    with pytest.raises(ValueError):
        qcliff.verify_qn(1)


def test_delta():
    assert qcliff.delta([2, 1, 0])["text"] == "δ2 + δ1"
    assert qcliff.central_char_equal([1, -1], [0, 0])
    assert not qcliff.central_char_equal([3, 1], [3, 2])


def test_reports():
    r = qcliff.verify_qn(3)
    validate(r, "verify-qn")
    assert r["all_pass"]
    lim = qcliff.limit([3, 1])
    validate(lim, "limit_report")
    assert lim["all_pass"] and lim["character_ratio"]["clifford_route"] == 2


def test_example():
    r = qcliff.worked_example()
    validate(r, "example-4-11")
    assert r["pass"]
