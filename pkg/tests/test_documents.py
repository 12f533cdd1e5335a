import json
from importlib import resources

import pytest

from azumaya.documents import (
    DocumentError,
    document_from_hopf,
    hopf_from_document,
    load_document,
    schema_path,
    validate_document,
)
from azumaya.fields import QQ
from azumaya.hopf import same_structure, verify_hopf_axioms
from azumaya.checks import all_passed
from azumaya.en_family import build_clifford, derive_cocycle_from_cleft
from conftest import params1


def shipped_document() -> dict:
    text = (resources.files("azumaya") / "data" / "en1_example.json").read_text()
    return json.loads(text)


def test_shipped_document_is_valid_and_well_labeled():
    doc = load_document(shipped_document())
    h, functionals = hopf_from_document(doc)
    assert all_passed(verify_hopf_axioms(h))
    assert set(functionals) == {"sigma", "r"}
    assert functionals["sigma"][0] == "cocycle"
    assert functionals["r"][0] == "rform"


def test_round_trip(e1):
    p = params1(2, 1, 1)
    cl = build_clifford(p, e1, verify=False)
    sigma = derive_cocycle_from_cleft(cl, e1, verify=False)
    doc = document_from_hopf(e1, {"sigma": ("cocycle", sigma)})
    h, functionals = hopf_from_document(load_document(doc))
    assert same_structure(h, e1)
    assert functionals["sigma"][1].values == sigma.values


def test_pairs_format(e1):
    doc = document_from_hopf(e1)
    doc["functionals"] = {
        "chi": {"role": "cocycle", "pairs": {"c|c": "2", "x1|x1": "-1/2"}}
    }
    _, functionals = hopf_from_document(load_document(doc))
    chi = functionals["chi"][1]
    assert chi.value(2, 2) == 2
    assert chi.value(1, 1) == QQ("-1/2")
    assert chi.value(0, 0) == 0


def test_schema_violation_cites_pointer(e1):
    doc = document_from_hopf(e1)
    doc["mult"][1][2] = "oops"
    with pytest.raises(DocumentError) as err:
        validate_document(doc)
    assert any("/mult/1/2" in e for e in err.value.errors)


def test_missing_key_cites_pointer(e1):
    doc = document_from_hopf(e1)
    del doc["antipode"]
    with pytest.raises(DocumentError) as err:
        validate_document(doc)
    assert any("antipode" in e for e in err.value.errors)


def test_semantic_shape_error(e1):
    doc = document_from_hopf(e1)
    doc["unit"] = doc["unit"][:-1]
    with pytest.raises(DocumentError) as err:
        validate_document(doc)
    assert any(e.startswith("/unit") for e in err.value.errors)


def test_bad_scalar_in_prime_field(e1):
    doc = document_from_hopf(e1)
    doc["field"] = "prime:5"
    doc["counit"][0] = "1/5"
    with pytest.raises(DocumentError) as err:
        validate_document(doc)
    assert any("/counit/0" in e for e in err.value.errors)


def test_bad_pair_key(e1):
    doc = document_from_hopf(e1)
    doc["functionals"] = {"f": {"role": "rform", "pairs": {"nosuch|c": 1}}}
    with pytest.raises(DocumentError) as err:
        validate_document(doc)
    assert any("/functionals/f/pairs/nosuch|c" in e for e in err.value.errors)


def test_not_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(DocumentError):
        load_document(str(path))


def test_schema_file_is_shipped():
    assert schema_path().endswith("structure_constants.schema.json")
    schema = json.loads(
        (resources.files("azumaya") / "schemas" / "structure_constants.schema.json").read_text()
    )
    assert schema["properties"]["schema_version"]["const"] == 1
