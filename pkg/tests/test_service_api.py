import json
from importlib import resources

import pytest
from fastapi.testclient import TestClient

from azumaya.api import app
from azumaya.reports import (
    EnCheckRequest,
    SweepReport,
    SweepRequest,
    TableRequest,
    VerdictReport,
    VerifyRequest,
    exit_code,
)
from azumaya.service import run_en_check, run_sweep, run_table, run_verify


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def shipped_document() -> dict:
    return json.loads((resources.files("azumaya") / "data" / "en1_example.json").read_text())


# -- service layer -------------------------------------------------------------


def test_en_check_all_routes_agree():
    rep = run_en_check(EnCheckRequest(n=1, a=[["1"]], alpha="1"))
    assert rep.azumaya is True and rep.consistent
    assert {r.route for r in rep.routes} == {"theta", "fg", "det"}
    assert exit_code(rep) == 0


def test_en_check_negative_point():
    rep = run_en_check(EnCheckRequest(n=1, a=[["0"]], alpha="1"))
    assert rep.azumaya is False and exit_code(rep) == 1


def test_en_check_lambda_identity_n2():
    rep = run_en_check(
        EnCheckRequest(n=2, a=[["0", "0"], ["0", "0"]], alpha="1",
                       lam=[["1", "0"], ["0", "1"]])
    )
    assert rep.azumaya is True and exit_code(rep) == 0


def test_en_check_input_error():
    rep = run_en_check(EnCheckRequest(n=1, a=[["1"]], alpha="0"))
    assert rep.error and exit_code(rep) == 2


def test_en_check_route_subset():
    rep = run_en_check(EnCheckRequest(n=1, a=[["1"]], alpha="1", routes=["det"]))
    assert [r.route for r in rep.routes] == ["det"]
    assert rep.azumaya is True


def test_verify_shipped_document_passes():
    rep = run_verify(VerifyRequest(document=shipped_document()))
    assert rep.checks and all(c.passed for c in rep.checks)
    assert exit_code(rep) == 0


def test_verify_detects_corrupted_antipode():
    doc = shipped_document()
    ident = [["1" if i == j else "0" for j in range(4)] for i in range(4)]
    doc["antipode"] = ident
    rep = run_verify(VerifyRequest(document=doc, checks=["hopf"]))
    failed = [c for c in rep.checks if not c.passed]
    assert failed and any("x1" in (c.witness or "") for c in failed)
    assert exit_code(rep) == 1


def test_verify_detects_noninvertible_cocycle_block():
    doc = shipped_document()
    doc["functionals"]["sigma"]["matrix"] = [["0"] * 4 for _ in range(4)]
    rep = run_verify(VerifyRequest(document=doc, checks=["cocycle"]))
    failed = [c for c in rep.checks if not c.passed]
    assert any("not convolution invertible" in (c.witness or "") for c in failed)
    assert exit_code(rep) == 1


def test_verify_schema_error_reported():
    doc = shipped_document()
    doc["dim"] = "four"
    rep = run_verify(VerifyRequest(document=doc))
    assert rep.error and "/dim" in rep.error
    assert exit_code(rep) == 2


def test_verify_missing_block_is_input_error():
    doc = shipped_document()
    del doc["functionals"]
    rep = run_verify(VerifyRequest(document=doc, checks=["cocycle"]))
    assert rep.error and exit_code(rep) == 2


def test_table_round_trip_and_exit():
    rep = run_table(TableRequest(n=1, a=[["1"]], alpha="2", gamma=["1"], lam=[["1/2"]]))
    assert rep.all_match and exit_code(rep) == 0
    again = run_table(TableRequest(n=1, a=[["1"]], alpha="2", gamma=["1"], lam=[["1/2"]]))
    assert again.entries == rep.entries  # deterministic


def test_sweep_deterministic_and_consistent():
    req = SweepRequest(n=1, points=8, seed=42)
    rep1 = run_sweep(req)
    rep2 = run_sweep(SweepRequest(n=1, points=8, seed=42))
    assert rep1.points == rep2.points
    assert rep1.all_consistent and exit_code(rep1) == 0
    different = run_sweep(SweepRequest(n=1, points=8, seed=43))
    assert different.points != rep1.points


def test_reports_round_trip_json():
    rep = run_en_check(EnCheckRequest(n=1, a=[["1"]], alpha="2", gamma=["1"]))
    assert VerdictReport.model_validate_json(rep.model_dump_json()) == rep
    sweep = run_sweep(SweepRequest(n=1, points=3, seed=0))
    assert SweepReport.model_validate_json(sweep.model_dump_json()) == sweep


def test_prime_field_requests():
    rep = run_en_check(EnCheckRequest(n=1, a=[["1"]], alpha="1", field="prime:7"))
    assert rep.azumaya is True
    rep = run_en_check(EnCheckRequest(n=1, a=[["1"]], alpha="1", field="prime:2"))
    assert rep.error and exit_code(rep) == 2


# -- HTTP API --------------------------------------------------------------------


def test_api_health(client):
    body = client.get("/v1/health").json()
    assert body["status"] == "ok"


def test_api_en_check(client):
    resp = client.post("/v1/en-check", json={"n": 1, "a": [["1"]], "alpha": "1"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["azumaya"] is True and body["consistent"] is True


def test_api_en_check_bad_input_is_400(client):
    resp = client.post("/v1/en-check", json={"n": 1, "a": [["1"]], "alpha": "0"})
    assert resp.status_code == 400
    assert "alpha" in resp.json()["error"]


def test_api_malformed_request_is_422(client):
    resp = client.post("/v1/en-check", json={"n": 1})
    assert resp.status_code == 422


def test_api_verify(client):
    resp = client.post("/v1/verify", json={"document": shipped_document()})
    assert resp.status_code == 200
    assert all(c["passed"] for c in resp.json()["checks"])


def test_api_table_and_sweep(client):
    resp = client.post("/v1/table", json={"n": 1, "a": [["1"]], "alpha": "3", "gamma": ["2"]})
    assert resp.status_code == 200 and resp.json()["all_match"]
    resp = client.post("/v1/sweep", json={"n": 1, "points": 4, "seed": 1})
    assert resp.status_code == 200
    body = resp.json()
    assert body["all_consistent"] and len(body["points"]) == 4


def test_report_schema_file_matches_models():
    schema = json.loads(
        (resources.files("azumaya") / "schemas" / "reports.schema.json").read_text()
    )
    assert set(schema["$defs"]) >= {"VerdictReport", "TableReport", "SweepReport"}
    live = VerdictReport.model_json_schema(ref_template="#/$defs/{model}")
    live.pop("$defs", None)
    assert schema["$defs"]["VerdictReport"] == live


def test_en_check_vector_length_mismatch_is_input_error():
    rep = run_en_check(EnCheckRequest(n=2, a=[["1", "0"], ["0", "1"]], alpha="1", gamma=["1"]))
    assert rep.error and exit_code(rep) == 2


def test_verify_document_without_functionals_uses_default_checks():
    doc = shipped_document()
    del doc["functionals"]
    rep = run_verify(VerifyRequest(document=doc))
    names = {c.name for c in rep.checks}
    assert any(n.startswith("integral") for n in names)
    assert all(c.passed for c in rep.checks) and exit_code(rep) == 0


def test_twist_routes_guarded_at_large_n():
    a4 = [["0"] * 4 for _ in range(4)]
    rep = run_en_check(EnCheckRequest(n=4, a=a4, alpha="1", lam=[["1" if i == j else "0" for j in range(4)] for i in range(4)]))
    assert rep.error and "routes=['det']" in rep.error and exit_code(rep) == 2
    rep = run_en_check(
        EnCheckRequest(n=4, a=a4, alpha="1",
                       lam=[["1" if i == j else "0" for j in range(4)] for i in range(4)],
                       routes=["det"])
    )
    assert rep.error is None and rep.azumaya is True
