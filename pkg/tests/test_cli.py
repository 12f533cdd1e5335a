import json
from importlib import resources

import httpx

from azumaya.api import app
from azumaya.cli import _dispatch, _parse_matrix, _parse_vector, main
from azumaya.reports import EnCheckRequest


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_matrix_semicolon_syntax():
    assert _parse_matrix("0,1;1,0") == [["0", "1"], ["1", "0"]]
    assert _parse_matrix(" 1/2, -3 ; 0, 1 ") == [["1/2", "-3"], ["0", "1"]]
    assert _parse_vector("0, 1,2") == ["0", "1", "2"]


def test_parse_matrix_from_file(tmp_path):
    path = tmp_path / "a.json"
    path.write_text(json.dumps([[1, 0], [0, 1]]))
    assert _parse_matrix(f"@{path}") == [["1", "0"], ["0", "1"]]


def test_en_check_azumaya_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "en-check", "--n", "1", "--a", "1", "--alpha", "1")
    assert code == 0
    assert "verdict: Azumaya" in out
    assert "route theta" in out and "route fg" in out and "route det" in out


def test_en_check_not_azumaya_exit_one(capsys):
    code, out, _ = run_cli(capsys, "en-check", "--n", "1", "--a", "0", "--alpha", "1")
    assert code == 1
    assert "not Azumaya" in out


def test_en_check_n2_symmetrized_lambda(capsys):
    code, out, _ = run_cli(
        capsys, "en-check", "--n", "2", "--a", "0,0;0,0", "--alpha", "1",
        "--lam", "1,0;0,1",
    )
    assert code == 0


def test_en_check_bad_alpha_exit_two(capsys):
    code, _, _ = run_cli(capsys, "en-check", "--n", "1", "--a", "1", "--alpha", "0")
    assert code == 2


def test_en_check_malformed_matrix_exit_two(capsys):
    code, _, err = run_cli(capsys, "en-check", "--n", "1", "--a", "1,x")
    assert code == 2


def test_en_check_json_output(capsys):
    code, out, _ = run_cli(
        capsys, "en-check", "--n", "1", "--a", "1", "--alpha", "2", "--gamma", "1",
        "--lam", "1/2", "--json",
    )
    assert code == 0
    body = json.loads(out)
    assert body["azumaya"] is True
    assert body["input"]["alpha"] == "2"


def test_en_check_prime_field(capsys):
    code, out, _ = run_cli(
        capsys, "en-check", "--n", "1", "--a", "1", "--field", "prime:7", "--json"
    )
    assert code == 0
    assert json.loads(out)["field"] == "prime:7"


def test_verify_shipped_document(capsys, tmp_path):
    doc = (resources.files("azumaya") / "data" / "en1_example.json").read_text()
    path = tmp_path / "doc.json"
    path.write_text(doc)
    code, out, _ = run_cli(capsys, "verify", str(path))
    assert code == 0
    assert "FAIL" not in out


def test_verify_corrupted_document(capsys, tmp_path):
    doc = json.loads((resources.files("azumaya") / "data" / "en1_example.json").read_text())
    doc["antipode"] = [["1" if i == j else "0" for j in range(4)] for i in range(4)]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run_cli(capsys, "verify", str(path), "--checks", "hopf")
    assert code == 1
    assert "FAIL" in out and "x1" in out


def test_verify_schema_violation(capsys, tmp_path):
    doc = json.loads((resources.files("azumaya") / "data" / "en1_example.json").read_text())
    doc.pop("counit")
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, _, err = run_cli(capsys, "verify", str(path))
    assert code == 2
    assert "counit" in err


def test_table_generic_row(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--n", "1", "--a", "1", "--alpha", "2", "--gamma", "3",
    )
    assert code == 0
    assert "all families match" in out
    # the x|c family shows -gamma/alpha
    line = next(l for l in out.splitlines() if l.startswith("x_j|c"))
    assert "-3/2" in line


def test_sweep_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "sweep", "--n", "1", "--points", "6", "--seed", "5", "--json")
    code2, out2, _ = run_cli(capsys, "sweep", "--n", "1", "--points", "6", "--seed", "5", "--json")
    assert code1 == code2 == 0
    a, b = json.loads(out1), json.loads(out2)
    assert a["points"] == b["points"]


class _InProcessTransport(httpx.BaseTransport):
    """Route CLI client requests into the ASGI app without a socket."""

    def __init__(self, asgi_app):
        from fastapi.testclient import TestClient

        self._client = TestClient(asgi_app)

    def handle_request(self, request):
        resp = self._client.request(
            request.method,
            request.url.path,
            content=request.read(),
            headers={"content-type": request.headers.get("content-type", "")},
        )
        return httpx.Response(resp.status_code, content=resp.content)


def test_remote_dispatch_in_process():
    transport = _InProcessTransport(app)
    req = EnCheckRequest(n=1, a=[["1"]], alpha="1")
    report = _dispatch("en-check", req, "http://service", transport=transport)
    assert report.azumaya is True and report.consistent


def test_remote_dispatch_propagates_input_error():
    transport = _InProcessTransport(app)
    req = EnCheckRequest(n=1, a=[["1"]], alpha="0")
    report = _dispatch("en-check", req, "http://service", transport=transport)
    assert report.error is not None
