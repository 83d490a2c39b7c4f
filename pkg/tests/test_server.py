"""HTTP API behaviour, exercised over a real loopback socket."""

import json
import threading
import urllib.error
import urllib.request

import pytest

from heds import serialize_canonical
from heds.server import make_server
from golden import golden_datasheet, rule_fixtures


@pytest.fixture()
def api(tmp_path):
    server = make_server("127.0.0.1", 0, tmp_path / "registry")
    thread = threading.Thread(
        target=lambda: server.serve_forever(poll_interval=0.02), daemon=True
    )
    thread.start()
    host, port = server.server_address[:2]
    yield f"http://{host}:{port}"
    server.shutdown()
    server.server_close()
    thread.join(timeout=5)


def _request(url, method="GET", body=None):
    req = urllib.request.Request(url, data=body, method=method)
    if body is not None:
        req.add_header("Content-Type", "application/json")
    try:
        with urllib.request.urlopen(req) as resp:
            return resp.status, resp.read(), dict(resp.headers)
    except urllib.error.HTTPError as err:
        return err.code, err.read(), dict(err.headers)


class TestSchemaEndpoint:
    def test_get_schema(self, api):
        status, body, headers = _request(f"{api}/schema")
        assert status == 200
        doc = json.loads(body)
        assert doc["schema_version"] == "1.0"
        assert len(doc["parts"]) == 5
        assert headers["Access-Control-Allow-Origin"] == "*"

    def test_options_preflight(self, api):
        status, _, headers = _request(f"{api}/schema", method="OPTIONS")
        assert status == 204
        assert "PUT" in headers["Access-Control-Allow-Methods"]

    def test_unknown_path_404(self, api):
        status, _, _ = _request(f"{api}/nope")
        assert status == 404


class TestValidateEndpoint:
    def test_broken_body_400(self, api):
        status, body, _ = _request(f"{api}/validate", "POST", b"{broken")
        assert status == 400
        assert "error" in json.loads(body)

    def test_golden_zero_errors(self, api):
        blob = serialize_canonical(golden_datasheet())
        status, body, _ = _request(f"{api}/validate", "POST", blob)
        assert status == 200
        doc = json.loads(body)
        assert doc["errors"] == 0 and doc["diagnostics"] == []

    def test_findings_reported(self, api):
        blob = serialize_canonical(rule_fixtures()["R-SCALE-VALUES"])
        status, body, _ = _request(f"{api}/validate", "POST", blob)
        assert status == 200
        assert json.loads(body)["errors"] == 1


class TestRenderEndpoint:
    def test_markdown(self, api):
        blob = serialize_canonical(golden_datasheet())
        status, body, _ = _request(f"{api}/render?target=markdown", "POST", blob)
        assert status == 200
        assert body.decode().startswith("# Human Evaluation Datasheet 1.0")

    def test_latex(self, api):
        blob = serialize_canonical(golden_datasheet())
        status, body, _ = _request(f"{api}/render?target=latex", "POST", blob)
        assert status == 200
        assert body.decode().startswith("\\documentclass{article}")

    def test_unknown_target(self, api):
        blob = serialize_canonical(golden_datasheet())
        status, _, _ = _request(f"{api}/render?target=pdf", "POST", blob)
        assert status == 400


class TestRegistryEndpoints:
    def test_empty_registry(self, api):
        status, body, _ = _request(f"{api}/registry")
        assert status == 200
        assert json.loads(body) == {"entries": [], "failures": []}

    def test_put_then_get(self, api):
        blob = serialize_canonical(golden_datasheet())
        status, body, _ = _request(f"{api}/registry/mt-fluency", "PUT", blob)
        assert status == 200
        assert json.loads(body)["stored"] == "mt-fluency.heds.json"

        status, body, _ = _request(f"{api}/registry/mt-fluency")
        assert status == 200
        assert body == blob

        status, body, _ = _request(f"{api}/registry")
        doc = json.loads(body)
        assert [e["file"] for e in doc["entries"]] == ["mt-fluency.heds.json"]

    def test_put_invalid_sheet_422(self, api):
        blob = serialize_canonical(rule_fixtures()["R-INT"])
        status, body, _ = _request(f"{api}/registry/broken", "PUT", blob)
        assert status == 422
        assert json.loads(body)["errors"] >= 1
        status, _, _ = _request(f"{api}/registry/broken")
        assert status == 404

    def test_put_rejects_traversal_names(self, api):
        blob = serialize_canonical(golden_datasheet())
        status, _, _ = _request(f"{api}/registry/..%2Fescape", "PUT", blob)
        assert status == 400

    def test_get_missing_404(self, api):
        status, _, _ = _request(f"{api}/registry/absent")
        assert status == 404

    def test_put_is_idempotent_overwrite(self, api):
        blob = serialize_canonical(golden_datasheet())
        for _ in range(2):
            status, _, _ = _request(f"{api}/registry/again", "PUT", blob)
            assert status == 200
        status, body, _ = _request(f"{api}/registry/again")
        assert body == blob
