"""HTTP API."""

import json

import pytest
from fastapi.testclient import TestClient

from rbtrees import __version__
from rbtrees.api import create_app
from rbtrees.api.models import CombinationEntry, combination_from_wire
from rbtrees.api.routes import get_engine_dependency
from rbtrees.config import Settings, get_settings
from rbtrees.core import NormalFormEngine
from rbtrees.terms import Tree

from .test_rewrite import WORKED_EXAMPLE_JSON

API = "/api/v1"


@pytest.fixture
def sweep_dir(tmp_path):
    sweep = {
        "sweep_id": "tiny",
        "name": "Tiny sweep",
        "checks": [
            {"type": "verify", "name": "v", "config": {"max_a": 2, "max_b": 2}},
            {
                "type": "rota_baxter_law",
                "name": "law",
                "config": {"model": "integral", "pairs": 10},
            },
        ],
    }
    (tmp_path / "tiny.json").write_text(json.dumps(sweep), encoding="utf-8")
    (tmp_path / "broken.json").write_text("{not json", encoding="utf-8")
    return tmp_path


@pytest.fixture
def client(sweep_dir):
    app = create_app()
    engine = NormalFormEngine()
    app.dependency_overrides[get_engine_dependency] = lambda: engine
    app.dependency_overrides[get_settings] = lambda: Settings(sweep_config_path=str(sweep_dir))
    with TestClient(app) as test_client:
        yield test_client


class TestHealth:
    def test_health(self, client):
        response = client.get(f"{API}/health")
        assert response.status_code == 200
        body = response.json()
        assert body["status"] == "healthy"
        assert body["version"] == __version__


class TestExpand:
    def test_worked_example(self, client):
        response = client.post(f"{API}/expand", json={"a": 2, "b": 1})
        assert response.status_code == 200
        body = response.json()
        assert body["tree"] == [2, 1, 0]
        assert body["method"] == "memoized"
        assert body["terms"] == 5
        assert body["normal_form"] == json.loads(WORKED_EXAMPLE_JSON)

    def test_naive_matches(self, client):
        memo = client.post(f"{API}/expand", json={"a": 3, "b": 2, "c": 1}).json()
        naive = client.post(f"{API}/expand", json={"a": 3, "b": 2, "c": 1, "naive": True}).json()
        assert naive["method"] == "naive"
        assert naive["normal_form"] == memo["normal_form"]

    def test_response_decodes_to_the_normal_form(self, client):
        body = client.post(f"{API}/expand", json={"a": 4, "b": 3, "c": 1}).json()
        entries = [CombinationEntry(**entry) for entry in body["normal_form"]]
        assert combination_from_wire(entries) == NormalFormEngine().normal_form(Tree(4, 3, 1))

    def test_memo_fills_table(self, client):
        client.post(f"{API}/expand", json={"a": 4, "b": 4})
        assert client.get(f"{API}/health").json()["memo_table_entries"] > 0

    def test_naive_cap(self, client):
        response = client.post(f"{API}/expand", json={"a": 8, "b": 7, "naive": True})
        assert response.status_code == 413

    def test_negative_exponent(self, client):
        assert client.post(f"{API}/expand", json={"a": -1, "b": 1}).status_code == 422


class TestClosedForm:
    def test_reconciled_with_sums(self, client):
        response = client.post(
            f"{API}/closed-form", json={"a": 2, "b": 1, "include_sums": True}
        )
        assert response.status_code == 200
        body = response.json()
        assert body["mode"] == "reconciled"
        assert body["identity"] == json.loads(WORKED_EXAMPLE_JSON)
        assert sorted(body["sums"]) == ["D1", "D2", "D3", "D4", "D5"]

    def test_restricted(self, client):
        body = client.post(
            f"{API}/closed-form", json={"a": 2, "b": 1, "restricted": True}
        ).json()
        assert body["mode"] == "restricted"
        assert [entry["tree"] for entry in body["identity"]] == [[0, 1, 2], [1, 0, 2], [2, 0, 1]]
        assert body["sums"] is None

    def test_empty_leg(self, client):
        assert client.post(f"{API}/closed-form", json={"a": 0, "b": 1}).status_code == 422


class TestVerify:
    def test_reconciled_is_clean(self, client):
        body = client.post(f"{API}/verify", json={"max_a": 4, "max_b": 4}).json()
        assert body["mismatches"] == []
        assert body["grid"] == [4, 4]

    def test_published_reports_mismatches(self, client):
        body = client.post(
            f"{API}/verify", json={"max_a": 3, "max_b": 3, "mode": "as-published"}
        ).json()
        assert body["mismatches"]
        assert {m["sum"] for m in body["mismatches"]} <= {"D2", "D3"}


class TestCount:
    def test_report(self, client):
        body = client.post(f"{API}/count", json={"max_a": 2, "max_m": 3}).json()
        assert len(body["rows"]) == 6
        assert all(isinstance(row["enumerated"], str) for row in body["rows"])

    def test_enumeration_cap(self, client):
        response = client.post(f"{API}/count", json={"max_a": 20, "max_m": 20})
        assert response.status_code == 413


class TestSweeps:
    def test_list_skips_broken_files(self, client):
        response = client.get(f"{API}/sweeps")
        assert response.status_code == 200
        assert [s["sweep_id"] for s in response.json()] == ["tiny"]

    def test_run_stored(self, client):
        body = client.post(f"{API}/sweeps/run", json={"sweep_id": "tiny"}).json()
        assert body["ok"] is True
        assert [c["name"] for c in body["checks"]] == ["v", "law"]

    def test_run_inline_with_filter(self, client):
        sweep = {
            "sweep_id": "inline",
            "name": "inline",
            "checks": [
                {"type": "chain_count", "name": "c", "config": {"max_a": 1, "max_m": 3}},
                {"type": "verify", "name": "v", "config": {"max_a": 2, "max_b": 2}},
            ],
        }
        body = client.post(
            f"{API}/sweeps/run", json={"sweep_config": sweep, "only": ["c"], "jobs": 2}
        ).json()
        assert [c["check_type"] for c in body["checks"]] == ["chain_count"]

    def test_unknown_sweep(self, client):
        assert client.post(f"{API}/sweeps/run", json={"sweep_id": "nope"}).status_code == 404

    def test_invalid_requests(self, client):
        assert client.post(f"{API}/sweeps/run", json={}).status_code == 400
        bad = {"sweep_id": "x", "name": "x", "checks": [{"type": "verify", "config": {}}]}
        assert client.post(f"{API}/sweeps/run", json={"sweep_config": bad}).status_code == 400

    def test_nothing_enabled(self, client):
        sweep = {
            "sweep_id": "off",
            "name": "off",
            "checks": [
                {"type": "verify", "enabled": False, "config": {"max_a": 1, "max_b": 1}}
            ],
        }
        response = client.post(f"{API}/sweeps/run", json={"sweep_config": sweep})
        assert response.status_code == 400
