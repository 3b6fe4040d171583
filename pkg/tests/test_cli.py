import io
import json

from hltorus import cli
from hltorus.identities import REGISTRY, IdentityDef
from hltorus.series import SeriesRing


def run(argv):
    out = io.StringIO()
    code = cli.main(argv, out=out)
    return code, out.getvalue()


def test_verify_single_match_json():
    code, text = run([
        "verify", "--identity", "orthogonality", "--n", "2",
        "--lambda", "1,0", "--mu", "1,0", "--order", "10", "--json",
    ])
    assert code == 0
    lines = text.strip().splitlines()
    assert len(lines) == 1
    rec = json.loads(lines[0])
    assert rec["status"] == "match"
    assert rec["achieved_order"] == 10
    assert rec["wall_time_ms"] is None
    assert set(rec) == {
        "identity", "n", "m", "weight", "mu", "order", "status",
        "first_discrepancy_degree", "achieved_order", "wall_time_ms", "notes",
    }


def test_verify_symplectic_vanishes():
    code, text = run([
        "verify", "--identity", "symplectic", "--n", "2",
        "--lambda", "2,1,1,0", "--order", "8",
    ])
    assert code == 0
    assert "vanished-as-predicted" in text


def test_unknown_identity_is_usage_error():
    code, _ = run(["verify", "--identity", "made_up", "--n", "1"])
    assert code == 2


def test_negative_weight_rejected_for_partition_identities():
    code, _ = run([
        "verify", "--identity", "o_plus_even", "--n", "1", "--lambda", "1,-1",
    ])
    assert code == 2


def test_missing_m_is_usage_error():
    code, _ = run(["verify", "--identity", "unm_vanishing", "--n", "2"])
    assert code == 2


def test_list_catalog():
    code, text = run(["list"])
    assert code == 0
    lines = [l for l in text.splitlines() if l.strip()]
    assert len(lines) >= 18
    assert any(l.startswith("orthogonality") for l in lines)
    code, text = run(["list", "--json"])
    recs = [json.loads(l) for l in text.strip().splitlines()]
    assert len(recs) >= 18
    assert all(set(r) == {
        "name", "description", "weight_shape", "parameters",
        "needs_m", "needs_mu", "negative_weights",
    } for r in recs)


def test_sweep_all_pass():
    code, text = run([
        "sweep", "--identity", "o_plus_even", "--n", "1",
        "--max-weight", "4", "--order", "10", "--json",
    ])
    assert code == 0
    recs = [json.loads(l) for l in text.strip().splitlines()]
    assert len(recs) >= 5
    assert all(r["status"] in ("match", "vanished-as-predicted") for r in recs)


def test_sweep_deterministic_across_job_counts():
    base = [
        "sweep", "--identity", "symplectic", "--n", "1",
        "--max-weight", "3", "--order", "8", "--json",
    ]
    _, first = run(base + ["--jobs", "1"])
    _, second = run(base + ["--jobs", "2"])
    assert first == second


def test_mismatch_exit_code():
    ring = SeriesRing(4)

    def bad_build(inst):
        return ring.one(), ring.zero(), ()

    fake = IdentityDef(
        name="always_wrong",
        description="test-only",
        weight_shape="none",
        build=bad_build,
        needs_weight=False,
    )
    REGISTRY[fake.name] = fake
    try:
        code, text = run(["verify", "--identity", "always_wrong", "--n", "1"])
        assert code == 1
        assert "mismatch" in text
    finally:
        del REGISTRY[fake.name]


def test_resource_exit_code(monkeypatch):
    monkeypatch.setenv("HLTORUS_MAX_TERMS", "1")
    from hltorus import densities as dmod

    dmod.clear_caches()
    code, text = run([
        "verify", "--identity", "orthogonality", "--n", "2",
        "--lambda", "1,0", "--mu", "1,0", "--order", "8",
    ])
    assert code == 3
    assert "resource" in text
    monkeypatch.delenv("HLTORUS_MAX_TERMS")
    dmod.clear_caches()
