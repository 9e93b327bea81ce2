import json

import pytest

from dumont.verify import (
    PRUNED_DEPTH,
    REGISTRY,
    SCAN_DEPTH,
    TIERS,
    UnknownCheckError,
    VerificationReport,
    run_all,
    run_check,
)

OUT_OF_SCOPE = {"th2bg", "th2dg", "th2eg"}


@pytest.fixture(scope="module")
def full_report():
    return run_all(PRUNED_DEPTH, workers=4)


def test_th2a():
    r = run_check("th2a", 12)
    assert (r.status, r.n_max, r.mismatch) == ("pass", 12, None)


def test_no_single_132():
    assert run_check("sec4-no-single-132", 10).status == "pass"


def test_d213_example_mismatch():
    r = run_check("example-d213", 8)
    assert r.status == "mismatch"
    assert r.tier == "informational"
    assert r.mismatch == {"n": 1, "oracle": 1, "formula": 2}


def test_unknown_id():
    with pytest.raises(UnknownCheckError):
        run_check("nosuch", 4)
    with pytest.raises(UnknownCheckError):
        run_all(4, ids=["th2a", "nosuch"])


def test_out_of_scope_skipped():
    r = run_check("th2bg", 10)
    assert (r.status, r.tier) == ("skipped", "out-of-scope")


class TestRegistry:
    def test_tiers_and_anchors(self):
        for cid, check in REGISTRY.items():
            assert check.id == cid
            assert check.tier in TIERS
            assert check.anchor
            assert check.depth >= 0

    def test_out_of_scope_set(self):
        assert {c for c, ch in REGISTRY.items() if ch.tier == "out-of-scope"} == OUT_OF_SCOPE

    def test_covers_named_results(self):
        for label in ("th2a", "th2b", "th2c", "th2d", "th2e", "th2f", "th3a", "th3b", "th3c", "th3d", "thga",
                      "cor-rlm", "cor-rises", "cor-descents", "prop-block-decomposition", "remark-second-kind-132"):
            assert any(c == label or c.startswith(label + "-") for c in REGISTRY), label

    def test_subset_and_size(self):
        assert len(run_all(10, ids=["th2a", "th2f-k5"]).checks) == 2
        assert len(REGISTRY) >= 20


def test_run_all_zero():
    report = run_all(0)
    assert report.ok
    # the literal F_4 closed form gives -1 at degree 0 and the descents prose
    # has no k=0 term; every other check holds at n=0
    assert {c.id for c in report.checks if c.status == "mismatch"} == {
        "example-f4-closed-form-degree-0",
        "cor-descents-prose",
    }


def test_must_pass_sound_at_default_depth(full_report):
    failed = [c.id for c in full_report.checks if c.tier == "must-pass" and c.status != "pass"]
    assert failed == []
    assert full_report.ok


def test_informational_mismatches_carry_counterexamples(full_report):
    mismatched = full_report.informational_mismatches()
    assert {"example-d213", "cor-descents-prose"} <= {c.id for c in mismatched}
    for c in mismatched:
        assert set(c.mismatch) == {"n", "oracle", "formula"}
        assert c.mismatch["oracle"] != c.mismatch["formula"]


def test_depth_capping(full_report):
    by_id = {c.id: c for c in full_report.checks}
    assert by_id["genocchi-first-kind"].n_max == SCAN_DEPTH
    assert by_id["th2a"].n_max == min(PRUNED_DEPTH, REGISTRY["th2a"].depth)


def test_deterministic_and_parallel_equal(full_report):
    again = run_all(PRUNED_DEPTH, workers=1)
    assert again.canonical() == full_report.canonical()


def test_json_schema_round_trip(full_report):
    data = json.loads(full_report.to_json())
    assert set(data) == {"checks", "summary"}
    assert set(data["summary"]) == {"pass", "mismatch", "skipped"}
    for c in data["checks"]:
        assert set(c) == {"id", "paper_anchor", "tier", "status", "n_max", "mismatch", "runtime_ms"}
    back = VerificationReport.from_json(full_report.to_json())
    assert back.canonical() == full_report.canonical()
    assert back.summary == full_report.summary


def test_text_report(full_report):
    text = full_report.to_text()
    assert text.splitlines()[-1].startswith("summary:")
    assert "first disagreement at n=1: oracle 1 vs formula 2" in text
