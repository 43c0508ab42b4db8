"""
Tests for the verification runner and its claims.

Full claims run against a small order cap so the suite stays quick;
claims that need larger groups report SKIPPED instead of failing.

Usage:
    pytest test_runner.py
"""
import asyncio
import random

import pytest

from ncgraph.config import NcgraphConfig
from ncgraph.config.sweep_catalog import CLAIM_TITLES, MIN_SWEEP_SIZE
from ncgraph.graphs import clique_number
from ncgraph.matroids import is_matroid_graph
from ncgraph.runner import (
    FAIL,
    PASS,
    SKIPPED,
    CLAIMS,
    ClaimFailed,
    ClaimSkipped,
    VerificationRun,
    analyze_sweep_entry,
    claim_cc_theorem,
    claim_dihedral,
    claim_kregular,
    claim_non_matroid,
    claim_pgroups,
    claim_presentations,
    claim_quaternion_omega,
    random_cluster_complement,
    random_noncommuting_set,
    run_claim,
    run_verification,
    sweep_specs,
)
from ncgraph.analysis import build_ncg
from ncgraph.groups import build_group

SMALL = NcgraphConfig(max_order=24)


def test_sweep_specs_respect_the_bound():
    specs = sweep_specs(24)
    assert "Q:8" in specs and "S:4" in specs and "S:3xC:2" in specs
    assert "S:5" not in specs and "Q:8xQ:8" not in specs
    assert specs.index("S:1") < specs.index("D:1") < specs.index("Q:8")


def test_full_sweep_is_large_enough():
    assert len(sweep_specs(200)) >= MIN_SWEEP_SIZE


def test_sweep_entry_verdicts():
    entry = analyze_sweep_entry("S:4", 5000)
    assert entry.ok
    assert (entry.is_ac, entry.is_matroid, entry.transitive) == (False, False, False)
    assert entry.cross_validated is False

    entry = analyze_sweep_entry("D:5", 5000)
    assert (entry.is_ac, entry.is_matroid, entry.transitive, entry.cross_validated) == (True, True, True, True)


def test_sweep_entry_captures_errors(tmp_path):
    assert "ParameterError" in analyze_sweep_entry("Q:7", 5000).error
    assert "CapExceeded" in analyze_sweep_entry("S:8", 5000).error
    bad = tmp_path / "bad.json"
    bad.write_text('{"order": 2, "table": [[0, 0], [0, 0]]}')
    entry = analyze_sweep_entry(str(bad), 5000, fixture=True)
    assert not entry.ok and entry.fixture


def test_random_cluster_complement_clique_number():
    rng = random.Random(3)
    for _ in range(20):
        graph, parts = random_cluster_complement(rng, 15)
        assert is_matroid_graph(graph)[0]
        assert clique_number(graph)[0] == parts


def test_random_noncommuting_set():
    ctx = build_ncg(build_group("D:7"))
    rng = random.Random(0)
    for _ in range(20):
        chosen = random_noncommuting_set(ctx, rng)
        assert chosen
        assert all(not ctx.group.commutes(a, b) for a in chosen for b in chosen if a != b)


def test_claim_rng_is_reproducible():
    run = VerificationRun(NcgraphConfig(seed=5))
    assert run.rng(1).random() == run.rng(1).random()
    assert run.rng(1).random() != run.rng(2).random()


@pytest.mark.parametrize("claim", [
    claim_quaternion_omega,
    claim_cc_theorem,
    claim_pgroups,
    claim_non_matroid,
    claim_dihedral,
    claim_kregular,
])
def test_fixed_claims_pass(claim):
    number = next(n for n, c in CLAIMS if c is claim)
    result = run_claim(number, claim, VerificationRun(NcgraphConfig()))
    assert result.status == PASS, result.detail
    assert result.title == CLAIM_TITLES[number]
    assert result.execution_time_ms is None


def test_presentations_claim_samples_lazy_products():
    result = run_claim(0, claim_presentations, VerificationRun(NcgraphConfig()))
    assert result.status == PASS, result.detail
    assert "1000 sampled products closed in S:10, A:10" in result.detail


def test_claims_skip_over_the_cap():
    result = run_claim(1, claim_quaternion_omega, VerificationRun(SMALL))
    assert result.status == SKIPPED
    assert "Q:28" in result.detail


def test_run_claim_isolates_errors():
    run = VerificationRun(NcgraphConfig(report_timing=True))

    def failing(run):
        raise ClaimFailed("expected 3, got 4")

    def skipping(run):
        raise ClaimSkipped("too big")

    def crashing(run):
        raise KeyError("boom")

    assert run_claim(0, failing, run).status == FAIL
    assert run_claim(0, skipping, run).status == SKIPPED
    crashed = run_claim(0, crashing, run)
    assert crashed.status == FAIL
    assert crashed.detail.startswith("KeyError")
    assert crashed.execution_time_ms is not None


def test_run_verification_small_cap():
    summary = asyncio.run(run_verification(SMALL))
    assert [c["number"] for c in summary["claims"]] == list(range(14))
    failures = [c for c in summary["claims"] if c["status"] == FAIL]
    assert failures == []
    assert summary["passed"] + summary["skipped"] == 14
    assert summary["sweep_size"] == len(sweep_specs(24))
    chi = next(c for c in summary["claims"] if c["number"] == 12)
    assert chi["records"]


def test_fixture_failure_fails_equivalence(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"order": 2, "table": [[0, 0], [0, 0]]}')
    run = VerificationRun(NcgraphConfig(max_order=12), fixtures=[str(bad)])
    asyncio.run(run.analyze_sweep())
    assert run.sweep[-1].fixture and not run.sweep[-1].ok
    result = run_claim(4, dict(CLAIMS)[4], run)
    assert result.status == FAIL
    assert "identity" in result.detail
