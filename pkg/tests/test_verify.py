import numpy as np
import pytest

from exentropy import (
    DEFAULT_ALPHAS,
    DEFAULT_DIMS,
    DEFAULT_TOLERANCES,
    InvalidConfig,
    SuiteConfig,
    check_all,
    check_classical,
    check_ensemble,
    check_measurement,
    check_quantum,
    replay,
    reports_to_document,
)


def _broken_entropy(p, alpha):
    """Deliberate mutation: the exponential is dropped from the numerator."""
    if abs(alpha - 1.0) < 1e-6:
        nz = p[p > 0.0]
        return float(-(nz * np.log(nz)).sum())
    s = float(np.power(p, alpha).sum())
    return (2.0 - s) / (alpha - 1.0)


def test_suite_config_defaults_and_merging():
    cfg = SuiteConfig(seed=0)
    assert cfg.trials == 200
    assert cfg.dims == DEFAULT_DIMS
    assert cfg.alphas == DEFAULT_ALPHAS
    assert cfg.tolerances == DEFAULT_TOLERANCES
    cfg = SuiteConfig(seed=1, tolerances={"classical.symmetry": 1e-6})
    assert cfg.tolerances["classical.symmetry"] == 1e-6
    assert cfg.tolerances["classical.concavity"] == DEFAULT_TOLERANCES["classical.concavity"]


def test_suite_config_rejects_invalid_parameters():
    with pytest.raises(InvalidConfig, match="seed"):
        SuiteConfig(seed=-1)
    with pytest.raises(InvalidConfig, match="trials"):
        SuiteConfig(seed=0, trials=0)
    with pytest.raises(InvalidConfig, match="dims must not be empty"):
        SuiteConfig(seed=0, dims=())
    with pytest.raises(InvalidConfig, match="every dim"):
        SuiteConfig(seed=0, dims=(0,))
    with pytest.raises(InvalidConfig, match="every dim"):
        SuiteConfig(seed=0, dims=(65,))
    with pytest.raises(InvalidConfig, match="alphas must not be empty"):
        SuiteConfig(seed=0, alphas=())
    with pytest.raises(InvalidConfig, match="every alpha"):
        SuiteConfig(seed=0, alphas=(0.0,))
    with pytest.raises(InvalidConfig, match="unknown tolerance key"):
        SuiteConfig(seed=0, tolerances={"classical.monotonicity": 1e-9})
    with pytest.raises(InvalidConfig, match="non-negative real"):
        SuiteConfig(seed=0, tolerances={"classical.symmetry": -1.0})


def test_classical_suite_passes_and_counts_checks():
    cfg = SuiteConfig(seed=3, trials=3, dims=(2, 3), alphas=(0.5, 2.0))
    report = check_classical(cfg)
    assert report.suite == "classical"
    assert report.gating_violations == 0
    by_name = {p.name: p for p in report.properties}
    assert by_name["classical.symmetry"].checks == 3 * 2 * 2
    assert by_name["classical.maximality"].checks == 3 * 2 * 2 * 2
    assert by_name["classical.shannon_limit"].checks == 3 * 2 * 2
    assert by_name["classical.decisivity"].violation_count == 0
    assert not by_name["classical.concavity_local"].gating
    for prop in report.properties:
        assert prop.worst_margin is not None
        assert prop.violations == []


def test_quantum_measurement_ensemble_suites_pass():
    cfg = SuiteConfig(seed=5, trials=6, dims=(1, 2, 4), alphas=(0.5, 1.5, 2.0))
    for runner in (check_quantum, check_measurement, check_ensemble):
        report = runner(cfg)
        assert report.gating_violations == 0


def test_reports_are_byte_identical_across_runs():
    cfg = SuiteConfig(seed=9, trials=4, dims=(2, 3), alphas=(0.5, 2.0))
    assert check_quantum(cfg).to_json() == check_quantum(cfg).to_json()
    assert check_classical(cfg).to_json() == check_classical(cfg).to_json()


def test_different_seeds_draw_different_inputs():
    kwargs = dict(trials=4, dims=(3,), alphas=(2.0,))
    a = check_classical(SuiteConfig(seed=1, **kwargs))
    b = check_classical(SuiteConfig(seed=2, **kwargs))
    margins_a = [p.worst_margin for p in a.properties]
    margins_b = [p.worst_margin for p in b.properties]
    assert margins_a != margins_b


def test_broken_entropy_is_caught_by_the_right_properties():
    cfg = SuiteConfig(seed=13, trials=10, dims=(2, 3, 4))
    report = check_classical(cfg, entropy_fn=_broken_entropy)
    by_name = {p.name: p for p in report.properties}
    for name in ("non_negativity", "decisivity", "maximality", "shannon_limit"):
        assert by_name[f"classical.{name}"].violation_count > 0, name
    for name in ("symmetry", "expansibility", "concavity"):
        assert by_name[f"classical.{name}"].violation_count == 0, name
    assert report.gating_violations > 0


def test_violations_record_reproduction_data_in_trial_order():
    cfg = SuiteConfig(seed=13, trials=10, dims=(2, 3, 4))
    report = check_classical(cfg, entropy_fn=_broken_entropy)
    by_name = {p.name: p for p in report.properties}
    violations = by_name["classical.decisivity"].violations
    assert violations
    trials = [v["trial"] for v in violations]
    assert trials == sorted(trials)
    first = violations[0]
    assert set(first) == {"trial", "dim", "alpha", "margin", "spawn_key"}
    assert first["spawn_key"][0] == 0


def test_replay_reproduces_a_reported_violation_exactly():
    cfg = SuiteConfig(seed=13, trials=10, dims=(2, 3, 4))
    report = check_classical(cfg, entropy_fn=_broken_entropy)
    by_name = {p.name: p for p in report.properties}
    target = by_name["classical.maximality"].violations[0]
    results = replay(cfg, "classical.maximality", target["trial"], entropy_fn=_broken_entropy)
    margins = [
        r["margin"] for r in results if r["dim"] == target["dim"] and r["alpha"] == target["alpha"]
    ]
    assert target["margin"] in margins


def test_replay_is_deterministic_and_validates_input():
    cfg = SuiteConfig(seed=21, trials=5, dims=(2, 3))
    assert replay(cfg, "quantum.concavity", 2) == replay(cfg, "quantum.concavity", 2)
    with pytest.raises(InvalidConfig, match="unknown property"):
        replay(cfg, "quantum.no_such_law", 0)
    with pytest.raises(InvalidConfig, match="unknown suite"):
        replay(cfg, "thermal.concavity", 0)
    with pytest.raises(InvalidConfig, match="trial"):
        replay(cfg, "quantum.concavity", -1)


def test_measurement_general_rank_probe_is_opt_in():
    cfg = SuiteConfig(seed=7, trials=4, dims=(2, 4), alphas=(0.5, 2.0))
    default = check_measurement(cfg)
    assert [p.name for p in default.properties] == [
        "measurement.non_decrease",
        "measurement.commuting_equality",
    ]
    extended = check_measurement(cfg, include_general_rank=True)
    assert extended.properties[-1].name == "measurement.general_rank_non_decrease"
    assert not extended.properties[-1].gating
    assert extended.gating_violations == 0


def test_properties_with_no_applicable_alphas_report_no_checks():
    cfg = SuiteConfig(seed=2, trials=3, dims=(2,), alphas=(0.5,))
    report = check_ensemble(cfg)
    by_name = {p.name: p for p in report.properties}
    assert by_name["ensemble.classical_bound"].checks == 0
    assert by_name["ensemble.classical_bound"].worst_margin is None
    assert by_name["ensemble.classical_bound_small_alpha"].checks > 0
    # None still serializes.
    assert '"worst_margin": null' in report.to_json()


def test_check_all_and_combined_document():
    cfg = SuiteConfig(seed=4, trials=3, dims=(2, 3), alphas=(0.5, 2.0))
    reports = check_all(cfg)
    assert [r.suite for r in reports] == ["classical", "quantum", "measurement", "ensemble"]
    doc = reports_to_document(reports)
    assert doc["suite"] == "all"
    assert doc["gating_violations"] == sum(r.gating_violations for r in reports)
    assert [s["suite"] for s in doc["suites"]] == ["classical", "quantum", "measurement", "ensemble"]
    with pytest.raises(ValueError, match="at least one report"):
        reports_to_document([])


def test_report_json_shape():
    cfg = SuiteConfig(seed=1, trials=2, dims=(2,), alphas=(2.0,))
    report = check_quantum(cfg)
    doc = report.to_dict()
    assert set(doc) == {"suite", "config", "gating_violations", "properties"}
    assert doc["config"]["seed"] == 1
    for prop in doc["properties"]:
        assert set(prop) == {
            "name",
            "claim",
            "gating",
            "tolerance",
            "trials",
            "checks",
            "violation_count",
            "worst_margin",
            "violations",
        }
        assert prop["claim"]
    assert report.to_json().endswith("\n")
