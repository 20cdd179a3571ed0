"""End-to-end acceptance gate: golden values, suite runs, oracle equivalence.

Each test prints exactly one pass/fail line so the gate can be read off the
log, and asserts the same condition so pytest enforces it.
"""

import json
import math
import subprocess
import sys
import time

import numpy as np

from exentropy import (
    DensityOperator,
    Distribution,
    exp_entropy,
    exp_qthc,
    exp_thc_entropy,
    sample_density,
    thc_entropy,
)

from .oracles import charpoly_eigenvalues, exp_thc_reference


def _verdict(num, ok, detail):
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num}: {detail}"


def _run_verify(args, report_path):
    cmd = [sys.executable, "-m", "exentropy", "verify", *args, "--report", str(report_path)]
    t0 = time.monotonic()
    proc = subprocess.run(cmd, capture_output=True, text=True)
    elapsed = time.monotonic() - t0
    doc = json.loads(report_path.read_text()) if report_path.exists() else None
    return proc, elapsed, doc


def _violation_counts(doc):
    return {p["name"]: p["violation_count"] for p in doc["properties"]}


def test_criterion_1_golden_values():
    failures = []
    u2 = Distribution([0.5, 0.5])
    skew = Distribution([0.75, 0.25])
    cases = [
        (exp_thc_entropy(u2, 2.0), exp_thc_reference([0.5, 0.5], 2.0), "exp_thc(0.5,0.5;2)"),
        (exp_thc_entropy(u2, 2.0), 1.0 - math.exp(-0.5), "1 - e^-1/2"),
        (exp_thc_entropy(skew, 2.0), exp_thc_reference([0.75, 0.25], 2.0), "exp_thc(0.75,0.25;2)"),
        (exp_thc_entropy(skew, 2.0), 1.0 - math.exp(-0.375), "1 - e^-3/8"),
    ]
    for got, want, label in cases:
        if abs(got - want) > 1e-12:
            failures.append(f"{label}: {got!r} vs {want!r}")
    for alpha in (2.0, 3.0, 0.5):
        got = thc_entropy(u2, alpha, norm="havrda_charvat")
        if abs(got - 1.0) > 1e-12:
            failures.append(f"hc(0.5,0.5;{alpha}) = {got!r}, not 1")
    _verdict(1, not failures, "; ".join(failures) or "golden values within 1e-12")


def test_criterion_2_uniform_reduces_to_n():
    failures = []
    for n in range(2, 17):
        u = Distribution(np.full(n, 1.0 / n), renormalize=True)
        values = {
            "shannon": exp_entropy(u, "shannon"),
            "renyi": exp_entropy(u, "renyi", alpha=2.0),
            "kapur": exp_entropy(u, "kapur", alpha=2.0, beta=3.0),
        }
        for kind, value in values.items():
            if abs(value - n) > 1e-9:
                failures.append(f"exp {kind} at uniform {n}: {value!r}")
    _verdict(2, not failures, "; ".join(failures) or "all three kinds equal n for n in 2..16")


def test_criterion_3_classical_suite(tmp_path):
    proc, elapsed, doc = _run_verify(
        ["--suite", "classical", "--seed", "42", "--trials", "1000", "--dims", "2..8"],
        tmp_path / "classical.json",
    )
    counts = _violation_counts(doc) if doc else {}
    named = [
        "classical.symmetry",
        "classical.non_negativity",
        "classical.expansibility",
        "classical.decisivity",
        "classical.maximality",
        "classical.concavity",
    ]
    ok = (
        proc.returncode == 0
        and doc is not None
        and doc["gating_violations"] == 0
        and all(counts.get(name) == 0 for name in named)
        and elapsed < 10.0
    )
    _verdict(
        3,
        ok,
        f"exit={proc.returncode}, gating={doc and doc['gating_violations']}, {elapsed:.2f}s < 10s",
    )


def test_criterion_4_quantum_suite(tmp_path):
    proc, elapsed, doc = _run_verify(
        ["--suite", "quantum", "--seed", "7", "--trials", "500", "--dims", "2..6"],
        tmp_path / "quantum.json",
    )
    counts = _violation_counts(doc) if doc else {}
    named = [
        "quantum.non_negativity",
        "quantum.purity_iff",
        "quantum.rank_bound",
        "quantum.rank_bound_equality",
        "quantum.concavity",
        "quantum.trace_minkowski",
        "quantum.alpha_one_limit",
    ]
    ok = (
        proc.returncode == 0
        and doc is not None
        and doc["gating_violations"] == 0
        and all(counts.get(name) == 0 for name in named)
        and elapsed < 30.0
    )
    _verdict(
        4,
        ok,
        f"exit={proc.returncode}, gating={doc and doc['gating_violations']}, {elapsed:.2f}s < 30s",
    )


def test_criterion_5_measurement_suite(tmp_path):
    proc, elapsed, doc = _run_verify(
        ["--suite", "measurement", "--seed", "3", "--trials", "500", "--dims", "2..6"],
        tmp_path / "measurement.json",
    )
    counts = _violation_counts(doc) if doc else {}
    ok = (
        proc.returncode == 0
        and doc is not None
        and doc["gating_violations"] == 0
        and counts.get("measurement.non_decrease") == 0
        and counts.get("measurement.commuting_equality") == 0
        and elapsed < 30.0
    )
    _verdict(
        5,
        ok,
        f"exit={proc.returncode}, gating={doc and doc['gating_violations']}, {elapsed:.2f}s < 30s",
    )


def test_criterion_6_ensemble_suite(tmp_path):
    proc, elapsed, doc = _run_verify(
        ["--suite", "ensemble", "--seed", "11", "--trials", "500", "--dims", "2..6"],
        tmp_path / "ensemble.json",
    )
    counts = _violation_counts(doc) if doc else {}
    named = ["ensemble.classical_bound", "ensemble.majorization", "ensemble.identity_equality"]
    ok = (
        proc.returncode == 0
        and doc is not None
        and doc["gating_violations"] == 0
        and all(counts.get(name) == 0 for name in named)
        and elapsed < 30.0
    )
    _verdict(
        6,
        ok,
        f"exit={proc.returncode}, gating={doc and doc['gating_violations']}, {elapsed:.2f}s < 30s",
    )


def test_criterion_7_oracle_equivalence():
    rng = np.random.default_rng(2024)
    alphas = (0.5, 1.5, 2.0, 3.0, 5.0)
    failures = []
    t0 = time.monotonic()
    for trial in range(200):
        n = 2 + trial % 5
        method = ("ginibre", "diag_mixture")[trial % 2]
        m = sample_density(n, rng, method=method)
        rho = DensityOperator(m)
        spectrum = rho.spectrum.eigenvalues
        if n <= 3:
            ref = charpoly_eigenvalues(m)
            if np.abs(spectrum - ref).max() > 1e-10:
                failures.append(f"trial {trial}: spectrum off charpoly oracle by "
                                f"{np.abs(spectrum - ref).max():.2e}")
                continue
        p = Distribution(spectrum, renormalize=True)
        for alpha in alphas:
            q = exp_qthc(rho, alpha)
            c = exp_thc_entropy(p, alpha)
            if abs(q - c) > 1e-10:
                failures.append(f"trial {trial} alpha {alpha}: |{q!r} - {c!r}|")
    elapsed = time.monotonic() - t0
    ok = not failures and elapsed < 10.0
    detail = "; ".join(failures[:3]) or f"200 operators agree within 1e-10, {elapsed:.2f}s < 10s"
    _verdict(7, ok, detail)


def test_criterion_8_determinism(tmp_path):
    args = ["--suite", "all", "--seed", "42", "--trials", "200"]
    proc1, t1, doc1 = _run_verify(args, tmp_path / "run1.json")
    proc2, t2, doc2 = _run_verify(args, tmp_path / "run2.json")
    identical = (tmp_path / "run1.json").read_bytes() == (tmp_path / "run2.json").read_bytes()
    ok = (
        proc1.returncode == 0
        and proc2.returncode == 0
        and doc1 is not None
        and doc1["gating_violations"] == 0
        and identical
        and t1 + t2 < 60.0
    )
    _verdict(
        8,
        ok,
        f"exits=({proc1.returncode},{proc2.returncode}), byte-identical={identical}, "
        f"{t1 + t2:.2f}s < 60s",
    )
