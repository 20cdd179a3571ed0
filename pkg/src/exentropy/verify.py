"""Seeded property-based verification of the entropy family's claimed laws.

Each suite turns a set of theorems into margin checks over randomized
inputs. A check passes when its margin is at least minus the property's
tolerance: inequalities report their slack, equalities report the negated
absolute difference. The generator for every check is derived from
(seed, suite, property, trial), so any reported violation can be replayed
in isolation with ``replay``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .channels import (
    ProjectorSet,
    ensemble_from_unitary,
    projective_measure,
    projectors_from_basis,
)
from .classical import ALPHA_ONE_WINDOW, exp_thc_grid, exp_thc_max, sample_simplex
from .errors import InvalidConfig
from .linalg import (
    DIM_CAP,
    hermitian_eig,
    sample_density,
    sample_haar_unitary,
    trace_power,
)
from .quantum import DensityOperator, exp_qthc, exp_qthc_bound, rank, von_neumann

DEFAULT_DIMS = tuple(range(2, 9))
DEFAULT_ALPHAS = (0.25, 0.5, 0.9, 1.1, 1.5, 2.0, 3.0, 5.0)
SUITE_IDS = {"classical": 0, "quantum": 1, "measurement": 2, "ensemble": 3}
SUITE_NAMES = tuple(SUITE_IDS)
# States are drawn by cycling sampler methods over trials so every suite
# exercises full-rank, diagonal, and rank-one inputs.
DENSITY_CYCLE = ("ginibre", "diag_mixture", "pure")
# Offsets of the alpha probes used by the limit properties.
LIMIT_PROBE = 1e-5
# Bands deciding "zero entropy" and "pure state" in the purity property.
ZERO_ENTROPY_TOL = 1e-9
PURITY_TOL = 1e-9

DEFAULT_TOLERANCES = {
    "classical.symmetry": 1e-12,
    "classical.non_negativity": 1e-12,
    "classical.expansibility": 1e-12,
    "classical.decisivity": 0.0,
    "classical.maximality": 1e-12,
    "classical.concavity": 1e-10,
    "classical.shannon_limit": 1e-4,
    "classical.concavity_local": 1e-10,
    "quantum.non_negativity": 1e-12,
    "quantum.purity_iff": 0.0,
    "quantum.rank_bound": 1e-10,
    "quantum.rank_bound_equality": 1e-9,
    "quantum.concavity": 1e-10,
    "quantum.trace_minkowski": 1e-10,
    "quantum.alpha_one_limit": 1e-4,
    "measurement.non_decrease": 1e-10,
    "measurement.commuting_equality": 1e-9,
    "measurement.general_rank_non_decrease": 1e-10,
    "ensemble.classical_bound": 1e-10,
    "ensemble.majorization": 1e-12,
    "ensemble.identity_equality": 1e-9,
    "ensemble.classical_bound_small_alpha": 1e-10,
}

__all__ = [
    "DEFAULT_ALPHAS",
    "DEFAULT_DIMS",
    "DEFAULT_TOLERANCES",
    "PropertyRecord",
    "SUITE_IDS",
    "SUITE_NAMES",
    "SuiteConfig",
    "VerificationReport",
    "check_all",
    "check_classical",
    "check_ensemble",
    "check_measurement",
    "check_quantum",
    "replay",
    "reports_to_document",
]


@dataclass(frozen=True)
class SuiteConfig:
    """Run parameters shared by all suites; tolerances merge over defaults."""

    seed: int
    trials: int = 200
    dims: tuple[int, ...] = DEFAULT_DIMS
    alphas: tuple[float, ...] = DEFAULT_ALPHAS
    tolerances: dict[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        seed = self.seed
        if int(seed) != seed or seed < 0:
            raise InvalidConfig(f"seed must be a non-negative integer, got {self.seed!r}")
        object.__setattr__(self, "seed", int(seed))
        trials = self.trials
        if int(trials) != trials or trials < 1:
            raise InvalidConfig(f"trials must be a positive integer, got {self.trials!r}")
        object.__setattr__(self, "trials", int(trials))
        dims = tuple(self.dims)
        if not dims:
            raise InvalidConfig("dims must not be empty")
        for d in dims:
            if int(d) != d or not 1 <= d <= DIM_CAP:
                raise InvalidConfig(f"every dim must be an integer in [1, {DIM_CAP}], got {d!r}")
        object.__setattr__(self, "dims", tuple(int(d) for d in dims))
        alphas = tuple(float(a) for a in self.alphas)
        if not alphas:
            raise InvalidConfig("alphas must not be empty")
        for a in alphas:
            if not math.isfinite(a) or a <= 0.0:
                raise InvalidConfig(f"every alpha must be a positive real, got {a!r}")
        object.__setattr__(self, "alphas", alphas)
        merged = dict(DEFAULT_TOLERANCES)
        for key, value in dict(self.tolerances).items():
            if key not in DEFAULT_TOLERANCES:
                raise InvalidConfig(f"unknown tolerance key {key!r}")
            tol = float(value)
            if not math.isfinite(tol) or tol < 0.0:
                raise InvalidConfig(f"tolerance for {key!r} must be a non-negative real")
            merged[key] = tol
        object.__setattr__(self, "tolerances", merged)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "dims": list(self.dims),
            "alphas": list(self.alphas),
            "tolerances": dict(self.tolerances),
        }


@dataclass
class PropertyRecord:
    """Outcome of one property over all trials."""

    name: str
    claim: str
    gating: bool
    tolerance: float
    trials: int
    checks: int
    violation_count: int
    worst_margin: float | None
    violations: list[dict]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "claim": self.claim,
            "gating": self.gating,
            "tolerance": self.tolerance,
            "trials": self.trials,
            "checks": self.checks,
            "violation_count": self.violation_count,
            "worst_margin": self.worst_margin,
            "violations": self.violations,
        }


@dataclass
class VerificationReport:
    """All property records of one suite plus the gating violation total."""

    suite: str
    config: SuiteConfig
    properties: list[PropertyRecord]
    gating_violations: int

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "config": self.config.to_dict(),
            "gating_violations": self.gating_violations,
            "properties": [p.to_dict() for p in self.properties],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def reports_to_document(reports: list[VerificationReport]) -> dict:
    """Combined document for a run of several suites under one config."""
    if not reports:
        raise ValueError("need at least one report")
    return {
        "suite": "all",
        "config": reports[0].config.to_dict(),
        "gating_violations": sum(r.gating_violations for r in reports),
        "suites": [r.to_dict() for r in reports],
    }


@dataclass(frozen=True)
class _Prop:
    name: str
    claim: str
    gating: bool
    run: Callable[[SuiteConfig, np.random.Generator, int], list]


def _trial_rng(seed: int, suite_id: int, prop_id: int, trial: int) -> np.random.Generator:
    key = np.random.SeedSequence(seed, spawn_key=(suite_id, prop_id, trial))
    return np.random.default_rng(key)


def _run_suite(suite: str, props: list[_Prop], cfg: SuiteConfig) -> VerificationReport:
    suite_id = SUITE_IDS[suite]
    records = []
    gating_violations = 0
    for prop_id, prop in enumerate(props):
        tol = cfg.tolerances[prop.name]
        checks = 0
        worst: float | None = None
        violations: list[dict] = []
        for trial in range(cfg.trials):
            rng = _trial_rng(cfg.seed, suite_id, prop_id, trial)
            for margin, dim, alpha in prop.run(cfg, rng, trial):
                margin = float(margin)
                checks += 1
                if worst is None or margin < worst:
                    worst = margin
                if margin < -tol:
                    violations.append(
                        {
                            "trial": trial,
                            "dim": dim,
                            "alpha": alpha,
                            "margin": margin,
                            "spawn_key": [suite_id, prop_id, trial],
                        }
                    )
        if prop.gating:
            gating_violations += len(violations)
        records.append(
            PropertyRecord(
                name=prop.name,
                claim=prop.claim,
                gating=prop.gating,
                tolerance=tol,
                trials=cfg.trials,
                checks=checks,
                violation_count=len(violations),
                worst_margin=worst,
                violations=violations,
            )
        )
    return VerificationReport(
        suite=suite, config=cfg, properties=records, gating_violations=gating_violations
    )


def _classical_props(entropy_fn=None) -> list[_Prop]:
    if entropy_fn is None:
        def many(p: np.ndarray, alphas) -> np.ndarray:
            return exp_thc_grid(p, np.asarray(alphas, dtype=float))
    else:
        def many(p: np.ndarray, alphas) -> np.ndarray:
            return np.array([float(entropy_fn(p, float(a))) for a in alphas])

    def symmetry(cfg, rng, trial):
        out = []
        for n in cfg.dims:
            p = sample_simplex(n, rng)
            q = p[rng.permutation(n)]
            for a, x, y in zip(cfg.alphas, many(p, cfg.alphas), many(q, cfg.alphas)):
                out.append((-abs(x - y), n, a))
        return out

    def non_negativity(cfg, rng, trial):
        out = []
        for n in cfg.dims:
            p = sample_simplex(n, rng)
            for a, x in zip(cfg.alphas, many(p, cfg.alphas)):
                out.append((x, n, a))
        return out

    def expansibility(cfg, rng, trial):
        out = []
        for n in cfg.dims:
            p = sample_simplex(n, rng)
            padded = np.concatenate([p, [0.0]])
            for a, x, y in zip(cfg.alphas, many(p, cfg.alphas), many(padded, cfg.alphas)):
                out.append((-abs(x - y), n, a))
        return out

    def decisivity(cfg, rng, trial):
        out = []
        for n in cfg.dims:
            p = np.zeros(n)
            p[int(rng.integers(n))] = 1.0
            for a, x in zip(cfg.alphas, many(p, cfg.alphas)):
                out.append((-abs(x), n, a))
        return out

    def maximality(cfg, rng, trial):
        out = []
        for n in cfg.dims:
            p = sample_simplex(n, rng)
            u = np.full(n, 1.0 / n)
            for a, x, y in zip(cfg.alphas, many(p, cfg.alphas), many(u, cfg.alphas)):
                bound = exp_thc_max(n, a)
                out.append((bound - x, n, a))
                out.append((-abs(y - bound), n, a))
        return out

    def concavity(cfg, rng, trial):
        out = []
        for n in cfg.dims:
            p = sample_simplex(n, rng)
            q = sample_simplex(n, rng)
            t = float(rng.uniform())
            m = t * p + (1.0 - t) * q
            em = many(m, cfg.alphas)
            ep = many(p, cfg.alphas)
            eq = many(q, cfg.alphas)
            for a, xm, xp, xq in zip(cfg.alphas, em, ep, eq):
                out.append((xm - (t * xp + (1.0 - t) * xq), n, a))
        return out

    def shannon_limit(cfg, rng, trial):
        probes = (1.0 - LIMIT_PROBE, 1.0 + LIMIT_PROBE)
        out = []
        for n in cfg.dims:
            p = sample_simplex(n, rng)
            nz = p[p > 0.0]
            h = float(-(nz * np.log(nz)).sum())
            for a, x in zip(probes, many(p, probes)):
                out.append((-abs(x - h), n, a))
        return out

    def concavity_local(cfg, rng, trial):
        out = []
        for n in cfg.dims:
            p = sample_simplex(n, rng)
            for a in cfg.alphas:
                if a >= 1.0:
                    continue
                g = float(np.power(p, a).sum())
                s = float(np.power(p, 2.0 - a).sum())
                out.append(((1.0 - a) - a * (g - 1.0 / s), n, a))
        return out

    return [
        _Prop(
            "classical.symmetry",
            "entropy is invariant under permutation of the probabilities",
            True,
            symmetry,
        ),
        _Prop(
            "classical.non_negativity",
            "entropy is non-negative everywhere on the simplex",
            True,
            non_negativity,
        ),
        _Prop(
            "classical.expansibility",
            "appending a zero-probability outcome leaves the entropy unchanged",
            True,
            expansibility,
        ),
        _Prop(
            "classical.decisivity",
            "degenerate distributions have exactly zero entropy",
            True,
            decisivity,
        ),
        _Prop(
            "classical.maximality",
            "the uniform distribution attains the closed-form entropy maximum",
            True,
            maximality,
        ),
        _Prop(
            "classical.concavity",
            "the entropy of a mixture is at least the mixture of the entropies",
            True,
            concavity,
        ),
        _Prop(
            "classical.shannon_limit",
            "entropy approaches the Shannon entropy as alpha approaches 1",
            True,
            shannon_limit,
        ),
        _Prop(
            "classical.concavity_local",
            "curvature criterion alpha * (sum(p**alpha) - 1 / sum(p**(2 - alpha)))"
            " <= 1 - alpha holds for alpha < 1",
            False,
            concavity_local,
        ),
    ]


def _draw_density(n: int, rng: np.random.Generator, trial: int, offset: int = 0) -> DensityOperator:
    method = DENSITY_CYCLE[(trial + offset) % len(DENSITY_CYCLE)]
    return DensityOperator(sample_density(n, rng, method=method))


def _quantum_props() -> list[_Prop]:
    def non_negativity(cfg, rng, trial):
        out = []
        for n in cfg.dims:
            rho = _draw_density(n, rng, trial)
            for a in cfg.alphas:
                out.append((exp_qthc(rho, a), n, a))
        return out

    def purity_iff(cfg, rng, trial):
        out = []
        for n in cfg.dims:
            rho = _draw_density(n, rng, trial)
            value = exp_qthc(rho, 2.0)
            purity = trace_power(rho.spectrum, 2.0)
            entropy_zero = value < ZERO_ENTROPY_TOL
            pure = purity > 1.0 - PURITY_TOL
            if entropy_zero == pure:
                margin = 0.0
            elif pure:
                margin = -value
            else:
                margin = -(1.0 - purity)
            out.append((margin, n, 2.0))
        return out

    def rank_bound(cfg, rng, trial):
        out = []
        for n in cfg.dims:
            rho = _draw_density(n, rng, trial)
            r = rank(rho)
            for a in cfg.alphas:
                out.append((exp_qthc_bound(r, a) - exp_qthc(rho, a), n, a))
        return out

    def rank_bound_equality(cfg, rng, trial):
        out = []
        for n in cfg.dims:
            r = int(rng.integers(1, n + 1))
            u = sample_haar_unitary(n, rng)
            lam = np.zeros(n)
            lam[:r] = 1.0 / r
            m = (u * lam[None, :]) @ u.conj().T
            rho = DensityOperator((m + m.conj().T) / 2.0)
            out.append((0.0 if rank(rho) == r else -1.0, n, None))
            for a in cfg.alphas:
                out.append((-abs(exp_qthc(rho, a) - exp_qthc_bound(r, a)), n, a))
        return out

    def concavity(cfg, rng, trial):
        out = []
        for n in cfg.dims:
            rho = _draw_density(n, rng, trial)
            sigma = _draw_density(n, rng, trial, offset=1)
            t = float(rng.uniform())
            m = t * rho.matrix + (1.0 - t) * sigma.matrix
            mix = DensityOperator((m + m.conj().T) / 2.0)
            for a in cfg.alphas:
                lhs = exp_qthc(mix, a)
                rhs = t * exp_qthc(rho, a) + (1.0 - t) * exp_qthc(sigma, a)
                out.append((lhs - rhs, n, a))
        return out

    def trace_minkowski(cfg, rng, trial):
        out = []
        for n in cfg.dims:
            rho = _draw_density(n, rng, trial)
            sigma = _draw_density(n, rng, trial, offset=1)
            spec_sum = hermitian_eig(rho.matrix + sigma.matrix)
            for a in cfg.alphas:
                if abs(a - 1.0) < ALPHA_ONE_WINDOW:
                    continue
                lhs = trace_power(spec_sum, a) ** (1.0 / a)
                parts = trace_power(rho.spectrum, a) ** (1.0 / a) + trace_power(
                    sigma.spectrum, a
                ) ** (1.0 / a)
                margin = parts - lhs if a > 1.0 else lhs - parts
                out.append((margin, n, a))
        return out

    def alpha_one_limit(cfg, rng, trial):
        probes = (1.0 - LIMIT_PROBE, 1.0 + LIMIT_PROBE)
        out = []
        for n in cfg.dims:
            rho = _draw_density(n, rng, trial)
            h = von_neumann(rho)
            for a in probes:
                out.append((-abs(exp_qthc(rho, a) - h), n, a))
        return out

    return [
        _Prop(
            "quantum.non_negativity",
            "quantum entropy is non-negative on density operators",
            True,
            non_negativity,
        ),
        _Prop(
            "quantum.purity_iff",
            "entropy vanishes exactly on pure states (checked at alpha = 2)",
            True,
            purity_iff,
        ),
        _Prop(
            "quantum.rank_bound",
            "entropy is at most the closed-form maximum for the state's rank",
            True,
            rank_bound,
        ),
        _Prop(
            "quantum.rank_bound_equality",
            "states with r equal eigenvalues 1/r attain the rank-r maximum",
            True,
            rank_bound_equality,
        ),
        _Prop(
            "quantum.concavity",
            "the entropy of a mixture of states is at least the mixture of the entropies",
            True,
            concavity,
        ),
        _Prop(
            "quantum.trace_minkowski",
            "alpha-power trace roots obey the triangle inequality for alpha > 1"
            " and its reverse for alpha < 1",
            True,
            trace_minkowski,
        ),
        _Prop(
            "quantum.alpha_one_limit",
            "quantum entropy approaches the von Neumann entropy as alpha approaches 1",
            True,
            alpha_one_limit,
        ),
    ]


def _measurement_props(include_general_rank: bool = True) -> list[_Prop]:
    def non_decrease(cfg, rng, trial):
        out = []
        for n in cfg.dims:
            rho = _draw_density(n, rng, trial)
            basis = sample_haar_unitary(n, rng)
            pinched = projective_measure(rho, projectors_from_basis(basis))
            for a in cfg.alphas:
                out.append((exp_qthc(pinched, a) - exp_qthc(rho, a), n, a))
        return out

    def commuting_equality(cfg, rng, trial):
        out = []
        for n in cfg.dims:
            rho = _draw_density(n, rng, trial)
            pinched = projective_measure(rho, projectors_from_basis(rho.spectrum.eigenvectors))
            for a in cfg.alphas:
                out.append((-abs(exp_qthc(pinched, a) - exp_qthc(rho, a)), n, a))
        return out

    def general_rank(cfg, rng, trial):
        out = []
        for n in cfg.dims:
            rho = _draw_density(n, rng, trial)
            u = sample_haar_unitary(n, rng)
            k = 1 if n == 1 else int(rng.integers(2, n + 1))
            cuts = np.sort(rng.choice(np.arange(1, n), size=k - 1, replace=False))
            blocks = np.split(np.arange(n), cuts)
            projs = [u[:, b] @ u[:, b].conj().T for b in blocks]
            pinched = projective_measure(rho, ProjectorSet(projs))
            for a in cfg.alphas:
                out.append((exp_qthc(pinched, a) - exp_qthc(rho, a), n, a))
        return out

    props = [
        _Prop(
            "measurement.non_decrease",
            "a complete rank-one projective measurement never decreases the entropy",
            True,
            non_decrease,
        ),
        _Prop(
            "measurement.commuting_equality",
            "measuring in the eigenbasis of the state leaves the entropy unchanged",
            True,
            commuting_equality,
        ),
    ]
    if include_general_rank:
        props.append(
            _Prop(
                "measurement.general_rank_non_decrease",
                "projective measurements with blocks of any rank never decrease the entropy",
                False,
                general_rank,
            )
        )
    return props


def _pad_weights(w: np.ndarray) -> np.ndarray:
    # Entropy evaluation wants at least two outcomes; a zero pad is exact.
    return w if w.size >= 2 else np.concatenate([w, [0.0]])


def _ensemble_props() -> list[_Prop]:
    def classical_bound(cfg, rng, trial):
        out = []
        for n in cfg.dims:
            rho = _draw_density(n, rng, trial)
            ens = ensemble_from_unitary(rho, sample_haar_unitary(n, rng))
            probs = _pad_weights(ens.weights)
            big = [a for a in cfg.alphas if a > 1.0]
            for a, x in zip(big, exp_thc_grid(probs, np.asarray(big))):
                out.append((x - exp_qthc(rho, a), n, a))
        return out

    def majorization(cfg, rng, trial):
        out = []
        for n in cfg.dims:
            rho = _draw_density(n, rng, trial)
            ens = ensemble_from_unitary(rho, sample_haar_unitary(n, rng))
            for a in cfg.alphas:
                if a <= 1.0:
                    continue
                lhs = trace_power(rho.spectrum, a)
                rhs = float(np.power(ens.weights, a).sum())
                out.append((lhs - rhs, n, a))
        return out

    def identity_equality(cfg, rng, trial):
        out = []
        for n in cfg.dims:
            rho = _draw_density(n, rng, trial)
            ens = ensemble_from_unitary(rho, np.eye(n))
            probs = _pad_weights(ens.weights)
            big = [a for a in cfg.alphas if a > 1.0]
            for a, x in zip(big, exp_thc_grid(probs, np.asarray(big))):
                out.append((-abs(x - exp_qthc(rho, a)), n, a))
        return out

    def classical_bound_small_alpha(cfg, rng, trial):
        out = []
        for n in cfg.dims:
            rho = _draw_density(n, rng, trial)
            ens = ensemble_from_unitary(rho, sample_haar_unitary(n, rng))
            probs = _pad_weights(ens.weights)
            small = [a for a in cfg.alphas if a < 1.0]
            for a, x in zip(small, exp_thc_grid(probs, np.asarray(small))):
                out.append((x - exp_qthc(rho, a), n, a))
        return out

    return [
        _Prop(
            "ensemble.classical_bound",
            "for alpha > 1 the classical entropy of the mixing weights is at least"
            " the quantum entropy of the mixture",
            True,
            classical_bound,
        ),
        _Prop(
            "ensemble.majorization",
            "for alpha > 1 the spectrum power sum dominates the weight power sum",
            True,
            majorization,
        ),
        _Prop(
            "ensemble.identity_equality",
            "the spectral ensemble has classical entropy equal to the quantum entropy"
            " for alpha > 1",
            True,
            identity_equality,
        ),
        _Prop(
            "ensemble.classical_bound_small_alpha",
            "the mixing-weight entropy bound extends to alpha < 1",
            False,
            classical_bound_small_alpha,
        ),
    ]


def _props_for_suite(suite: str, entropy_fn=None, include_general_rank: bool = True) -> list[_Prop]:
    if suite == "classical":
        return _classical_props(entropy_fn)
    if suite == "quantum":
        return _quantum_props()
    if suite == "measurement":
        return _measurement_props(include_general_rank)
    if suite == "ensemble":
        return _ensemble_props()
    raise InvalidConfig(f"unknown suite {suite!r}, expected one of {SUITE_NAMES}")


def check_classical(cfg: SuiteConfig, entropy_fn=None) -> VerificationReport:
    """Run the classical-distribution suite.

    ``entropy_fn(probs, alpha)`` overrides the measure under test; injecting
    a deliberately broken implementation confirms the suite detects it.
    """
    return _run_suite("classical", _classical_props(entropy_fn), cfg)


def check_quantum(cfg: SuiteConfig) -> VerificationReport:
    """Run the density-operator suite."""
    return _run_suite("quantum", _quantum_props(), cfg)


def check_measurement(cfg: SuiteConfig, include_general_rank: bool = False) -> VerificationReport:
    """Run the projective-measurement suite.

    The rank-one case is the claimed theorem and always runs; pass
    ``include_general_rank=True`` to append the exploratory probe with
    projector blocks of arbitrary rank.
    """
    return _run_suite("measurement", _measurement_props(include_general_rank), cfg)


def check_ensemble(cfg: SuiteConfig) -> VerificationReport:
    """Run the pure-state-ensemble suite."""
    return _run_suite("ensemble", _ensemble_props(), cfg)


def check_all(cfg: SuiteConfig) -> list[VerificationReport]:
    """Run every suite under one config, in a fixed order."""
    return [check_classical(cfg), check_quantum(cfg), check_measurement(cfg), check_ensemble(cfg)]


def replay(
    cfg: SuiteConfig,
    property_name: str,
    trial: int,
    entropy_fn=None,
) -> list[dict]:
    """Re-run one property trial and return its margins.

    Reconstructs the exact generator used by the original run from
    (seed, suite, property, trial), so the margins match the report
    bit for bit.
    """
    if int(trial) != trial or trial < 0:
        raise InvalidConfig(f"trial must be a non-negative integer, got {trial!r}")
    suite = property_name.split(".", 1)[0]
    props = _props_for_suite(suite, entropy_fn=entropy_fn, include_general_rank=True)
    for prop_id, prop in enumerate(props):
        if prop.name == property_name:
            break
    else:
        raise InvalidConfig(f"unknown property {property_name!r}")
    rng = _trial_rng(cfg.seed, SUITE_IDS[suite], prop_id, int(trial))
    results = prop.run(cfg, rng, int(trial))
    return [{"margin": float(m), "dim": d, "alpha": a} for m, d, a in results]
