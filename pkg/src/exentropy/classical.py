"""Probability distributions and the classical entropy family.

All logarithms are natural, so the exponential entropies of a uniform
n-point distribution equal n exactly and every alpha -> 1 limit recovers
the Shannon entropy in nats.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import AlphaOutOfRange, InvalidDistribution, ParamsEqual

SUM_TOL = 1e-9
# Below this distance from 1 the direct quotient is replaced by its limit.
ALPHA_ONE_WINDOW = 1e-6

__all__ = [
    "ALPHA_ONE_WINDOW",
    "SUM_TOL",
    "Distribution",
    "exp_entropy",
    "exp_thc_entropy",
    "exp_thc_grid",
    "exp_thc_max",
    "kapur_entropy",
    "renyi_entropy",
    "sample_simplex",
    "shannon_entropy",
    "thc_entropy",
]


class Distribution:
    """Point on the probability simplex with at least two outcomes.

    Probabilities must be nonnegative and sum to 1 within ``SUM_TOL``.
    Pass ``renormalize=True`` to rescale an unnormalized vector; the
    constructor never rescales silently.
    """

    __slots__ = ("_probs",)

    def __init__(self, probs, renormalize: bool = False) -> None:
        arr = np.array(probs, dtype=float)
        if arr.ndim != 1 or arr.size < 2:
            raise InvalidDistribution("need a 1-d vector with at least 2 outcomes")
        if not np.all(np.isfinite(arr)):
            raise InvalidDistribution("probabilities must be finite")
        if float(arr.min()) < 0.0:
            raise InvalidDistribution("probabilities must be nonnegative")
        total = float(arr.sum())
        if renormalize:
            if total <= 0.0:
                raise InvalidDistribution("cannot renormalize a zero vector")
            arr = arr / total
        elif abs(total - 1.0) > SUM_TOL:
            raise InvalidDistribution(f"probabilities sum to {total!r}, not 1")
        arr.setflags(write=False)
        self._probs = arr

    @property
    def probs(self) -> np.ndarray:
        return self._probs

    @property
    def n(self) -> int:
        return self._probs.size

    def __len__(self) -> int:
        return self._probs.size

    def __repr__(self) -> str:
        body = ", ".join(repr(float(p)) for p in self._probs)
        return f"Distribution([{body}])"


def sample_simplex(n: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform point on the n-outcome simplex via normalized exponential spacings."""
    if n < 1:
        raise ValueError("need n >= 1")
    e = rng.exponential(size=n)
    return e / e.sum()


def _check_alpha(alpha: float) -> float:
    a = float(alpha)
    if not math.isfinite(a) or a <= 0.0:
        raise AlphaOutOfRange(f"alpha must be a positive real, got {alpha!r}")
    return a


def _power_sum(p: np.ndarray, alpha: float) -> float:
    # 0 ** alpha = 0 holds natively for alpha > 0.
    return float(np.power(p, alpha).sum())


def shannon_entropy(a: Distribution) -> float:
    """Shannon entropy in nats, with the 0 * ln 0 = 0 convention."""
    nz = a.probs[a.probs > 0.0]
    return float(-(nz * np.log(nz)).sum())


def thc_entropy(a: Distribution, alpha: float, norm: str = "tsallis") -> float:
    """Entropy of degree alpha under one of its two classical normalizations.

    ``havrda_charvat`` divides 1 - sum(p**alpha) by 1 - 2**(1 - alpha), which
    pins the two-outcome uniform distribution to 1; ``tsallis`` divides by
    alpha - 1 instead.
    """
    av = float(alpha)
    if not math.isfinite(av) or av <= 0.0 or av == 1.0:
        raise AlphaOutOfRange(f"alpha must be positive and not 1, got {alpha!r}")
    s = _power_sum(a.probs, av)
    if norm == "havrda_charvat":
        return (1.0 - s) / -math.expm1((1.0 - av) * math.log(2.0))
    if norm == "tsallis":
        return (1.0 - s) / (av - 1.0)
    raise ValueError(f"unknown norm {norm!r}")


def renyi_entropy(a: Distribution, alpha: float) -> float:
    """Renyi entropy of order alpha in nats."""
    av = float(alpha)
    if not math.isfinite(av) or av <= 0.0 or av == 1.0:
        raise AlphaOutOfRange(f"alpha must be positive and not 1, got {alpha!r}")
    return float(math.log(_power_sum(a.probs, av)) / (1.0 - av))


def kapur_entropy(a: Distribution, alpha: float, beta: float) -> float:
    """Two-parameter Kapur entropy in nats."""
    av = _check_alpha(alpha)
    bv = _check_alpha(beta)
    if av == bv:
        raise ParamsEqual(f"alpha and beta must differ, both are {alpha!r}")
    ratio = _power_sum(a.probs, av) / _power_sum(a.probs, bv)
    return float(math.log(ratio) / (bv - av))


def exp_entropy(a: Distribution, kind: str, alpha: float | None = None, beta: float | None = None) -> float:
    """Exponential of the Shannon, Renyi, or Kapur entropy.

    Every kind maps the uniform n-point distribution to exactly n, the
    effective size of the sample space.
    """
    if kind == "shannon":
        return math.exp(shannon_entropy(a))
    if kind == "renyi":
        if alpha is None:
            raise AlphaOutOfRange("kind 'renyi' requires alpha")
        return math.exp(renyi_entropy(a, alpha))
    if kind == "kapur":
        if alpha is None or beta is None:
            raise AlphaOutOfRange("kind 'kapur' requires alpha and beta")
        return math.exp(kapur_entropy(a, alpha, beta))
    raise ValueError(f"unknown kind {kind!r}")


def exp_thc_entropy(a: Distribution, alpha: float) -> float:
    """Exponential type-alpha entropy (1 - e**(sum(p**alpha) - 1)) / (alpha - 1).

    At alpha = 1 (and within ``ALPHA_ONE_WINDOW`` of it, where the quotient
    cancels catastrophically) the Shannon value is returned instead.
    """
    av = _check_alpha(alpha)
    if abs(av - 1.0) < ALPHA_ONE_WINDOW:
        return shannon_entropy(a)
    x = _power_sum(a.probs, av) - 1.0
    return float(-np.expm1(x) / (av - 1.0))


def exp_thc_grid(probs: np.ndarray, alphas: np.ndarray) -> np.ndarray:
    """``exp_thc_entropy`` of one probability vector over a grid of alphas.

    Produces bit-identical values to the scalar function, including the
    near-1 Shannon dispatch, while sharing the power table across the grid.
    The input vector is trusted to be a valid simplex point.
    """
    p = np.asarray(probs, dtype=float)
    al = np.asarray(alphas, dtype=float)
    s = np.power(p[None, :], al[:, None]).sum(axis=1)
    near_one = np.abs(al - 1.0) < ALPHA_ONE_WINDOW
    den = np.where(near_one, 1.0, al - 1.0)
    out = -np.expm1(s - 1.0) / den
    if near_one.any():
        nz = p[p > 0.0]
        out = np.where(near_one, float(-(nz * np.log(nz)).sum()), out)
    return out


def exp_thc_max(n: int, alpha: float) -> float:
    """Exponential type-alpha entropy of the uniform n-point distribution.

    Closed form (1 - e**(n**(1 - alpha) - 1)) / (alpha - 1), which bounds the
    measure over the whole simplex; ln n at alpha = 1.
    """
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    av = _check_alpha(alpha)
    if abs(av - 1.0) < ALPHA_ONE_WINDOW:
        return math.log(n)
    x = float(n) ** (1.0 - av) - 1.0
    return float(-np.expm1(x) / (av - 1.0))
