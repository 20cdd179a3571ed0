"""Density operators and their exponential type-alpha entropies.

Every measure here is a function of the eigenvalue spectrum alone, so all
operations diagonalize once at construction time and reuse the cached
spectrum.
"""

from __future__ import annotations

import math
from dataclasses import replace

import numpy as np

from .classical import ALPHA_ONE_WINDOW
from .errors import AlphaOutOfRange, NotHermitian, NotPositive, TraceNotOne
from .linalg import (
    HERMITIAN_TOL,
    PSD_TOL,
    TRACE_TOL,
    Spectrum,
    _as_square_matrix,
    _hermitian_defect,
    hermitian_eig,
    trace_power,
)

# Eigenvalues at or below RANK_TOL_FACTOR * max(1, largest) count as zero,
# both for rank counting and inside the entropy functionals.
RANK_TOL_FACTOR = 1e-10

__all__ = [
    "DensityOperator",
    "RANK_TOL_FACTOR",
    "exp_qthc",
    "exp_qthc_bound",
    "rank",
    "von_neumann",
]


class DensityOperator:
    """Hermitian, positive semidefinite, unit-trace matrix with cached spectrum.

    Construction validates all three axioms within 1e-9 and performs the one
    eigendecomposition every measure shares. Instances are immutable.
    """

    __slots__ = ("_matrix", "_spectrum")

    def __init__(self, matrix) -> None:
        a = _as_square_matrix(matrix)
        defect = _hermitian_defect(a)
        if defect > HERMITIAN_TOL:
            raise NotHermitian(f"max |m - m^H| entry is {defect:.3e}")
        tr = complex(np.trace(a))
        if abs(tr - 1.0) > TRACE_TOL:
            raise TraceNotOne(f"trace is {tr.real!r}, not 1")
        spectrum = hermitian_eig(a)
        low = float(spectrum.eigenvalues.min())
        if low < -PSD_TOL:
            raise NotPositive(f"smallest eigenvalue {low:.3e} is below -{PSD_TOL}")
        a = a.copy()
        a.setflags(write=False)
        self._matrix = a
        self._spectrum = spectrum

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def spectrum(self) -> Spectrum:
        return self._spectrum

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    def __repr__(self) -> str:
        return f"DensityOperator(dim={self.dim})"


def _rank_threshold(eigenvalues: np.ndarray) -> float:
    return RANK_TOL_FACTOR * max(1.0, float(eigenvalues.max()))


def _support_spectrum(s: Spectrum) -> Spectrum:
    """Spectrum restricted to its numerical support, renormalized to trace 1.

    Numerically null eigenvalues of an exactly singular state carry noise of
    order 1e-16; raising that noise to a fractional power would swamp the
    entropy of a low-rank state, so everything below the rank threshold is
    treated as the zero it represents. Renormalizing the survivors puts the
    spectrum exactly on the probability simplex, which makes pure states
    evaluate to exactly zero under every measure.
    """
    w = s.eigenvalues
    cleaned = np.where(w > _rank_threshold(w), w, 0.0)
    return replace(s, eigenvalues=cleaned / cleaned.sum())


def von_neumann(rho: DensityOperator) -> float:
    """Von Neumann entropy -tr(rho ln rho) in nats, from the spectrum."""
    w = _support_spectrum(rho.spectrum).eigenvalues
    nz = w[w > 0.0]
    return float(-(nz * np.log(nz)).sum())


def exp_qthc(rho: DensityOperator, alpha: float) -> float:
    """Exponential type-alpha entropy (1 - e**(tr(rho**alpha) - 1)) / (alpha - 1).

    Computed from the eigenvalue spectrum, restricted to its numerical
    support; equals the classical measure of the eigenvalue distribution.
    Within ``ALPHA_ONE_WINDOW`` of alpha = 1 the von Neumann value is
    returned, the limit of the quotient.
    """
    av = float(alpha)
    if not math.isfinite(av) or av <= 0.0:
        raise AlphaOutOfRange(f"alpha must be a positive real, got {alpha!r}")
    if abs(av - 1.0) < ALPHA_ONE_WINDOW:
        return von_neumann(rho)
    x = trace_power(_support_spectrum(rho.spectrum), av) - 1.0
    return float(-np.expm1(x) / (av - 1.0))


def rank(rho: DensityOperator) -> int:
    """Number of eigenvalues above the scale-aware zero threshold."""
    w = rho.spectrum.eigenvalues
    return int((w > _rank_threshold(w)).sum())


def exp_qthc_bound(r: int, alpha: float) -> float:
    """Largest exponential type-alpha entropy of any state of rank r.

    Attained by the equidistribution with r equal eigenvalues 1/r; the
    closed form is (1 - e**(r**(1 - alpha) - 1)) / (alpha - 1), and ln r at
    alpha = 1.
    """
    if int(r) != r or r < 1:
        raise ValueError(f"rank must be a positive integer, got {r!r}")
    av = float(alpha)
    if not math.isfinite(av) or av <= 0.0:
        raise AlphaOutOfRange(f"alpha must be a positive real, got {alpha!r}")
    if abs(av - 1.0) < ALPHA_ONE_WINDOW:
        return math.log(r)
    x = float(r) ** (1.0 - av) - 1.0
    return float(-np.expm1(x) / (av - 1.0))
