"""Dense complex Hermitian kernels and random matrix sampling.

The eigensolver is a cyclic complex Jacobi iteration, which is simple,
robust, and accurate at the small dimensions this package targets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .classical import sample_simplex
from .errors import (
    AlphaOutOfRange,
    NegativeEigenvalue,
    NoConvergence,
    NotHermitian,
    NotPositive,
    TraceNotOne,
)

HERMITIAN_TOL = 1e-9
PSD_TOL = 1e-9
TRACE_TOL = 1e-9
CONVERGENCE_FACTOR = 1e-12
MAX_SWEEPS = 100
DIM_CAP = 64

DENSITY_METHODS = ("ginibre", "diag_mixture", "pure")

__all__ = [
    "DENSITY_METHODS",
    "DIM_CAP",
    "HERMITIAN_TOL",
    "PSD_TOL",
    "Spectrum",
    "hermitian_eig",
    "sample_density",
    "sample_haar_unitary",
    "trace_power",
    "validate_density",
]


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigendecomposition of a Hermitian matrix.

    ``eigenvalues`` are real and sorted descending; column j of
    ``eigenvectors`` is the unit eigenvector paired with ``eigenvalues[j]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenvalues.size


def _as_square_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ValueError("matrix entries must be finite")
    return a


def _hermitian_defect(a: np.ndarray) -> float:
    return float(np.abs(a - a.conj().T).max())


def hermitian_eig(m, max_sweeps: int = MAX_SWEEPS, dim_cap: int = DIM_CAP) -> Spectrum:
    """Diagonalize a Hermitian matrix with cyclic complex Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius norm drops below
    1e-12 * max(1, ||m||_F); the norm is accumulated directly from the
    off-diagonal entries because the ||m||**2 - ||diag||**2 form cancels
    catastrophically near convergence.
    """
    a = _as_square_matrix(m)
    n = a.shape[0]
    if n > dim_cap:
        raise ValueError(f"dimension {n} exceeds the cap of {dim_cap}")
    if _hermitian_defect(a) > HERMITIAN_TOL:
        raise NotHermitian(f"max |m - m^H| entry is {_hermitian_defect(a):.3e}")
    a = (a + a.conj().T) / 2.0
    v = np.eye(n, dtype=np.complex128)
    if n == 1:
        w = np.array([a[0, 0].real])
        w.setflags(write=False)
        v.setflags(write=False)
        return Spectrum(w, v)
    threshold = CONVERGENCE_FACTOR * max(1.0, float(np.linalg.norm(a)))
    off_mask = ~np.eye(n, dtype=bool)
    for _ in range(max_sweeps):
        if float(np.linalg.norm(a[off_mask])) < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                g = abs(apq)
                if g == 0.0:
                    continue
                phase = apq / g
                tau = (a[p, p].real - a[q, q].real) / (2.0 * g)
                if tau == 0.0:
                    t = 1.0
                elif abs(tau) > 1e150:
                    # tau * tau would overflow; the small root tends to 1/(2 tau).
                    t = 1.0 / (2.0 * tau)
                else:
                    t = np.sign(tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                r = np.array([[c, -s * phase], [s * np.conj(phase), c]])
                a[:, [p, q]] = a[:, [p, q]] @ r
                a[[p, q], :] = r.conj().T @ a[[p, q], :]
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                v[:, [p, q]] = v[:, [p, q]] @ r
    else:
        raise NoConvergence(f"off-diagonal norm still above {threshold:.3e} after {max_sweeps} sweeps")
    w = np.diagonal(a).real.copy()
    order = np.argsort(-w, kind="stable")
    w = w[order]
    v = np.ascontiguousarray(v[:, order])
    w.setflags(write=False)
    v.setflags(write=False)
    return Spectrum(w, v)


def trace_power(s: Spectrum, alpha: float) -> float:
    """Sum of eigenvalues raised to alpha, with the 0 ** alpha = 0 convention.

    Eigenvalues in [-PSD_TOL, 0) count as exact zeros; anything lower is an
    error rather than a silent complex power.
    """
    a = float(alpha)
    if not math.isfinite(a) or a <= 0.0:
        raise AlphaOutOfRange(f"alpha must be a positive real, got {alpha!r}")
    w = s.eigenvalues
    low = float(w.min())
    if low < -PSD_TOL:
        raise NegativeEigenvalue(f"eigenvalue {low:.3e} is below -{PSD_TOL}")
    clamped = np.where(w < 0.0, 0.0, w)
    return float(np.power(clamped, a).sum())


def sample_haar_unitary(n: int, seed) -> np.ndarray:
    """Haar-distributed n x n unitary matrix.

    QR-factorizes a complex standard Gaussian matrix and rescales each column
    of Q by the phase of the matching diagonal entry of R, which removes the
    QR sign ambiguity and yields exact Haar measure. ``seed`` may be an int
    or a ``numpy.random.Generator``.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    rng = np.random.default_rng(seed)
    g = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2.0)
    q, r = np.linalg.qr(g)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def sample_density(n: int, seed, method: str = "ginibre") -> np.ndarray:
    """Random n x n density matrix.

    ``ginibre`` draws G G^H / tr(G G^H) from a complex Gaussian G, which is
    full rank almost surely; ``diag_mixture`` places a uniform simplex sample
    on the diagonal; ``pure`` projects onto one random unit vector.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if method not in DENSITY_METHODS:
        raise ValueError(f"unknown method {method!r}, expected one of {DENSITY_METHODS}")
    rng = np.random.default_rng(seed)
    if method == "ginibre":
        g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        m = g @ g.conj().T
        return m / np.trace(m).real
    if method == "diag_mixture":
        return np.diag(sample_simplex(n, rng)).astype(np.complex128)
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    v /= np.linalg.norm(v)
    return np.outer(v, v.conj())


def validate_density(m) -> np.ndarray:
    """Return ``m`` as a complex array if it is a valid density matrix.

    Checks Hermiticity, unit trace, and positive semidefiniteness (via the
    eigenvalues), each within 1e-9, and names the violated axiom on failure.
    """
    a = _as_square_matrix(m)
    defect = _hermitian_defect(a)
    if defect > HERMITIAN_TOL:
        raise NotHermitian(f"max |m - m^H| entry is {defect:.3e}")
    tr = complex(np.trace(a))
    if abs(tr - 1.0) > TRACE_TOL:
        raise TraceNotOne(f"trace is {tr.real!r}, not 1")
    low = float(hermitian_eig(a).eigenvalues.min())
    if low < -PSD_TOL:
        raise NotPositive(f"smallest eigenvalue {low:.3e} is below -{PSD_TOL}")
    return a
