"""Projective measurements and pure-state ensembles of a density operator."""

from __future__ import annotations

import numpy as np

from .errors import (
    DimensionMismatch,
    InvalidDistribution,
    NotOrthonormal,
    NotUnitary,
)
from .linalg import _as_square_matrix, _hermitian_defect
from .quantum import DensityOperator

PROJECTOR_TOL = 1e-9
UNITARY_TOL = 1e-9
STATE_NORM_TOL = 1e-9
WEIGHT_SUM_TOL = 1e-9
# Ensemble members lighter than this carry no numerical weight and are dropped.
WEIGHT_DROP_TOL = 1e-14
RECONSTRUCTION_TOL = 1e-8

__all__ = [
    "Ensemble",
    "ProjectorSet",
    "ensemble_from_unitary",
    "mix_ensemble",
    "projective_measure",
    "projectors_from_basis",
]


class ProjectorSet:
    """Complete family of mutually orthogonal Hermitian projectors.

    Validates, within ``PROJECTOR_TOL``: hermiticity, idempotency P @ P = P,
    pairwise orthogonality P_i @ P_j = 0, and completeness sum(P) = I.
    """

    __slots__ = ("_dim", "_projectors")

    def __init__(self, projectors) -> None:
        mats = tuple(_as_square_matrix(p) for p in projectors)
        if not mats:
            raise ValueError("projector set must not be empty")
        n = mats[0].shape[0]
        for i, p in enumerate(mats):
            if p.shape[0] != n:
                raise DimensionMismatch(
                    f"projector {i} is {p.shape[0]}x{p.shape[0]}, expected {n}x{n}"
                )
            if _hermitian_defect(p) > PROJECTOR_TOL:
                raise ValueError(f"projector {i} is not Hermitian")
            if np.abs(p @ p - p).max() > PROJECTOR_TOL:
                raise ValueError(f"projector {i} is not idempotent")
        for i in range(len(mats)):
            for j in range(i + 1, len(mats)):
                if np.abs(mats[i] @ mats[j]).max() > PROJECTOR_TOL:
                    raise ValueError(f"projectors {i} and {j} are not orthogonal")
        total = sum(mats[1:], start=mats[0].copy())
        if np.abs(total - np.eye(n)).max() > PROJECTOR_TOL:
            raise ValueError("projectors do not sum to the identity")
        frozen = []
        for p in mats:
            q = p.copy()
            q.setflags(write=False)
            frozen.append(q)
        self._dim = n
        self._projectors = tuple(frozen)

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def projectors(self) -> tuple[np.ndarray, ...]:
        return self._projectors

    def __len__(self) -> int:
        return len(self._projectors)

    def __repr__(self) -> str:
        return f"ProjectorSet(dim={self._dim}, size={len(self._projectors)})"


def projectors_from_basis(basis) -> ProjectorSet:
    """Rank-one projectors onto the columns of an orthonormal basis matrix."""
    u = _as_square_matrix(basis)
    n = u.shape[0]
    gram_defect = float(np.abs(u.conj().T @ u - np.eye(n)).max())
    if gram_defect > PROJECTOR_TOL:
        raise NotOrthonormal(f"max |u^H u - I| entry is {gram_defect:.3e}")
    projs = [np.outer(u[:, j], u[:, j].conj()) for j in range(n)]
    return ProjectorSet(projs)


def projective_measure(rho: DensityOperator, pset: ProjectorSet) -> DensityOperator:
    """Post-measurement state sum(P @ rho @ P) over the projector family."""
    if pset.dim != rho.dim:
        raise DimensionMismatch(
            f"projectors act on dim {pset.dim}, state has dim {rho.dim}"
        )
    m = rho.matrix
    out = np.zeros_like(m)
    for p in pset.projectors:
        out += p @ m @ p
    out = (out + out.conj().T) / 2.0
    return DensityOperator(out)


class Ensemble:
    """Weighted family of unit vectors; weights form a probability vector."""

    __slots__ = ("_weights", "_states")

    def __init__(self, weights, states) -> None:
        w = np.array(weights, dtype=np.float64, copy=True)
        if w.ndim != 1 or w.size < 1:
            raise InvalidDistribution("weights must be a non-empty 1-d array")
        if not np.all(np.isfinite(w)) or w.min() < 0.0:
            raise InvalidDistribution("weights must be finite and non-negative")
        total = float(w.sum())
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise InvalidDistribution(f"weights sum to {total!r}, not 1")
        s = np.array(states, dtype=np.complex128, copy=True)
        if s.ndim != 2 or s.shape[1] != w.size:
            raise DimensionMismatch(
                f"states must be a matrix with one column per weight, got {s.shape}"
            )
        if not np.all(np.isfinite(s.real)) or not np.all(np.isfinite(s.imag)):
            raise ValueError("states must be finite")
        norms = np.linalg.norm(s, axis=0)
        worst = float(np.abs(norms - 1.0).max())
        if worst > STATE_NORM_TOL:
            raise ValueError(f"state columns must be unit vectors, worst defect {worst:.3e}")
        w.setflags(write=False)
        s.setflags(write=False)
        self._weights = w
        self._states = s

    @property
    def weights(self) -> np.ndarray:
        return self._weights

    @property
    def states(self) -> np.ndarray:
        return self._states

    @property
    def dim(self) -> int:
        return self._states.shape[0]

    @property
    def size(self) -> int:
        return self._weights.size

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"Ensemble(dim={self.dim}, size={self.size})"


def ensemble_from_unitary(rho: DensityOperator, u) -> Ensemble:
    """Pure-state ensemble of rho generated by a unitary mixing matrix.

    Member i is proportional to sum_j u[i, j] * sqrt(lambda_j) * e_j over the
    spectral decomposition of rho; its weight is sum_j |u[i, j]|**2 lambda_j.
    Members below ``WEIGHT_DROP_TOL`` are dropped. The construction is checked
    by re-mixing: the ensemble must reproduce rho to ``RECONSTRUCTION_TOL``.
    """
    um = _as_square_matrix(u)
    if um.shape[0] != rho.dim:
        raise DimensionMismatch(
            f"mixing matrix is {um.shape[0]}x{um.shape[0]}, state has dim {rho.dim}"
        )
    n = um.shape[0]
    defect = float(np.abs(um @ um.conj().T - np.eye(n)).max())
    if defect > UNITARY_TOL:
        raise NotUnitary(f"max |u u^H - I| entry is {defect:.3e}")
    w = rho.spectrum.eigenvalues
    w = np.where(w > 0.0, w, 0.0)
    b = rho.spectrum.eigenvectors * np.sqrt(w)[None, :]
    raw = b @ um.T
    rec_defect = float(np.linalg.norm(raw @ raw.conj().T - rho.matrix))
    if rec_defect > RECONSTRUCTION_TOL:
        raise ValueError(f"ensemble fails to reconstruct the state ({rec_defect:.3e})")
    p = (np.abs(um) ** 2) @ w
    keep = p >= WEIGHT_DROP_TOL
    p = p[keep]
    states = raw[:, keep] / np.sqrt(p)[None, :]
    return Ensemble(p, states)


def mix_ensemble(ens: Ensemble) -> DensityOperator:
    """Density operator sum_i w_i |psi_i><psi_i| of an ensemble."""
    s = ens.states
    m = (s * ens.weights[None, :]) @ s.conj().T
    m = (m + m.conj().T) / 2.0
    return DensityOperator(m)
