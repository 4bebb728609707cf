"""Symmetric-tridiagonal eigensolves and Gauss-Jacobi quadrature generation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import EigenConvergenceError
from .specfn import JacobiBasis, jacobi_coeffs

__all__ = ["TridiagonalSym", "QuadratureRule", "eig_symtridiag", "gauss_jacobi"]

_SIGN_FLOOR = 1e-300


@dataclass(frozen=True)
class TridiagonalSym:
    """Symmetric tridiagonal matrix stored as its diagonal and one off-diagonal."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        diag = np.asarray(self.diag, dtype=float)
        off = np.asarray(self.offdiag, dtype=float)
        if diag.ndim != 1 or diag.size == 0:
            raise ValueError("diag must be a non-empty 1-d array")
        if off.shape != (diag.size - 1,):
            raise ValueError(
                f"offdiag must have length {diag.size - 1}, got {off.shape}"
            )
        if not (np.all(np.isfinite(diag)) and np.all(np.isfinite(off))):
            raise ValueError("matrix entries must be finite")
        diag.setflags(write=False)
        off.setflags(write=False)
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", off)

    @property
    def size(self) -> int:
        return self.diag.size


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Jacobi nodes and weights for weight (1-eta)^alpha (1+eta)^beta."""

    nodes: np.ndarray
    weights: np.ndarray
    alpha: float
    beta: float

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        if nodes.shape != weights.shape or nodes.ndim != 1 or nodes.size == 0:
            raise ValueError("nodes and weights must be matching non-empty 1-d arrays")
        if np.any(nodes <= -1.0) or np.any(nodes >= 1.0):
            raise ValueError("nodes must lie strictly inside (-1, 1)")
        if np.any(np.diff(nodes) <= 0.0):
            raise ValueError("nodes must be strictly increasing")
        if np.any(weights <= 0.0):
            raise ValueError("weights must be positive")
        nodes.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    def integrate(self, values) -> float:
        """Contract sampled integrand values against the weights."""
        return float(np.asarray(values, dtype=float) @ self.weights)


def eig_symtridiag(tri: TridiagonalSym) -> tuple[np.ndarray, np.ndarray]:
    """All eigenpairs of a symmetric tridiagonal matrix.

    Eigenvalues are returned ascending; eigenvectors are the columns of an
    orthogonal matrix with the deterministic sign convention that the first
    component of magnitude above 1e-300 is positive.  Convergence failure in
    the underlying LAPACK routine is reported as EigenConvergenceError.
    """
    try:
        values, vectors = scipy.linalg.eigh_tridiagonal(tri.diag, tri.offdiag)
    except (np.linalg.LinAlgError, scipy.linalg.LinAlgError) as exc:
        raise EigenConvergenceError(
            f"tridiagonal eigensolve of size {tri.size} failed: {exc}"
        ) from exc
    for i in range(vectors.shape[1]):
        col = vectors[:, i]
        lead = col[np.abs(col) > _SIGN_FLOOR]
        if lead.size and lead[0] < 0.0:
            vectors[:, i] = -col
    return values, vectors


def gauss_jacobi(alpha: float, beta: float, m: int) -> QuadratureRule:
    """m-point Gauss-Jacobi rule by Golub-Welsch on the recurrence matrix.

    Exact for polynomials of degree <= 2m-1 against (1-eta)^alpha (1+eta)^beta;
    the weights are the squared first eigenvector components scaled by the
    zeroth moment 2^(alpha+beta+1) B(alpha+1, beta+1).
    """
    if m < 1:
        raise ValueError(f"node count must be at least 1, got {m}")
    basis = JacobiBasis(alpha, beta)
    diag = np.empty(m)
    off = np.empty(m - 1)
    for j in range(m):
        a_j, b_j, _ = jacobi_coeffs(basis, j)
        diag[j] = b_j
        if j < m - 1:
            off[j] = a_j
    nodes, vectors = eig_symtridiag(TridiagonalSym(diag, off))
    mu0 = math.exp(
        (alpha + beta + 1.0) * math.log(2.0)
        + math.lgamma(alpha + 1.0) + math.lgamma(beta + 1.0)
        - math.lgamma(alpha + beta + 2.0)
    )
    weights = mu0 * vectors[0, :] ** 2
    return QuadratureRule(nodes=nodes, weights=weights, alpha=alpha, beta=beta)
