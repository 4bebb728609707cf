"""Radial eigensolver for prolate spheroidal wave functions on the unit ball.

A radial eigenfunction of angular degree n in dimension d is expanded in the
orthonormalized Jacobi family with parameters (alpha, beta_n),
beta_n = n + d/2 - 1,

    phi_k(eta; c) = sum_j beta_j P~_j(eta),        eta = 2 r^2 - 1,

which turns the Sturm-Liouville eigenproblem into a symmetric tridiagonal
matrix eigenproblem with entries

    A[j, j]   = gamma(n+2j) + (b_j + 1) c^2 / 2,
    A[j, j+1] = a_j c^2 / 2,

where gamma(m) = m (m + 2 alpha + d) and a_j, b_j are the Jacobi recurrence
coefficients.  The k-th smallest eigenvalue is the Sturm-Liouville eigenvalue
chi of the k-th radial mode and the eigenvector holds its expansion
coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateEndpoint, NonPositiveLambda, TruncationNotConverged
from .linalg import TridiagonalSym, eig_symtridiag
from .specfn import JacobiBasis, clenshaw, jacobi_coeffs

__all__ = [
    "PswfParams",
    "RadialPswf",
    "gamma_coef",
    "truncation_size",
    "build_matrix",
    "solve_pswfs",
    "lambda_eigenvalue",
    "mu_eigenvalue",
    "perturbation_coeffs",
    "chi_bounds",
]

_TRUNCATION_RTOL = 1e-13
_SIGN_PIVOT_FLOOR = 1e-12
_ENDPOINT_FLOOR = 1e-250


def _validate_family(d: int, alpha: float, c: float, n: int) -> None:
    if not (isinstance(d, (int, np.integer)) and d >= 1):
        raise ValueError(f"dimension must be an integer >= 1, got {d}")
    if not alpha > -1.0:
        raise ValueError(f"alpha must exceed -1, got {alpha}")
    if not c >= 0.0:
        raise ValueError(f"bandwidth c must be non-negative, got {c}")
    if not (isinstance(n, (int, np.integer)) and n >= 0):
        raise ValueError(f"angular degree n must be a non-negative integer, got {n}")
    if d == 1 and n > 1:
        raise ValueError(f"for d=1 only n in {{0, 1}} exists, got n={n}")


@dataclass(frozen=True)
class PswfParams:
    """Identifies one radial eigenfunction: dimension d, weight exponent
    alpha > -1, bandwidth c >= 0, angular degree n and radial index k."""

    d: int
    alpha: float
    c: float
    n: int
    k: int

    def __post_init__(self):
        _validate_family(self.d, self.alpha, self.c, self.n)
        if not (isinstance(self.k, (int, np.integer)) and self.k >= 0):
            raise ValueError(f"radial index k must be a non-negative integer, got {self.k}")

    @property
    def beta_n(self) -> float:
        """Jacobi parameter n + d/2 - 1 of the radial expansion basis."""
        return self.n + self.d / 2.0 - 1.0

    @property
    def basis(self) -> JacobiBasis:
        return JacobiBasis(self.alpha, self.beta_n)


@dataclass(frozen=True)
class RadialPswf:
    """A solved radial eigenfunction: eigenvalue chi and the unit-norm
    expansion coefficients beta_0..beta_K in the (alpha, beta_n) Jacobi
    family, with the sign fixed so that coeffs[k] > 0 (falling back to a
    positive largest-magnitude coefficient when coeffs[k] is negligible)."""

    params: PswfParams
    chi: float
    coeffs: np.ndarray
    truncation: int

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs, dtype=float)
        if coeffs.shape != (self.truncation + 1,):
            raise ValueError(
                f"coefficient vector must have length K+1={self.truncation + 1}, "
                f"got {coeffs.shape}"
            )
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def basis(self) -> JacobiBasis:
        return self.params.basis


def gamma_coef(m: int, alpha: float, d: int) -> float:
    """Sturm-Liouville eigenvalue m (m + 2 alpha + d) of the degree-m ball
    polynomial, the c = 0 limit of chi."""
    if m < 0:
        raise ValueError(f"degree m must be non-negative, got {m}")
    return m * (m + 2.0 * alpha + d)


def truncation_size(d: int, alpha: float, n: int, k_max: int) -> int:
    """Expansion truncation K for resolving radial indices up to k_max.

    With N = n + 2 k_max the cut-off is M = ceil(2N + 2 alpha) + 30 expansion
    degrees, i.e. K = ceil((M - n)/2) Jacobi coefficients.
    """
    _validate_family(d, alpha, 0.0, n)
    if k_max < 0:
        raise ValueError(f"k_max must be non-negative, got {k_max}")
    bandlimit = n + 2 * k_max
    cutoff = math.ceil(2 * bandlimit + 2 * alpha) + 30
    return math.ceil((cutoff - n) / 2)


def build_matrix(d: int, alpha: float, c: float, n: int, K: int) -> TridiagonalSym:
    """(K+1) x (K+1) tridiagonal matrix of the radial eigenproblem."""
    _validate_family(d, alpha, c, n)
    if K < 0:
        raise ValueError(f"truncation K must be non-negative, got {K}")
    basis = JacobiBasis(alpha, n + d / 2.0 - 1.0)
    half_c2 = 0.5 * c * c
    diag = np.empty(K + 1)
    off = np.empty(K)
    for j in range(K + 1):
        a_j, b_j, _ = jacobi_coeffs(basis, j)
        diag[j] = gamma_coef(n + 2 * j, alpha, d) + (b_j + 1.0) * half_c2
        if j < K:
            off[j] = a_j * half_c2
    return TridiagonalSym(diag, off)


def _apply_sign_rule(coeffs: np.ndarray, k: int) -> np.ndarray:
    pivot = coeffs[k]
    if abs(pivot) >= _SIGN_PIVOT_FLOOR:
        return -coeffs if pivot < 0.0 else coeffs
    if coeffs[int(np.argmax(np.abs(coeffs)))] < 0.0:
        return -coeffs
    return coeffs


def solve_pswfs(d: int, alpha: float, c: float, n: int, k_max: int) -> list[RadialPswf]:
    """Solve the radial eigenproblem for k = 0..k_max.

    The matrix is built at the truncation_size cut-off and the k_max+1
    smallest eigenpairs are returned in ascending chi.  A convergence guard
    re-solves at twice the truncation and requires each returned chi to move
    by at most 1e-13 relative, raising TruncationNotConverged otherwise.
    """
    _validate_family(d, alpha, c, n)
    if k_max < 0:
        raise ValueError(f"k_max must be non-negative, got {k_max}")
    K = truncation_size(d, alpha, n, k_max)
    values, vectors = eig_symtridiag(build_matrix(d, alpha, c, n, K))
    values_fine, _ = eig_symtridiag(build_matrix(d, alpha, c, n, 2 * K))
    for k in range(k_max + 1):
        a, b = values[k], values_fine[k]
        scale = max(abs(a), abs(b))
        if scale > 0.0 and abs(a - b) > _TRUNCATION_RTOL * scale:
            raise TruncationNotConverged(
                f"chi for (d={d}, alpha={alpha}, c={c}, n={n}, k={k}) moved by "
                f"{abs(a - b) / scale:.3e} relative when doubling K={K}"
            )
    out = []
    for k in range(k_max + 1):
        coeffs = _apply_sign_rule(vectors[:, k].copy(), k)
        out.append(
            RadialPswf(
                params=PswfParams(d=d, alpha=alpha, c=c, n=n, k=k),
                chi=float(values[k]),
                coeffs=coeffs,
                truncation=K,
            )
        )
    return out


def lambda_eigenvalue(pswf: RadialPswf) -> float:
    """Eigenvalue lambda > 0 of the radial mode under the finite Fourier
    transform, from the endpoint formula

        lambda = (-1)^k * pi^(d/2) c^n sqrt(Gamma(alpha+1))
                 / (2^(n-1/2) sqrt(Gamma(n+d/2) Gamma(alpha+n+d/2+1)))
                 * beta_0 / phi(-1).

    The (-1)^k factor cancels the endpoint sign of the k-th mode under the
    coeffs[k] > 0 convention, so the result is positive for every k; the
    ratio beta_0/phi(-1) makes the value invariant under rescaling of the
    coefficient vector.  Requires c > 0.
    """
    p = pswf.params
    if not p.c > 0.0:
        raise ValueError("lambda is computed for c > 0 only")
    phi_left = clenshaw(pswf.basis, pswf.coeffs, -1.0)
    if abs(phi_left) < _ENDPOINT_FLOOR:
        raise DegenerateEndpoint(
            f"phi(-1) = {phi_left:.3e} underflowed for params {p}"
        )
    log_pref = (
        0.5 * p.d * math.log(math.pi)
        + p.n * math.log(p.c)
        + 0.5 * math.lgamma(p.alpha + 1.0)
        - (p.n - 0.5) * math.log(2.0)
        - 0.5 * (math.lgamma(p.n + p.d / 2.0) + math.lgamma(p.alpha + p.n + p.d / 2.0 + 1.0))
    )
    parity = -1.0 if p.k % 2 else 1.0
    lam = parity * math.exp(log_pref) * pswf.coeffs[0] / phi_left
    if not lam > 0.0:
        raise NonPositiveLambda(
            f"lambda = {lam:.6e} for params {p}; sign convention violated"
        )
    return lam


def mu_eigenvalue(lam: float) -> float:
    """Eigenvalue of the composed (adjoint times forward) Fourier operator."""
    return lam * lam


def perturbation_coeffs(d: int, alpha: float, n: int, k: int) -> tuple[float, float, float]:
    """Leading small-c perturbation coefficients (d_k1, B_minus, B_plus).

    For c -> 0 the eigenvalue behaves as chi = gamma(n+2k) + d_k1 c^2 + O(c^4)
    and the eigenfunction picks up c^2 (B_minus P~_{k-1} + B_plus P~_{k+1}).
    """
    _validate_family(d, alpha, 0.0, n)
    if k < 0:
        raise ValueError(f"radial index k must be non-negative, got {k}")
    basis = JacobiBasis(alpha, n + d / 2.0 - 1.0)
    s = alpha + (n + d / 2.0 - 1.0)
    a_k, b_k, _ = jacobi_coeffs(basis, k)
    d_k1 = 0.5 * (b_k + 1.0)
    b_plus = -a_k / (8.0 * (2 * k + s + 2.0))
    if k == 0:
        b_minus = 0.0
    else:
        a_km1, _, _ = jacobi_coeffs(basis, k - 1)
        b_minus = a_km1 / (8.0 * (2 * k + s))
    return d_k1, b_minus, b_plus


def chi_bounds(params: PswfParams) -> tuple[float, float]:
    """Strict enclosure gamma < chi < gamma + c^2 of the Sturm-Liouville
    eigenvalue, with gamma = gamma_coef(n+2k).  Requires c > 0."""
    if not params.c > 0.0:
        raise ValueError("chi bounds hold for c > 0 only")
    lower = gamma_coef(params.n + 2 * params.k, params.alpha, params.d)
    return lower, lower + params.c ** 2
