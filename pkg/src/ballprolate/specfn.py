"""Scalar special functions: orthonormalized Jacobi polynomials, scaled Bessel
functions of the first kind, and the log-gamma function.

The Jacobi polynomials P~_j used throughout the package carry the normalization

    int_{-1}^{1} P~_n(eta) P~_m(eta) (1-eta)^alpha (1+eta)^beta d(eta)
        = 2^(alpha+beta+2) delta_nm,

and satisfy the three-term recurrence

    eta P~_j = a_j P~_{j+1} + b_j P~_j + a_{j-1} P~_{j-1},

with P~_0 = 1/h_0.  All gamma-function ratios are evaluated in log space so
that large indices and half-integer parameters do not overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "JacobiBasis",
    "jacobi_coeffs",
    "jacobi_eval",
    "clenshaw",
    "bessel_j_scaled",
    "log_gamma",
]


@dataclass(frozen=True)
class JacobiBasis:
    """Weight exponent pair (alpha, beta), both > -1, of a Jacobi family."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > -1.0 and self.beta > -1.0):
            raise ValueError(
                f"Jacobi exponents must exceed -1, got alpha={self.alpha}, beta={self.beta}"
            )


def jacobi_coeffs(basis: JacobiBasis, j: int) -> tuple[float, float, float]:
    """Recurrence coefficients (a_j, b_j, h_j) of the orthonormalized family.

    b_0 is evaluated as (beta-alpha)/(alpha+beta+2), the limit of the generic
    expression, which is 0/0 when alpha+beta = 0.
    """
    if j < 0:
        raise ValueError(f"index j must be non-negative, got {j}")
    al, be = basis.alpha, basis.beta
    s = al + be
    if j == 0:
        # Reduced j = 0 forms: the generic expressions are 0/0 at s = -1
        # (e.g. the Chebyshev pair alpha = beta = -1/2) and at s = 0 for b_0.
        b = (be - al) / (s + 2.0)
        a = math.sqrt(4.0 * (al + 1) * (be + 1) / ((s + 2.0) ** 2 * (s + 3.0)))
        h = math.exp(
            0.5 * (math.lgamma(al + 1) + math.lgamma(be + 1) - math.lgamma(s + 2.0))
        ) / math.sqrt(2.0)
        return a, b, h
    b = (be * be - al * al) / ((2 * j + s) * (2 * j + s + 2.0))
    a = math.sqrt(
        4.0 * (j + 1) * (j + al + 1) * (j + be + 1) * (j + s + 1)
        / ((2 * j + s + 1) * (2 * j + s + 2) ** 2 * (2 * j + s + 3))
    )
    h = math.exp(
        0.5 * (math.lgamma(j + al + 1) + math.lgamma(j + be + 1)
               - math.lgamma(j + 1) - math.lgamma(j + s + 1))
    ) / math.sqrt(2.0 * (2 * j + s + 1))
    return a, b, h


def _recurrence_arrays(basis: JacobiBasis, jmax: int) -> tuple[np.ndarray, np.ndarray]:
    """Arrays a_0..a_jmax and b_0..b_jmax."""
    a = np.empty(jmax + 1)
    b = np.empty(jmax + 1)
    for j in range(jmax + 1):
        a[j], b[j], _ = jacobi_coeffs(basis, j)
    return a, b


def jacobi_eval(basis: JacobiBasis, jmax: int, eta) -> np.ndarray:
    """Values P~_0(eta) .. P~_jmax(eta) by forward recurrence.

    eta may be a scalar or an ndarray; the result has shape
    (jmax+1,) + shape(eta).  Arguments outside [-1, 1] are allowed.
    """
    if jmax < 0:
        raise ValueError(f"jmax must be non-negative, got {jmax}")
    eta = np.asarray(eta, dtype=float)
    _, _, h0 = jacobi_coeffs(basis, 0)
    out = np.empty((jmax + 1,) + eta.shape)
    out[0] = 1.0 / h0
    if jmax == 0:
        return out
    a, b = _recurrence_arrays(basis, jmax)
    out[1] = (eta - b[0]) / a[0] * out[0]
    for j in range(1, jmax):
        out[j + 1] = ((eta - b[j]) * out[j] - a[j - 1] * out[j - 1]) / a[j]
    return out


def clenshaw(basis: JacobiBasis, coeffs, eta):
    """Sum_j coeffs[j] * P~_j(eta) by backward (Clenshaw) recurrence.

    Shares the recurrence coefficients with jacobi_eval; eta may be a scalar
    or an ndarray.
    """
    coeffs = np.asarray(coeffs, dtype=float)
    if coeffs.ndim != 1 or coeffs.size == 0:
        raise ValueError("coeffs must be a non-empty 1-d sequence")
    if not np.all(np.isfinite(coeffs)):
        raise ValueError("coeffs must be finite")
    eta_arr = np.asarray(eta, dtype=float)
    m = coeffs.size - 1
    _, _, h0 = jacobi_coeffs(basis, 0)
    if m == 0:
        value = coeffs[0] / h0 * np.ones_like(eta_arr)
        return float(value) if np.isscalar(eta) or eta_arr.ndim == 0 else value
    a, b = _recurrence_arrays(basis, m)
    ynext = np.zeros_like(eta_arr)
    ynext2 = np.zeros_like(eta_arr)
    for j in range(m, -1, -1):
        y = coeffs[j] + (eta_arr - b[j]) / a[j] * ynext
        if j + 1 <= m:
            y = y - a[j] / a[j + 1] * ynext2
        ynext, ynext2 = y, ynext
    # S = y_0 * P~_0: the P~_1 tail term vanishes because
    # P~_1 = (eta - b_0)/a_0 * P~_0 with P~_{-1} = 0.
    value = ynext / h0
    return float(value) if np.isscalar(eta) or eta_arr.ndim == 0 else value


_SERIES_CUTOFF = 2.0
_SERIES_TERMS = 30


@lru_cache(maxsize=None)
def _poisson_rule(nu: float, m: int) -> tuple[np.ndarray, np.ndarray]:
    """Cached Gauss-Jacobi rule with weight (1-t^2)^(nu-1/2) on (-1, 1)."""
    from .linalg import gauss_jacobi

    rule = gauss_jacobi(nu - 0.5, nu - 0.5, m)
    nodes = rule.nodes.copy()
    weights = rule.weights.copy()
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def _bessel_series(nu: float, z: np.ndarray) -> np.ndarray:
    """Power series of J_nu(z)/z^nu, accurate to machine precision for z <= 2."""
    q = -0.25 * z * z
    term = np.full_like(z, math.exp(-nu * math.log(2.0) - math.lgamma(nu + 1.0)))
    total = term.copy()
    for m in range(1, _SERIES_TERMS):
        term = term * q / (m * (m + nu))
        total += term
    return total


def _bessel_poisson(nu: float, z: np.ndarray) -> np.ndarray:
    """Poisson-integral evaluation of J_nu(z)/z^nu for moderate and large z.

    J_nu(z)/z^nu = C int_{-1}^{1} cos(z t) (1-t^2)^(nu-1/2) dt with
    C = 1/(2^nu sqrt(pi) Gamma(nu+1/2)); the node count grows like z/2.
    """
    pref = math.exp(-nu * math.log(2.0) - 0.5 * math.log(math.pi)
                    - math.lgamma(nu + 0.5))
    out = np.empty_like(z)
    counts = (np.ceil(z / 2.0) + 24).astype(int)
    for m in np.unique(counts):
        sel = counts == m
        nodes, weights = _poisson_rule(nu, int(m))
        out[sel] = pref * (np.cos(np.multiply.outer(z[sel], nodes)) @ weights)
    return out


def bessel_j_scaled(nu: float, z):
    """J_nu(z)/z^nu, an even entire function of z, for order nu > -1/2.

    At z = 0 the value is 1/(2^nu Gamma(nu+1)).  The power series is used for
    z <= 2 and Gauss-Jacobi quadrature of the Poisson integral with
    ceil(z/2)+24 nodes beyond that; both branches agree to ~1e-14 at the
    crossover.  z may be a scalar or an ndarray of non-negative values.
    """
    if not nu > -0.5:
        raise ValueError(f"order must exceed -1/2, got nu={nu}")
    z_arr = np.asarray(z, dtype=float)
    scalar = z_arr.ndim == 0
    z_arr = np.atleast_1d(z_arr)
    if np.any(z_arr < 0.0):
        raise ValueError("argument z must be non-negative")
    out = np.empty_like(z_arr)
    small = z_arr <= _SERIES_CUTOFF
    if small.any():
        out[small] = _bessel_series(float(nu), z_arr[small])
    if (~small).any():
        out[~small] = _bessel_poisson(float(nu), z_arr[~small])
    return float(out[0]) if scalar else out


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    if not x > 0.0:
        raise ValueError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)
