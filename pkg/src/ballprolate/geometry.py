"""Spherical harmonics for d in {1, 2, 3}, ball polynomials, full eigenfunction
evaluation on the ball, and the concentration-operator kernel.

An eigenfunction of angular degree n factorizes in spherical-polar
coordinates as

    psi(x) = r^n phi(2 r^2 - 1) Y_ell^n(x/r),        r = |x|,

where phi is the solved radial part (see pswf) and Y_ell^n is a real
orthonormal spherical harmonic.  Radial quantities are available in every
dimension; the explicit harmonic bases stop at d = 3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import IndexOutOfRange, UnsupportedDimension
from .linalg import gauss_jacobi
from .pswf import RadialPswf
from .specfn import JacobiBasis, bessel_j_scaled, clenshaw, jacobi_eval

__all__ = [
    "SphericalPoint",
    "sph_harm_dim",
    "sph_harm_eval",
    "ball_poly_eval",
    "eval_phi",
    "eval_radial",
    "eval_psi_ball",
    "kernel_qc",
]

_UNIT_NORM_TOL = 1e-14
_HARMONIC_DIMS = (1, 2, 3)


@dataclass(frozen=True)
class SphericalPoint:
    """A point on the unit sphere S^(d-1) in angular form.

    angles is (x,) with x = +-1 for d = 1, (theta,) for d = 2, and
    (theta, phi) with polar angle theta in [0, pi] for d = 3.
    """

    d: int
    angles: tuple[float, ...]

    def __post_init__(self):
        if self.d not in _HARMONIC_DIMS:
            raise UnsupportedDimension(f"spherical points support d in {_HARMONIC_DIMS}, got {self.d}")
        expected = 1 if self.d <= 2 else 2
        if len(self.angles) != expected:
            raise ValueError(f"d={self.d} needs {expected} angle(s), got {self.angles}")
        if self.d == 1 and self.angles[0] not in (-1.0, 1.0):
            raise ValueError(f"for d=1 the coordinate must be +-1, got {self.angles[0]}")

    @classmethod
    def from_cartesian(cls, xhat) -> "SphericalPoint":
        """Build from a Cartesian unit vector (norm within 1e-14 of one)."""
        v = np.asarray(xhat, dtype=float)
        d = v.size
        if d not in _HARMONIC_DIMS:
            raise UnsupportedDimension(f"spherical points support d in {_HARMONIC_DIMS}, got {d}")
        norm = float(np.linalg.norm(v))
        if abs(norm - 1.0) > _UNIT_NORM_TOL:
            raise ValueError(f"|x| = {norm!r} is not a unit vector")
        if d == 1:
            return cls(1, (1.0 if v[0] > 0 else -1.0,))
        if d == 2:
            return cls(2, (math.atan2(v[1], v[0]),))
        theta = math.acos(min(1.0, max(-1.0, v[2] / norm)))
        return cls(3, (theta, math.atan2(v[1], v[0])))


def sph_harm_dim(d: int, n: int) -> int:
    """Number of linearly independent spherical harmonics of degree n on
    S^(d-1): C(n+d-1, n) - C(n+d-3, n-2), the second term absent for n < 2."""
    if d < 1 or n < 0:
        raise ValueError(f"need d >= 1 and n >= 0, got d={d}, n={n}")
    total = math.comb(n + d - 1, n)
    if n >= 2:
        total -= math.comb(n + d - 3, n - 2)
    return total


def _as_point(d: int, point) -> SphericalPoint:
    if isinstance(point, SphericalPoint):
        if point.d != d:
            raise ValueError(f"point has d={point.d}, expected {d}")
        return point
    return SphericalPoint.from_cartesian(point)


def _jacobi_value(alpha: float, beta: float, j: int, x: float) -> float:
    return float(jacobi_eval(JacobiBasis(alpha, beta), j, x)[j])


def sph_harm_eval(d: int, n: int, ell: int, point) -> float:
    """Real orthonormal spherical harmonic Y_ell^n at a point of S^(d-1).

    d=1: Y_1^0 = 1/sqrt(2), Y_1^1 = x/sqrt(2).
    d=2: Y_1^0 = 1/sqrt(2 pi); Y_1^n = cos(n theta)/sqrt(pi) and
         Y_2^n = sin(n theta)/sqrt(pi) for n >= 1.
    d=3: Y_1^n = P~_n^{(0,0)}(cos theta)/sqrt(8 pi) and, for 1 <= m <= n,
         Y_{2m}^n  = (sin theta)^m P~_{n-m}^{(m,m)}(cos theta) cos(m phi) / (2^{m+1} sqrt(pi)),
         Y_{2m+1}^n = same with sin(m phi),
    where P~ are the orthonormalized Jacobi polynomials.  The bases are
    orthonormal with respect to the surface measure (checked by quadrature
    in the test suite).
    """
    if d not in _HARMONIC_DIMS:
        raise UnsupportedDimension(f"explicit harmonics exist for d in {_HARMONIC_DIMS}, got {d}")
    if n < 0:
        raise ValueError(f"degree n must be non-negative, got {n}")
    if not 1 <= ell <= sph_harm_dim(d, n):
        raise IndexOutOfRange(
            f"ell={ell} outside 1..{sph_harm_dim(d, n)} for (d={d}, n={n})"
        )
    pt = _as_point(d, point)
    if d == 1:
        x = pt.angles[0]
        return (1.0 if n == 0 else x) / math.sqrt(2.0)
    if d == 2:
        theta = pt.angles[0]
        if n == 0:
            return 1.0 / math.sqrt(2.0 * math.pi)
        trig = math.cos(n * theta) if ell == 1 else math.sin(n * theta)
        return trig / math.sqrt(math.pi)
    theta, phi = pt.angles
    if ell == 1:
        return _jacobi_value(0.0, 0.0, n, math.cos(theta)) / math.sqrt(8.0 * math.pi)
    m = ell // 2
    radial = (
        math.sin(theta) ** m
        * _jacobi_value(float(m), float(m), n - m, math.cos(theta))
        / (2.0 ** (m + 1) * math.sqrt(math.pi))
    )
    return radial * (math.cos(m * phi) if ell % 2 == 0 else math.sin(m * phi))


def _constant_harmonic(d: int) -> float:
    """Value of the degree-0 harmonic, 1/sqrt(surface area of S^(d-1))."""
    return {1: 1.0 / math.sqrt(2.0),
            2: 1.0 / math.sqrt(2.0 * math.pi),
            3: 1.0 / math.sqrt(4.0 * math.pi)}[d]


def ball_poly_eval(d: int, alpha: float, n: int, k: int, ell: int, x) -> float:
    """Orthonormal ball polynomial P~_k^{(alpha, beta_n)}(2|x|^2 - 1) |x|^n
    Y_ell^n(x/|x|) at a point of the closed unit ball; 0 at x = 0 when n >= 1."""
    if d not in _HARMONIC_DIMS:
        raise UnsupportedDimension(f"ball evaluation supports d in {_HARMONIC_DIMS}, got {d}")
    v = np.asarray(x, dtype=float)
    if v.size != d:
        raise ValueError(f"point must have {d} coordinates, got {v.size}")
    r = float(np.linalg.norm(v))
    if r > 1.0 + 1e-12:
        raise ValueError(f"|x| = {r} lies outside the closed unit ball")
    radial = _jacobi_value(alpha, n + d / 2.0 - 1.0, k, 2.0 * r * r - 1.0)
    if r == 0.0:
        return 0.0 if n >= 1 else radial * _constant_harmonic(d)
    return radial * r ** n * sph_harm_eval(d, n, ell, v / r)


def eval_phi(pswf: RadialPswf, eta):
    """Radial part phi(eta) as the Clenshaw sum of the solved coefficients.

    eta may be a scalar or an ndarray and is not restricted to [-1, 1].
    """
    return clenshaw(pswf.basis, pswf.coeffs, eta)


def eval_radial(pswf: RadialPswf, r, form: str = "plain"):
    """Radial profile at r >= 0 (values r > 1 are allowed).

    form "plain" gives r^n phi(2 r^2 - 1), the radial factor of the ball
    eigenfunction; form "slepian" gives r^(n + (d-1)/2) phi(2 r^2 - 1), the
    singular normalization used in the classical disk literature.
    """
    p = pswf.params
    if form == "plain":
        power = float(p.n)
    elif form == "slepian":
        power = p.n + (p.d - 1) / 2.0
    else:
        raise ValueError(f"form must be 'plain' or 'slepian', got {form!r}")
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr < 0.0):
        raise ValueError("radius must be non-negative")
    phi = clenshaw(pswf.basis, pswf.coeffs, 2.0 * r_arr * r_arr - 1.0)
    value = r_arr ** power * phi if power else phi
    return float(value) if np.isscalar(r) or r_arr.ndim == 0 else value


def eval_psi_ball(pswf: RadialPswf, ell: int, x) -> float:
    """Full eigenfunction value r^n phi(2 r^2 - 1) Y_ell^n(x/r) at a point of
    the closed unit ball."""
    p = pswf.params
    if p.d not in _HARMONIC_DIMS:
        raise UnsupportedDimension(
            f"full ball evaluation supports d in {_HARMONIC_DIMS}, got {p.d}"
        )
    v = np.asarray(x, dtype=float)
    if v.size != p.d:
        raise ValueError(f"point must have {p.d} coordinates, got {v.size}")
    r = float(np.linalg.norm(v))
    if r > 1.0 + 1e-12:
        raise ValueError(f"|x| = {r} lies outside the closed unit ball")
    if r == 0.0:
        if p.n >= 1:
            return 0.0
        return eval_phi(pswf, -1.0) * _constant_harmonic(p.d)
    return eval_radial(pswf, r, "plain") * sph_harm_eval(p.d, p.n, ell, v / r)


def kernel_qc(d: int, alpha: float, c: float, rho):
    """Kernel of the concentration operator at point separation rho >= 0:

        K(rho) = (2 pi)^(d/2) int_0^1 s^(d-1) (1-s^2)^alpha
                 [J_nu(c s rho) / (c s rho)^nu] ds,        nu = (d-2)/2,

    evaluated through the scaled Bessel function so that rho = 0 is regular,
    with a Gauss-Jacobi rule of ceil(c)+24 nodes in the variable s^2.
    Requires d >= 2 so that the Bessel order exceeds -1/2.
    """
    if d < 2:
        raise UnsupportedDimension("the kernel needs d >= 2 (Bessel order above -1/2)")
    if not c > 0.0:
        raise ValueError(f"bandwidth c must be positive, got {c}")
    if not alpha > -1.0:
        raise ValueError(f"alpha must exceed -1, got {alpha}")
    rho_arr = np.asarray(rho, dtype=float)
    if np.any(rho_arr < 0.0):
        raise ValueError("separation rho must be non-negative")
    rule = gauss_jacobi(alpha, d / 2.0 - 1.0, math.ceil(c) + 24)
    s = np.sqrt(0.5 * (1.0 + rule.nodes))
    scaled = bessel_j_scaled((d - 2) / 2.0, c * np.multiply.outer(rho_arr, s))
    value = (2.0 * math.pi) ** (d / 2.0) * 2.0 ** (-alpha - d / 2.0 - 1.0) * (
        scaled @ rule.weights
    )
    return float(value) if np.isscalar(rho) or rho_arr.ndim == 0 else value
