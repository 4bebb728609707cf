"""Tests for the scalar special functions."""

import math

import mpmath as mp
import numpy as np
import pytest
import scipy.special

from ballprolate.specfn import (
    JacobiBasis,
    _bessel_poisson,
    _bessel_series,
    bessel_j_scaled,
    clenshaw,
    jacobi_coeffs,
    jacobi_eval,
    log_gamma,
)
from ballprolate.linalg import gauss_jacobi

BASES = [(0.0, 0.0), (0.0, 0.5), (1.0, 1.5), (-0.5, 2.0)]


class TestJacobiCoeffs:
    def test_legendre_j0(self):
        a0, b0, h0 = jacobi_coeffs(JacobiBasis(0.0, 0.0), 0)
        assert a0 == pytest.approx(1.0 / math.sqrt(3.0), rel=1e-15)
        assert b0 == 0.0
        assert h0 == pytest.approx(1.0 / math.sqrt(2.0), rel=1e-15)

    @pytest.mark.parametrize("alpha", [0.0, 0.5, 2.0, -0.3])
    @pytest.mark.parametrize("j", [0, 1, 5, 20])
    def test_equal_exponents_give_zero_b(self, alpha, j):
        _, b, _ = jacobi_coeffs(JacobiBasis(alpha, alpha), j)
        assert b == 0.0

    def test_a0_matches_gram_schmidt_oracle(self):
        # Frozen from 50-digit Gram-Schmidt orthonormalization of {1, eta}
        # under weight (1+eta)^(1/2) on (-1, 1) with the 2^(a+b+2) norm.
        a0, b0, _ = jacobi_coeffs(JacobiBasis(0.0, 0.5), 0)
        assert a0 == pytest.approx(0.52372293656638171504, rel=1e-14)
        assert b0 == pytest.approx(0.2, rel=1e-14)

    def test_b0_uses_removable_singularity_value(self):
        # alpha + beta = 0 makes the generic b_n formula 0/0 at n = 0.
        _, b0, _ = jacobi_coeffs(JacobiBasis(0.5, -0.5), 0)
        assert b0 == pytest.approx((-0.5 - 0.5) / 2.0, rel=1e-15)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            JacobiBasis(-1.0, 0.0)
        with pytest.raises(ValueError):
            JacobiBasis(0.0, -1.5)
        with pytest.raises(ValueError):
            jacobi_coeffs(JacobiBasis(0.0, 0.0), -1)

    @pytest.mark.parametrize("alpha,beta", BASES)
    def test_positive_a_and_h(self, alpha, beta):
        basis = JacobiBasis(alpha, beta)
        for j in range(30):
            a, _, h = jacobi_coeffs(basis, j)
            assert a > 0.0 and h > 0.0


class TestJacobiEval:
    def test_constant(self):
        vals = jacobi_eval(JacobiBasis(0.0, 0.0), 0, 0.37)
        assert vals[0] == pytest.approx(math.sqrt(2.0), rel=1e-15)

    def test_degree_one_at_left_endpoint(self):
        vals = jacobi_eval(JacobiBasis(0.0, 0.0), 1, -1.0)
        assert vals[1] == pytest.approx(-math.sqrt(6.0), rel=1e-15)

    def test_rodrigues_oracle_degree_five(self):
        # Frozen from a 50-digit Rodrigues evaluation of the standard
        # Legendre P_5(0.3) divided by h_5.
        vals = jacobi_eval(JacobiBasis(0.0, 0.0), 5, 0.3)
        assert vals[5] == pytest.approx(1.620005110226314996, rel=1e-14)

    def test_array_argument_shape(self):
        eta = np.linspace(-1.0, 7.0, 11)
        vals = jacobi_eval(JacobiBasis(0.5, 1.5), 6, eta)
        assert vals.shape == (7, 11)
        single = jacobi_eval(JacobiBasis(0.5, 1.5), 6, eta[3])
        np.testing.assert_allclose(vals[:, 3], single, rtol=1e-15)

    @pytest.mark.parametrize("alpha,beta", BASES)
    def test_orthonormality_by_quadrature(self, alpha, beta):
        rule = gauss_jacobi(alpha, beta, 14)
        vals = jacobi_eval(JacobiBasis(alpha, beta), 12, rule.nodes)
        gram = (vals * rule.weights) @ vals.T
        target = 2.0 ** (alpha + beta + 2.0) * np.eye(13)
        assert np.max(np.abs(gram - target)) < 1e-12

    def test_orthonormality_negative_control(self):
        alpha, beta = 1.0, 1.5
        rule = gauss_jacobi(alpha, beta, 14)
        vals = jacobi_eval(JacobiBasis(alpha, beta), 12, rule.nodes)
        vals[4] *= 1.0 + 1e-6
        gram = (vals * rule.weights) @ vals.T
        target = 2.0 ** (alpha + beta + 2.0) * np.eye(13)
        assert np.max(np.abs(gram - target)) > 1e-12

    @pytest.mark.parametrize("alpha,beta", BASES)
    def test_leading_coefficient(self, alpha, beta):
        # kappa_n = C(2n+alpha+beta, n) / (2^n h_n) against the leading
        # coefficient accumulated through the recurrence.
        basis = JacobiBasis(alpha, beta)
        _, _, h0 = jacobi_coeffs(basis, 0)
        lead = 1.0 / h0
        for n in range(11):
            s = alpha + beta
            _, _, h_n = jacobi_coeffs(basis, n)
            kappa = math.exp(
                math.lgamma(2 * n + s + 1.0)
                - math.lgamma(n + 1.0)
                - math.lgamma(n + s + 1.0)
                - n * math.log(2.0)
            ) / h_n
            assert lead == pytest.approx(kappa, rel=1e-11)
            a_n, _, _ = jacobi_coeffs(basis, n)
            lead /= a_n


class TestClenshaw:
    def test_single_constant_term(self):
        value = clenshaw(JacobiBasis(0.0, 0.0), [1.0], 0.9)
        assert value == pytest.approx(math.sqrt(2.0), rel=1e-15)

    @pytest.mark.parametrize("k", [0, 1, 3, 9])
    def test_unit_vector_matches_jacobi_eval(self, k):
        basis = JacobiBasis(0.0, 0.5)
        coeffs = np.zeros(k + 1)
        coeffs[k] = 1.0
        for eta in (-1.0, -0.3, 0.7, 2.0, 7.0):
            direct = jacobi_eval(basis, k, eta)[k]
            assert clenshaw(basis, coeffs, eta) == pytest.approx(direct, rel=1e-14)

    def test_matches_extended_precision_forward_sum(self):
        # Oracle: naive forward summation of the recurrence at 50 digits.
        basis = JacobiBasis(0.0, 0.5)
        rng = np.random.default_rng(20240817)
        coeffs = rng.standard_normal(20)
        eta = 0.7
        mp.mp.dps = 50
        al, be = mp.mpf(0), mp.mpf("0.5")
        coeffs_mp = [mp.mpf(float(c)) for c in coeffs]

        def abh(j):
            s = al + be
            b = (be**2 - al**2) / ((2*j+s) * (2*j+s+2)) if j else (be - al) / (s + 2)
            a = mp.sqrt(4*(j+1)*(j+al+1)*(j+be+1)*(j+s+1)
                        / ((2*j+s+1)*(2*j+s+2)**2*(2*j+s+3)))
            return a, b

        h0 = mp.sqrt(mp.gamma(al+1)*mp.gamma(be+1) / (2*(al+be+1)*mp.gamma(al+be+1)))
        p_prev, p = None, 1/h0
        total = coeffs_mp[0]*p
        a_prev = None
        for j in range(len(coeffs) - 1):
            a_j, b_j = abh(j)
            p_next = ((mp.mpf(eta) - b_j)*p - (a_prev*p_prev if j else 0))/a_j
            total += coeffs_mp[j+1]*p_next
            p_prev, p, a_prev = p, p_next, a_j
        assert clenshaw(basis, coeffs, eta) == pytest.approx(float(total), rel=1e-13)

    @pytest.mark.parametrize("alpha,beta", BASES)
    def test_matches_forward_summation(self, alpha, beta):
        basis = JacobiBasis(alpha, beta)
        rng = np.random.default_rng(7)
        for trial in range(5):
            m = int(rng.integers(1, 61))
            coeffs = rng.standard_normal(m)
            eta = float(rng.uniform(-1.0, 7.0))
            forward = float(jacobi_eval(basis, m - 1, eta).T @ coeffs)
            assert clenshaw(basis, coeffs, eta) == pytest.approx(forward, rel=1e-13)

    def test_forward_agreement_negative_control(self):
        basis = JacobiBasis(0.0, 0.0)
        coeffs = np.ones(30)
        eta = 3.0
        forward = float(jacobi_eval(basis, 29, eta).T @ coeffs)
        perturbed = coeffs.copy()
        perturbed[29] *= 1.0 + 1e-6
        assert abs(clenshaw(basis, perturbed, eta) / forward - 1.0) > 1e-13

    def test_array_eta(self):
        basis = JacobiBasis(0.0, 0.0)
        coeffs = np.array([0.5, -0.25, 1.5])
        eta = np.array([-1.0, 0.0, 2.0])
        out = clenshaw(basis, coeffs, eta)
        expected = [clenshaw(basis, coeffs, e) for e in eta]
        np.testing.assert_allclose(out, expected, rtol=1e-15)

    def test_bad_coeffs(self):
        with pytest.raises(ValueError):
            clenshaw(JacobiBasis(0.0, 0.0), [], 0.0)
        with pytest.raises(ValueError):
            clenshaw(JacobiBasis(0.0, 0.0), [1.0, math.inf], 0.0)


class TestBesselScaled:
    def test_value_at_zero(self):
        assert bessel_j_scaled(0.0, 0.0) == pytest.approx(1.0, rel=1e-15)
        nu = 1.7
        expected = math.exp(-nu * math.log(2.0) - math.lgamma(nu + 1.0))
        assert bessel_j_scaled(nu, 0.0) == pytest.approx(expected, rel=1e-15)

    def test_half_order_closed_form(self):
        # J_{1/2}(z) = sqrt(2/(pi z)) sin z, evaluated at z = pi/2.
        z = math.pi / 2.0
        assert bessel_j_scaled(0.5, z) == pytest.approx(
            0.50794908747392775829, rel=1e-14
        )

    def test_series_oracle_j1(self):
        # Frozen from the 30-term power series at 50 digits.
        assert bessel_j_scaled(1.0, 1.0) == pytest.approx(
            0.44005058574493351596, rel=1e-14
        )

    @pytest.mark.parametrize("nu", [0.0, 0.5, 1.5, 3.7, 10.0])
    def test_branch_crossover_agreement(self, nu):
        z = np.array([2.0])
        series = _bessel_series(nu, z)[0]
        poisson = _bessel_poisson(nu, z)[0]
        assert abs(series - poisson) <= 1e-13 * abs(series)

    @pytest.mark.parametrize("nu", [0.0, 0.5, 1.0, 2.5, 7.3])
    def test_against_scipy(self, nu):
        # The scaled function is accurate in absolute terms relative to its
        # peak at z = 0; recovering J itself multiplies that error by z^nu.
        z = np.linspace(0.05, 40.0, 173)
        ours = bessel_j_scaled(nu, z)
        reference = scipy.special.jv(nu, z) / z ** nu
        peak = bessel_j_scaled(nu, 0.0)
        assert np.max(np.abs(ours - reference)) < 1e-13 * peak
        moderate = z <= 8.0
        np.testing.assert_allclose(
            (ours * z ** nu)[moderate], scipy.special.jv(nu, z[moderate]),
            rtol=1e-11, atol=1e-13,
        )

    @pytest.mark.parametrize("nu", [0.0, 0.7, 1.5])
    @pytest.mark.parametrize("z", [0.5, 3.0, 12.0])
    def test_derivative_identity(self, nu, z):
        # d/dz [J_nu(z)/z^nu] = -z * J_{nu+1}(z)/z^{nu+1}
        h = 1e-5
        fd = (bessel_j_scaled(nu, z + h) - bessel_j_scaled(nu, z - h)) / (2.0 * h)
        rhs = -z * bessel_j_scaled(nu + 1.0, z)
        assert abs(fd - rhs) < 1e-8

    @pytest.mark.parametrize("z", [0.5, 3.0])
    def test_derivative_identity_negative_control(self, z):
        h = 1e-5
        fd = (bessel_j_scaled(0.0, z + h) - bessel_j_scaled(0.0, z - h)) / (2.0 * h)
        rhs = -z * bessel_j_scaled(1.0, z) * (1.0 + 1e-6)
        assert abs(fd - rhs) > 1e-8

    def test_even_extension_is_smooth_through_zero(self):
        vals = bessel_j_scaled(2.5, np.array([0.0, 1e-8, 1e-4]))
        assert np.all(np.isfinite(vals))
        assert vals[0] == pytest.approx(vals[1], rel=1e-12)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            bessel_j_scaled(-0.5, 1.0)
        with pytest.raises(ValueError):
            bessel_j_scaled(0.0, -1.0)


class TestLogGamma:
    def test_golden_values(self):
        assert log_gamma(1.0) == 0.0
        assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-15)
        # Frozen from the exact product recursion down to Gamma(1/2).
        assert log_gamma(10.5) == pytest.approx(13.940625219403763633, rel=1e-14)

    @pytest.mark.parametrize("x", [1e-3, 0.37, 1.0, 17.25, 200.0])
    def test_against_mpmath(self, x):
        mp.mp.dps = 40
        assert log_gamma(x) == pytest.approx(float(mp.loggamma(x)), rel=1e-14)

    def test_domain_error(self):
        with pytest.raises(ValueError):
            log_gamma(0.0)
        with pytest.raises(ValueError):
            log_gamma(-3.0)
