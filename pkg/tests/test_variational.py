"""Variational solver: matrices, generalized eigensolve, expectations, scans.

Matrix-element oracles are hand-computed gamma moments; the 2x2 eigenvalue
oracle is the characteristic quadratic solved independently here.
"""

import math

import numpy as np
import pytest

from condspec import (BasisSpec, ModelParams, OracleGrid, expectation_inv_x,
                      expectation_x, hamiltonian_matrix, hft_residuals,
                      overlap_matrix, richardson_refine, scan_curve,
                      solve_generalized, solve_model)

SQRT_PI = math.sqrt(math.pi)
SQRT2 = math.sqrt(2)


class TestOverlapMatrix:
    def test_reference_entries(self):
        S = overlap_matrix(BasisSpec(s=0.0, size=2))
        assert S[0, 0] == pytest.approx(0.5, abs=1e-15)
        assert S[0, 1] == pytest.approx(SQRT_PI / 4, abs=1e-15)
        assert S[0, 1] == pytest.approx(0.443113, abs=1e-6)
        assert S[1, 0] == S[0, 1]
        S1 = overlap_matrix(BasisSpec(s=1.0, size=1))
        assert S1[0, 0] == pytest.approx(0.5, abs=1e-15)

    @pytest.mark.parametrize("N", [4, 8, 12])
    def test_positive_definite_small_sizes(self, N):
        # strict positivity on the unit-diagonal scaling, at sizes where the
        # smallest eigenvalue is still resolvable in double precision
        S = overlap_matrix(BasisSpec(s=0.0, size=N))
        d = 1.0 / np.sqrt(np.diag(S))
        Sn = S * d[:, None] * d[None, :]
        assert np.linalg.eigvalsh(Sn).min() > 0.0

    @pytest.mark.parametrize("N", [16, 20, 30])
    def test_numerically_psd_large_sizes(self, N):
        # beyond size ~14 the smallest normalized eigenvalue drops under the
        # eigvalsh noise floor; it must stay within roundoff of zero
        S = overlap_matrix(BasisSpec(s=0.0, size=N))
        d = 1.0 / np.sqrt(np.diag(S))
        Sn = S * d[:, None] * d[None, :]
        e = np.linalg.eigvalsh(Sn)
        assert e.min() >= -100 * np.finfo(float).eps * e.max()

    def test_smin_ratio_monotone_in_size(self):
        ratios = []
        for N in (4, 8, 12, 16, 20):
            p = ModelParams()
            r = solve_model(p, basis_size=N)
            ratios.append(r.smin_ratio)
        assert all(x > y for x, y in zip(ratios, ratios[1:]))


class TestHamiltonianMatrix:
    def test_reference_entries(self):
        basis = BasisSpec(s=0.0, size=2)
        H = hamiltonian_matrix(basis, ModelParams())
        assert H[0, 0] == pytest.approx(1.0, abs=1e-14)
        assert H[0, 1] == pytest.approx(SQRT_PI / 2, abs=1e-14)
        assert H[0, 1] == pytest.approx(0.886227, abs=1e-6)
        assert H[1, 1] == pytest.approx(1.5, abs=1e-14)

    def test_symmetry_with_couplings(self):
        basis = BasisSpec(s=0.5, size=6)
        H = hamiltonian_matrix(basis, ModelParams(gamma=0.5, a=-1.0, b=2.0))
        assert np.allclose(H, H.T, atol=1e-13)

    def test_gamma_must_match_basis(self):
        with pytest.raises(ValueError):
            hamiltonian_matrix(BasisSpec(s=1.0, size=3), ModelParams(gamma=0.5))


class TestSolveGeneralized:
    def test_single_function_rayleigh_quotient(self):
        basis = BasisSpec(s=0.0, size=1)
        r = solve_generalized(hamiltonian_matrix(basis, ModelParams()),
                              overlap_matrix(basis))
        assert r.eigenvalues[0] == pytest.approx(2.0, abs=1e-14)

    def test_two_by_two_against_characteristic_quadratic(self):
        # det(H - W S) = 0 expanded by hand:
        # (1/4 - pi/16) W^2 + (pi/4 - 5/4) W + (3/2 - pi/4) = 0
        coeff = [0.25 - math.pi / 16, math.pi / 4 - 1.25, 1.5 - math.pi / 4]
        exact = sorted(np.roots(coeff).real)
        basis = BasisSpec(s=0.0, size=2)
        r = solve_generalized(hamiltonian_matrix(basis, ModelParams()),
                              overlap_matrix(basis))
        assert r.eigenvalues[0] == pytest.approx(exact[0], rel=1e-12)
        assert r.eigenvalues[1] == pytest.approx(exact[1], rel=1e-12)
        assert r.eigenvalues[0] == pytest.approx(2.0, abs=1e-10)
        assert r.eigenvalues[1] == pytest.approx(6.660, abs=1e-3)

    def test_oscillator_span_exactness(self):
        r = solve_model(ModelParams(), basis_size=20)
        for nu in range(4):
            assert r.eigenvalues[nu] == pytest.approx(2.0 + 4 * nu, abs=1e-10)

    def test_cutoff_validation(self):
        basis = BasisSpec(s=0.0, size=3)
        H = hamiltonian_matrix(basis, ModelParams())
        S = overlap_matrix(basis)
        for bad in (0.0, 1.0, -0.5, 2.0):
            with pytest.raises(ValueError):
                solve_generalized(H, S, cutoff=bad)

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            solve_generalized(np.eye(3), np.eye(4))

    @pytest.mark.parametrize("a,b", [(0.0, 0.0), (1.0, 1.0), (-2.0, 0.5),
                                     (2.0, -1.0), (-1.5, -1.5)])
    @pytest.mark.parametrize("s", [0.0, 1.0])
    def test_strictly_ascending(self, a, b, s):
        r = solve_model(ModelParams(gamma=s, a=a, b=b))
        w = r.eigenvalues[:10]
        assert np.all(np.diff(w) > 0.0)

    @pytest.mark.parametrize("a,b", [(0.0, 0.0), (-2.0, 1.0), (1.5, -0.5)])
    def test_generalized_residual_bound(self, a, b):
        basis = BasisSpec(s=0.0, size=20)
        p = ModelParams(a=a, b=b)
        H = hamiltonian_matrix(basis, p)
        S = overlap_matrix(basis)
        r = solve_generalized(H, S)
        norm_H = np.linalg.norm(H, ord=np.inf)
        for k in range(len(r.eigenvalues)):
            v = r.vectors[:, k]
            res = np.linalg.norm(H @ v - r.eigenvalues[k] * (S @ v))
            assert res <= 1e-8 * norm_H * np.linalg.norm(v)

    def test_retained_dim_reported(self):
        r = solve_model(ModelParams(), basis_size=30)
        assert 1 <= r.retained_dim <= 30
        assert 0.0 < r.smin_ratio <= 1.0

    @pytest.mark.parametrize("s", [0.0, 1.0])
    @pytest.mark.parametrize("a,b", [(1.0, 1.0), (-2.0, 0.5), (0.0, -1.0)])
    def test_eigenvalues_nonincreasing_in_basis_size(self, s, a, b):
        # enlarging the trial space can only lower each variational level
        prev = None
        for N in (10, 15, 20, 25, 30):
            w = solve_model(ModelParams(gamma=s, a=a, b=b), basis_size=N).eigenvalues[:4]
            if prev is not None:
                assert np.all(w <= prev + 1e-9)
            prev = w

    def test_deep_well_band_recovery(self):
        # strongly attractive coupling: the exact order-10 state must appear
        # on band 10 to high relative accuracy despite the basis conditioning
        from condspec import FreeParam, truncation_solutions
        sols = truncation_solutions(10, 0.0, FreeParam.A, 0.0)
        deepest = sols[-1]  # most negative root, rank i = 11
        r = solve_model(ModelParams(a=deepest.root))
        rel = abs(r.eigenvalues[deepest.index - 1] - deepest.W) / deepest.W
        assert rel <= 1e-4

    def test_polish_can_be_disabled(self):
        r = solve_model(ModelParams(), basis_size=20, polish=False)
        assert r.eigenvalues[0] == pytest.approx(2.0, abs=1e-9)


class TestExpectations:
    def test_ground_state_inverse_x(self):
        basis = BasisSpec(s=0.0, size=20)
        r = solve_model(ModelParams(), basis_size=20)
        assert expectation_inv_x(r, basis, 0) == pytest.approx(SQRT_PI, rel=1e-10)
        assert expectation_inv_x(r, basis, 0) == pytest.approx(1.772454, abs=1e-6)

    def test_ground_state_x(self):
        basis = BasisSpec(s=0.0, size=20)
        r = solve_model(ModelParams(), basis_size=20)
        assert expectation_x(r, basis, 0) == pytest.approx(SQRT_PI / 2, rel=1e-10)
        assert expectation_x(r, basis, 0) == pytest.approx(0.886227, abs=1e-6)

    def test_truncation_ground_state_inverse_x(self):
        # exact state (1 + sqrt(2) x) exp(-x^2/2):
        # <1/x> = (sqrt(pi) + sqrt(2)) / (3/2 + sqrt(2 pi)/2)
        expected = (SQRT_PI + SQRT2) / (1.5 + math.sqrt(2 * math.pi) / 2)
        basis = BasisSpec(s=0.0, size=20)
        r = solve_model(ModelParams(a=SQRT2), basis_size=20)
        assert expectation_inv_x(r, basis, 0) == pytest.approx(expected, rel=1e-10)
        assert expectation_inv_x(r, basis, 0) == pytest.approx(1.157394, abs=1e-6)

    @pytest.mark.parametrize("a,b", [(0.0, 0.0), (1.0, -1.0), (-2.0, 2.0)])
    @pytest.mark.parametrize("nu", [0, 1, 2])
    def test_strict_positivity(self, a, b, nu):
        basis = BasisSpec(s=0.0, size=20)
        r = solve_model(ModelParams(a=a, b=b), basis_size=20)
        assert expectation_inv_x(r, basis, nu) > 0.0
        assert expectation_x(r, basis, nu) > 0.0

    def test_index_validation(self):
        basis = BasisSpec(s=0.0, size=5)
        r = solve_model(ModelParams(), basis_size=5)
        with pytest.raises(IndexError):
            expectation_inv_x(r, basis, 99)


class TestHellmannFeynman:
    def test_harmonic_ground_state(self):
        res_a, res_b = hft_residuals(ModelParams(), nu=0, basis_size=20)
        assert res_a <= 1e-4
        assert res_b <= 1e-3

    def test_derivative_values(self):
        basis = BasisSpec(s=0.0, size=20)
        r = solve_model(ModelParams(), basis_size=20)
        assert expectation_inv_x(r, basis, 0) == pytest.approx(1.772454, abs=1e-4)
        assert expectation_x(r, basis, 0) == pytest.approx(0.886227, abs=1e-4)

    def test_truncation_point_derivative(self):
        res_a, _ = hft_residuals(ModelParams(a=SQRT2), nu=0, basis_size=20)
        assert res_a <= 1e-3

    def test_step_validation(self):
        with pytest.raises(ValueError):
            hft_residuals(ModelParams(), nu=0, step=0.0)


class TestScanCurve:
    def test_monotone_increasing_in_a(self):
        curve = scan_curve(ModelParams(), "a", (-SQRT2, SQRT2, 21), nu_max=0)
        W0 = curve.bands[0]
        steps = np.diff(W0)
        assert np.all(steps > 1e-8)

    def test_single_point_exact_state(self):
        curve = scan_curve(ModelParams(), "a", np.array([SQRT2]), nu_max=0)
        assert curve.bands[0, 0] == pytest.approx(4.0, abs=1e-10)

    def test_single_point_free_b_state(self):
        b = math.sqrt(8.0 / 3.0)
        curve = scan_curve(ModelParams(), "b", np.array([b]), nu_max=0)
        assert curve.bands[0, 0] == pytest.approx(10.0 / 3.0, abs=1e-5)

    def test_band_ordering_along_grid(self):
        curve = scan_curve(ModelParams(), "a", (-2.0, 2.0, 9), nu_max=3)
        for k in range(curve.bands.shape[1]):
            col = curve.bands[:, k]
            assert np.all(np.diff(col) > 0.0)

    def test_grid_validation(self):
        with pytest.raises(ValueError):
            scan_curve(ModelParams(), "a", (-1.0, 1.0, 1), nu_max=0)
        with pytest.raises(ValueError):
            scan_curve(ModelParams(), "c", (-1.0, 1.0, 5), nu_max=0)
        with pytest.raises(ValueError):
            scan_curve(ModelParams(), "a", (-1.0, 1.0, 5), nu_max=-1)

    def test_per_point_error_recording(self):
        # tiny basis with a huge cutoff cannot deliver four bands; the scan
        # must record the failures and keep going rather than abort
        curve = scan_curve(ModelParams(), "a", (-1.0, 1.0, 3), nu_max=3,
                           basis_size=2, cutoff=0.9)
        assert len(curve.errors) == 3
        assert np.all(np.isnan(curve.bands))

    def test_threaded_scan_matches_serial(self):
        serial = scan_curve(ModelParams(), "a", (-2.0, 2.0, 11), nu_max=2)
        threaded = scan_curve(ModelParams(), "a", (-2.0, 2.0, 11), nu_max=2,
                              threads=4)
        assert np.array_equal(serial.bands, threaded.bands)

    def test_metadata(self):
        curve = scan_curve(ModelParams(gamma=1.0, b=0.5), "a", (-1, 1, 3),
                           nu_max=1, basis_size=12)
        assert curve.axis_name == "a"
        assert curve.s == 1.0
        assert curve.fixed == {"b": 0.5}
        assert curve.basis_size == 12


class TestUpperBoundAgainstOracle:
    @pytest.mark.parametrize("a,b", [(1.0, -1.0), (-1.5, 0.5)])
    def test_variational_upper_bounds_oracle(self, a, b):
        p = ModelParams(a=a, b=b)
        var = solve_model(p).eigenvalues[:3]
        ref = richardson_refine(p, OracleGrid(), count=3)
        assert np.all(var >= ref - 5e-3)
