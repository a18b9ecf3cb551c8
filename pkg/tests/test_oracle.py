"""Finite-difference reference solver: accuracy, convergence order, guards."""

import math

import numpy as np
import pytest

from condspec import (ModelParams, OracleGrid, oracle_eigenvalues,
                      richardson_refine)

SQRT2 = math.sqrt(2)


class TestOracleGrid:
    def test_defaults(self):
        g = OracleGrid()
        assert g.L == 12.0
        assert g.K == 4000
        assert g.h == pytest.approx(0.003, abs=1e-15)

    def test_validation(self):
        with pytest.raises(ValueError):
            OracleGrid(L=0.0)
        with pytest.raises(ValueError):
            OracleGrid(K=1)
        with pytest.raises(ValueError):
            OracleGrid(L=-3.0, K=100)


class TestOracleEigenvalues:
    def test_oscillator_pair(self):
        w = oracle_eigenvalues(ModelParams(), OracleGrid(), count=2)
        assert w[0] == pytest.approx(2.0, abs=1e-2)
        assert w[1] == pytest.approx(6.0, abs=1e-2)

    def test_linear_coupling_ground_state(self):
        p = ModelParams(a=SQRT2)
        w = oracle_eigenvalues(p, OracleGrid(), count=1)
        assert w[0] == pytest.approx(4.0, abs=1e-2)

    def test_slope_coupling_ground_state(self):
        p = ModelParams(b=math.sqrt(8.0 / 3.0))
        w = oracle_eigenvalues(p, OracleGrid(), count=1)
        assert w[0] == pytest.approx(10.0 / 3.0, abs=1e-2)

    def test_angular_ladder_exact(self):
        w = oracle_eigenvalues(ModelParams(gamma=1.0), OracleGrid(), count=2)
        assert w[0] == pytest.approx(4.0, abs=1e-2)
        assert w[1] == pytest.approx(8.0, abs=1e-2)

    def test_ascending(self):
        w = oracle_eigenvalues(ModelParams(a=-1.0, b=1.0), OracleGrid(), count=6)
        assert np.all(np.diff(w) > 0.0)

    def test_short_box_rejected(self):
        # a 3-unit box truncates the Gaussian tail visibly; the containment
        # check must refuse to report eigenvalues from it
        with pytest.raises(ArithmeticError):
            oracle_eigenvalues(ModelParams(), OracleGrid(L=3.0, K=1000),
                               count=1)

    def test_count_validation(self):
        with pytest.raises(ValueError):
            oracle_eigenvalues(ModelParams(), OracleGrid(), count=0)


class TestConvergence:
    @pytest.mark.parametrize("p,exact", [
        (ModelParams(), 2.0),
        (ModelParams(a=SQRT2), 4.0),
        (ModelParams(gamma=1.0), 4.0),
    ])
    def test_second_order_refinement(self, p, exact):
        errs = []
        for cells in (500, 1000, 2000):
            w = oracle_eigenvalues(p, OracleGrid(K=cells), count=1)
            errs.append(abs(w[0] - exact))
        assert errs[0] / errs[1] >= 2.5
        assert errs[1] / errs[2] >= 2.5

    def test_richardson_oscillator(self):
        w = richardson_refine(ModelParams(), OracleGrid(), count=2)
        assert w[0] == pytest.approx(2.0, abs=1e-3)
        assert w[1] == pytest.approx(6.0, abs=1e-3)

    def test_richardson_linear_coupling(self):
        w = richardson_refine(ModelParams(a=SQRT2), OracleGrid(), count=1)
        assert w[0] == pytest.approx(4.0, abs=1e-3)

    def test_richardson_mixed_couplings(self):
        w = richardson_refine(ModelParams(a=0.5, b=1.0), OracleGrid(), count=1)
        assert w[0] == pytest.approx(3.75, abs=5e-3)

    def test_richardson_beats_plain(self):
        plain = oracle_eigenvalues(ModelParams(), OracleGrid(), count=1)[0]
        refined = richardson_refine(ModelParams(), OracleGrid(), count=1)[0]
        assert abs(refined - 2.0) < abs(plain - 2.0)
