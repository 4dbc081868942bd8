import math

import numpy as np
import pytest

from irkit.graphs import complete, cycle, empty, kneser, schlafli, strong_product
from irkit.theta import ThetaError, lovasz_theta
from irkit.theta.kernels import kernel_mode
from conftest import random_graph

TOL = 1e-6


def cycle_complement_theta(n_odd: int) -> float:
    return 1.0 + 1.0 / math.cos(math.pi / n_odd)


class TestClosedForms:
    def test_pentagon(self):
        tv = lovasz_theta(cycle(5), TOL)
        assert abs(tv.value - math.sqrt(5)) <= TOL

    def test_odd_cycle_complements(self):
        for n in (5, 7, 9, 11):
            tv = lovasz_theta(cycle(n).complement(), TOL)
            assert abs(tv.value - cycle_complement_theta(n)) <= 1e-4

    def test_kneser_complements(self):
        for (n, r) in ((5, 2), (6, 2)):
            tv = lovasz_theta(kneser(n, r).complement(), TOL)
            assert abs(tv.value - n / r) <= 1e-4

    def test_schlafli(self):
        assert abs(lovasz_theta(schlafli(), 1e-5).value - 3) <= 1e-4
        assert abs(lovasz_theta(schlafli().complement(), 1e-5).value - 9) <= 1e-4

    def test_extremes(self):
        assert lovasz_theta(empty(6)).value == 6.0
        assert lovasz_theta(complete(6)).value == 1.0


class TestWitnesses:
    def test_verify_and_enclosure(self, rng):
        for _ in range(10):
            g = random_graph(rng, 7, 0.5)
            tv = lovasz_theta(g, TOL)
            assert tv.verify(g)
            assert tv.dual_objective - tv.primal_objective <= TOL
            assert tv.primal_objective <= tv.value <= tv.dual_objective

    def test_witness_checks_are_meaningful(self):
        tv = lovasz_theta(cycle(5), TOL)
        X = tv.primal
        assert abs(np.trace(X) - 1) <= TOL
        for u, v in cycle(5).edges():
            assert abs(X[u, v]) <= TOL
        assert np.linalg.eigvalsh(X)[0] >= -TOL
        # dual matrix upper-bounds theta for free
        assert np.linalg.eigvalsh(tv.dual)[-1] >= tv.value - TOL

    def test_sandwich_alpha_chibarf(self, rng):
        from irkit.fractional import chi_bar_f
        from irkit.invariants import independence_number

        for _ in range(8):
            g = random_graph(rng, 6, 0.5)
            tv = lovasz_theta(g, TOL)
            assert independence_number(g).value <= tv.value + TOL
            assert tv.value <= float(chi_bar_f(g).value) + TOL


class TestMultiplicativity:
    def test_strong_product(self, rng):
        for _ in range(4):
            g = random_graph(rng, 4, 0.5)
            h = random_graph(rng, 4, 0.5)
            a = lovasz_theta(g, TOL).value
            b = lovasz_theta(h, TOL).value
            ab = lovasz_theta(strong_product(g, h), TOL).value
            assert abs(ab - a * b) <= 1e-4 * max(1.0, a * b)

    def test_c5_square(self):
        tv = lovasz_theta(strong_product(cycle(5), cycle(5)), TOL)
        assert abs(tv.value - 5.0) <= 1e-5


class TestModes:
    def test_numpy_fallback_agrees(self):
        a = lovasz_theta(cycle(7).complement(), TOL, use_numba=True)
        b = lovasz_theta(cycle(7).complement(), TOL, use_numba=False)
        assert b.mode == "numpy"
        assert abs(a.value - b.value) <= 2 * TOL

    def test_env_flag(self, monkeypatch):
        monkeypatch.setenv("IRKIT_PURE_NUMPY", "1")
        assert kernel_mode() == "numpy"
        monkeypatch.delenv("IRKIT_PURE_NUMPY")


class TestFailures:
    def test_bad_tol(self):
        with pytest.raises(ValueError):
            lovasz_theta(cycle(5), 0.1)

    def test_iteration_cap_raises(self):
        with pytest.raises(ThetaError):
            lovasz_theta(kneser(5, 2), 1e-6, max_iters=10)
