from fractions import Fraction

import numpy as np
import pytest

from cycle4 import (
    CycleMatrix4,
    ParameterOutOfRange,
    char_poly,
    eigen_residual,
    make_cycle_matrix,
    spectrum,
)


def sorted_close(actual, expected, tol):
    expected = sorted(expected, key=lambda z: (z.real, z.imag))
    assert len(actual) == len(expected)
    for got, want in zip(actual, expected):
        assert abs(got - want) < tol, (got, want)


class TestConstruction:
    def test_permutation_pattern(self):
        m = make_cycle_matrix(0, 0, 0, 0)
        assert m.dense() == [
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [1.0, 0.0, 0.0, 0.0],
        ]

    def test_rows_sum_to_one(self):
        m = make_cycle_matrix(0.5, 0.5, 0.5, 0.5)
        for row in m.dense():
            assert sum(row) == 1.0
            assert all(entry >= 0.0 for entry in row)

    def test_rejects_one_with_index(self):
        with pytest.raises(ParameterOutOfRange) as err:
            make_cycle_matrix(0.2, 1.0, 0, 0)
        assert err.value.index == 2
        assert err.value.value == 1.0

    @pytest.mark.parametrize("bad", [-0.1, 1.0, 1.5, float("nan")])
    def test_rejects_out_of_range(self, bad):
        with pytest.raises(ParameterOutOfRange):
            make_cycle_matrix(bad, 0.5, 0.5, 0.5)

    def test_json_round_trip(self):
        m = make_cycle_matrix(0.1, 0.2, 0.3, 0.4)
        assert m.to_dict() == {"alpha": [0.1, 0.2, 0.3, 0.4]}
        assert CycleMatrix4.from_dict(m.to_dict()) == m


class TestCharPoly:
    def test_equal_parameters_half(self):
        # all alpha = 0.5: (lam - 0.5)^4 - 0.5^4 expands to
        # lam^4 - 2 lam^3 + 1.5 lam^2 - 0.5 lam + 0
        coeffs = char_poly(make_cycle_matrix(0.5, 0.5, 0.5, 0.5))
        assert coeffs == pytest.approx((1.0, -2.0, 1.5, -0.5, 0.0), abs=1e-15)

    def test_left_anchor_form(self):
        # (alpha, 0, 0, 0): lam^4 - alpha lam^3 + alpha - 1
        alpha = 0.7
        coeffs = char_poly(make_cycle_matrix(alpha, 0, 0, 0))
        assert coeffs == pytest.approx((1.0, -alpha, 0.0, 0.0, alpha - 1.0), abs=1e-15)

    def test_value_one_is_root(self):
        rng = np.random.default_rng(5)
        for _ in range(200):
            m = make_cycle_matrix(*rng.random(4))
            c4, c3, c2, c1, c0 = char_poly(m)
            p1 = (((c4 + c3) + c2) + c1) + c0
            assert abs(p1) < 1e-12

    def test_monic(self):
        assert char_poly(make_cycle_matrix(0.3, 0.7, 0.1, 0.9))[0] == 1.0

    def test_matches_exact_determinant_expansion(self):
        # independent oracle: exact rational charpoly of the dense matrix
        sympy = pytest.importorskip("sympy")
        lam = sympy.Symbol("lam")
        rng = np.random.default_rng(17)
        for _ in range(60):
            m = make_cycle_matrix(*rng.random(4))
            dense = sympy.Matrix(
                [[sympy.Rational(Fraction(entry)) for entry in row] for row in m.dense()]
            )
            exact = sympy.expand((lam * sympy.eye(4) - dense).det())
            exact_coeffs = [float(exact.coeff(lam, k)) for k in (4, 3, 2, 1, 0)]
            mine = char_poly(m)
            for got, want in zip(mine, exact_coeffs):
                assert abs(got - want) < 1e-12


class TestSpectrum:
    def test_equal_half_parameters(self):
        roots = spectrum(make_cycle_matrix(0.5, 0.5, 0.5, 0.5))
        sorted_close(roots, [0, 0.5 - 0.5j, 0.5 + 0.5j, 1], 1e-12)

    def test_permutation(self):
        roots = spectrum(make_cycle_matrix(0, 0, 0, 0))
        sorted_close(roots, [-1, -1j, 1j, 1], 1e-14)

    def test_random_instance_certificates(self):
        m = make_cycle_matrix(0.3, 0.7, 0.1, 0.9)
        roots = spectrum(m)
        for r in roots:
            assert eigen_residual(m, r) < 1e-8
        for r in roots:
            assert any(s.real == r.real and s.imag == -r.imag for s in roots)

    def test_bulk_invariants_1000(self):
        rng = np.random.default_rng(99)
        for _ in range(1000):
            m = make_cycle_matrix(*rng.random(4))
            roots = spectrum(m)
            assert min(abs(r - 1.0) for r in roots) < 1e-8
            assert max(abs(r) for r in roots) <= 1.0 + 1e-9
            for r in roots:
                assert any(s.real == r.real and s.imag == -r.imag for s in roots)

    def test_trace_consistency(self):
        rng = np.random.default_rng(123)
        for _ in range(300):
            alpha = rng.random(4)
            m = make_cycle_matrix(*alpha)
            total = sum(spectrum(m))
            assert abs(total.real - alpha.sum()) < 1e-8
            assert abs(total.imag) < 1e-8


class TestEigenResidual:
    def test_cr_point_exact(self):
        m = make_cycle_matrix(0.5, 0.5, 0.5, 0.5)
        assert eigen_residual(m, 0.5 + 0.5j) < 1e-12

    def test_permutation_at_i(self):
        assert eigen_residual(make_cycle_matrix(0, 0, 0, 0), 1j) == 0.0

    def test_off_spectrum_value(self):
        m = make_cycle_matrix(0.5, 0.5, 0.5, 0.5)
        assert eigen_residual(m, 0.9) == pytest.approx(abs(0.4**4 - 0.5**4), abs=1e-10)
