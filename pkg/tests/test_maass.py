from fractions import Fraction

import mpmath
import pytest

from src.maass import (
    CuspKind,
    MaassEvalContext,
    UpperHalfPoint,
    bessel_k,
    classify_cusp,
    k_half_closed_form,
    laplacian_residual,
    period_function_sample,
    period_integral,
    phi0w_context,
    phi_eval,
    quantum_eval_fW,
    quantum_eval_sigma,
    required_n_max,
    s_transform_residual,
    single_mode_context,
    tail_bound,
    translation_residual,
)
from src.maass import cusps, quantum
from src.maass.quantum import first_vanishing, period_function
from src.utils.exceptions import DomainHole, PrecisionUnreachable, TailTooLarge


@pytest.fixture(scope="module")
def phi0w():
    return phi0w_context(required_n_max(8, 0.25, 1e-12), precision=30, tail_tolerance=1e-10)


class TestBessel:
    @pytest.mark.parametrize("t", [0.1, 1.0, 5.0])
    def test_half_order_closed_form(self, t):
        assert abs(bessel_k(Fraction(1, 2), t) - k_half_closed_form(t)) < 1e-40

    def test_unsupported_order(self):
        with pytest.raises(ValueError):
            bessel_k(2, 1.0)

    def test_non_positive_argument(self):
        with pytest.raises(ValueError):
            bessel_k(0, 0)

    def test_precision_cap(self):
        with pytest.raises(PrecisionUnreachable):
            bessel_k(0, 1.0, precision=200)


class TestCusps:
    @pytest.mark.parametrize(
        "x, kind",
        [
            ("1/4", CuspKind.S_INF),
            ("3/8", CuspKind.S_INF),
            ("0", CuspKind.S_0),
            ("1/3", CuspKind.S_0),
            ("-2/5", CuspKind.S_0),
            ("1/2", CuspKind.S_HALF),
            ("5/6", CuspKind.S_HALF),
        ],
    )
    def test_classification_and_witness(self, x, kind):
        cusp = classify_cusp(x)
        assert cusp.kind == kind
        assert cusp.verify()

    @pytest.mark.parametrize("u, v", [(3, 8), (-3, 8), (5, -12), (-7, -4), (1, 0)])
    def test_inverse_pair_signs(self, u, v):
        s, t = cusps._inverse_pair(u, v)
        assert s * u + t * v == 1

    def test_inverse_pair_rejects_common_factor(self):
        with pytest.raises(ValueError):
            cusps._inverse_pair(4, 6)


class TestWaveform:
    def test_point_must_be_in_upper_half_plane(self):
        with pytest.raises(ValueError):
            UpperHalfPoint(0.1, 0.0)

    def test_fricke(self):
        w = UpperHalfPoint(0.0, 0.5).fricke()
        assert float(w.x) == pytest.approx(0.0)
        assert float(w.y) == pytest.approx(0.5)

    def test_maps_keep_working_precision(self):
        z = UpperHalfPoint(0.3, 0.8)
        moved = z.translate(1, precision=40)
        with mpmath.workdps(40):
            assert abs(moved.x - z.x - 1) < mpmath.mpf(10) ** -38
            back = z.fricke(40).fricke(40)
            assert abs(back.to_mpc() - z.to_mpc()) < mpmath.mpf(10) ** -35

    def test_context_support(self):
        with pytest.raises(ValueError):
            MaassEvalContext(8, {2: 1}, 16)
        with pytest.raises(ValueError):
            MaassEvalContext(8, {1: 1}, 4)

    def test_tail_bound_meets_tolerance(self):
        n_max = required_n_max(8, 0.5, 1e-10)
        assert tail_bound(8, n_max, 0.5) <= 1e-10

    def test_tail_too_large(self):
        ctx = phi0w_context(16)
        with pytest.raises(TailTooLarge):
            phi_eval(ctx, UpperHalfPoint(0.0, 0.1))

    def test_fixed_point_value(self, phi0w):
        value = phi_eval(phi0w, UpperHalfPoint(0.0, 0.5)).value
        assert float(value.real) == pytest.approx(0.72115, abs=1e-5)
        assert abs(float(value.imag)) < 1e-8

    def test_generic_value(self, phi0w):
        value = phi_eval(phi0w, UpperHalfPoint(0.3, 0.8)).value
        assert complex(value) == pytest.approx(complex(0.64697, 0.16627), abs=1e-5)

    def test_s_transform(self, phi0w):
        result = s_transform_residual(phi0w, UpperHalfPoint(0.3, 0.8))
        assert result["residual"] < 10 * result["tail_bound"] + 1e-20

    @pytest.mark.parametrize("x, y", [(0.1, 0.7), (0.3, 0.8), (-0.45, 1.2)])
    def test_translation_off_axis(self, phi0w, x, y):
        result = translation_residual(phi0w, UpperHalfPoint(x, y))
        assert result["residual"] < 1e-20

    @pytest.mark.parametrize("x, y", [(0.1, 0.7), (-0.4, 0.6), (0.25, 0.9)])
    def test_s_transform_grid(self, phi0w, x, y):
        result = s_transform_residual(phi0w, UpperHalfPoint(x, y))
        assert result["residual"] < 10 * result["tail_bound"] + 1e-20

    def test_single_mode_laplacian_is_second_order(self):
        ctx = single_mode_context(1)
        z = UpperHalfPoint(0.3, 0.8)
        coarse = laplacian_residual(ctx, z, h=1e-3)
        fine = laplacian_residual(ctx, z, h=5e-4)
        assert coarse["relative"] < 1e-3
        assert 3.5 < coarse["residual"] / fine["residual"] < 4.5

    def test_laplacian_step_leaves_half_plane(self, phi0w):
        with pytest.raises(ValueError):
            laplacian_residual(phi0w, UpperHalfPoint(0.0, 0.5), h=0.6)


class TestPeriod:
    def test_real_axis(self):
        with pytest.raises(ValueError):
            period_integral(single_mode_context(1), complex(0.3, 0.0))


class TestQuantum:
    def test_sigma_at_one(self):
        value = quantum_eval_sigma(0)
        assert complex(value.value_plus) == pytest.approx(2)
        assert complex(value.value_minus) == pytest.approx(-2)

    @pytest.mark.parametrize("x", ["1/5", "2/7", "3/11", "-1/6"])
    def test_cohen_relation(self, x):
        assert quantum_eval_sigma(x).cohen_residual < 1e-12

    @pytest.mark.parametrize("x", ["1/5", "2/7", "-1/6"])
    def test_translation_evaluates_shifted_root(self, x, monkeypatch):
        seen = []
        original = quantum._sigma_at_root

        def recording(point):
            seen.append(point)
            return original(point)

        monkeypatch.setattr(quantum, "_sigma_at_root", recording)
        value = quantum_eval_sigma(x)
        assert Fraction(x) + 1 in seen
        assert value.translation_residual < 1e-30

    def test_fw_at_zero(self):
        value = quantum_eval_fW(0)
        assert value.kind == CuspKind.S_0
        assert complex(value.value) == pytest.approx(-1)

    @pytest.mark.parametrize(
        "x, expected",
        [("1/4", complex(0.78569, -1.17588)), ("1/3", complex(-2.63896, -0.18947))],
    )
    def test_fw_values(self, x, expected):
        assert complex(quantum_eval_fW(x).value) == pytest.approx(expected, abs=1e-5)

    def test_fw_domain_hole(self):
        with pytest.raises(DomainHole):
            quantum_eval_fW("1/2")

    @pytest.mark.parametrize("gamma", ["A", "C"])
    @pytest.mark.parametrize("x", ["1/4", "1/3", "2/5"])
    def test_trivial_periods(self, gamma, x):
        assert abs(period_function(gamma, x)) < 1e-12

    def test_unknown_generator(self):
        with pytest.raises(ValueError):
            period_function_sample("Z", ["1/3"])

    def test_sample_rows(self):
        samples = period_function_sample("A", ["1/3", "1/4"], calibrate=False)
        assert [s.to_row()["x_den"] for s in samples] == [3, 4]

    @pytest.mark.parametrize(
        "x, offset, step, sign, expected",
        [
            (Fraction(1, 4), 0, 2, 1, 1),
            (Fraction(1, 3), 1, 1, -1, 2),
            (Fraction(1, 3), 0, 2, 1, None),
        ],
    )
    def test_first_vanishing(self, x, offset, step, sign, expected):
        assert first_vanishing(x, offset, step, sign) == expected
