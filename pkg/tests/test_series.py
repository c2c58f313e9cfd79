from fractions import Fraction

import pytest

from src.series import InfiniteProductExpr, Monomial, QProductExpr, TruncatedQSeries, expand, poch, sum_tails, sum_terms
from src.utils.exceptions import NotExpandable, StallDetected, ZeroFactorCoefficient, ZeroLeadingTerm


class TestTruncatedQSeries:
    def test_canonical_form_strips_zeros(self):
        s = TruncatedQSeries.from_coefficients([0, 0, 3, 0, 0], 5)
        assert s.offset == 2
        assert s.coeffs == (3,)
        assert s.valuation == 2

    def test_zero_series(self):
        s = TruncatedQSeries.zero(7)
        assert s.is_zero
        assert s.valuation == 7
        assert s.coefficients() == [0] * 7

    def test_coefficient_at_bound_is_unknown(self):
        s = TruncatedQSeries.from_coefficients([1, 2, 3], 3)
        assert s.coefficient(2) == 3
        with pytest.raises(ValueError):
            s.coefficient(3)

    def test_geometric_inverse(self):
        one_minus_q = TruncatedQSeries.from_coefficients([1, -1], 10)
        inv = one_minus_q.invert()
        assert inv.coefficients() == [1] * 10
        assert one_minus_q * inv == TruncatedQSeries.one(10)

    def test_invert_with_negative_valuation(self):
        s = TruncatedQSeries.monomial(2, 3, 10)
        inv = s.invert()
        assert inv.valuation == -3
        assert inv.coefficient(-3) == Fraction(1, 2)

    def test_invert_zero_raises(self):
        with pytest.raises(ZeroLeadingTerm):
            TruncatedQSeries.zero(5).invert()

    def test_truncate_never_raises_bound(self):
        s = TruncatedQSeries.from_coefficients([1, 1, 1], 3)
        assert s.truncate(20).bound_exponent == 3
        assert s.truncate(2).coefficients() == [1, 1]

    def test_addition_uses_smaller_bound(self):
        a = TruncatedQSeries.from_coefficients([1, 1, 1, 1], 4)
        b = TruncatedQSeries.from_coefficients([1, -1], 2)
        total = a + b
        assert total.bound_exponent == 2
        assert total.coefficients() == [2, 0]

    def test_product_precision(self):
        a = TruncatedQSeries.monomial(1, 2, 10)
        b = TruncatedQSeries.from_coefficients([1, 1], 5)
        assert (a * b).bound_exponent == 7

    def test_shift_moves_bound(self):
        s = TruncatedQSeries.one(5).shift(2, -3)
        assert s.bound_exponent == 7
        assert s.coefficient(2) == -3

    def test_subst_power_and_neg(self):
        s = TruncatedQSeries.from_coefficients([1, 2, 3], 3)
        assert s.subst_power(2).coefficients() == [1, 0, 2, 0, 3, 0]
        assert s.subst_neg().coefficients() == [1, -2, 3]

    def test_puiseux_grid(self):
        s = TruncatedQSeries.monomial(1, Fraction(1, 2), 3) + TruncatedQSeries.one(3)
        assert s.grid == 2
        assert s.coefficient(Fraction(1, 2)) == 1
        with pytest.raises(ValueError):
            s.subst_neg()

    def test_first_mismatch(self):
        a = TruncatedQSeries.from_coefficients([1, 2, 3, 4], 4)
        b = TruncatedQSeries.from_coefficients([1, 2, 0, 4], 4)
        assert a.first_mismatch(b) == 2
        assert a.first_mismatch(a) is None

    def test_serialization(self):
        s = TruncatedQSeries.from_terms({1: Fraction(1, 3), 4: -2}, 6)
        data = s.to_dict()
        assert data == {"d": 1, "offset": 1, "bound": 6, "coeffs": [[1, 3], [0, 1], [0, 1], [-2, 1]]}
        assert TruncatedQSeries.from_dict(data) == s
        assert s.to_rows() == [(1, 1, 1, 3), (4, 1, -2, 1)]


class TestQProductExpr:
    def test_finite_pochhammer(self):
        # (q; q)_3 = 1 - q - q^2 + q^4 + q^5 - q^6
        s = expand(poch(1, 1, 1, 3), 10)
        assert s.coefficients() == [1, -1, -1, 0, 1, 1, -1, 0, 0, 0]

    def test_euler_product(self):
        s = InfiniteProductExpr.poch_infinity(1, 1, 1).to_series(10)
        assert s.coefficients() == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0]

    def test_inverse_factor_expansion(self):
        expr = QProductExpr.build(1, 0, [(-1, 1, -1)])
        assert expand(expr, 6).coefficients() == [1] * 6

    def test_subst_qinv_normal_form(self):
        # 1 - 1/q = -q^-1 (1 - q)
        flipped = QProductExpr.build(1, 0, [(-1, 1, 1)]).subst_qinv()
        assert flipped.prefactor_coeff == -1
        assert flipped.prefactor_exp == -1
        assert flipped.valuation() == -1

    def test_subst_qinv_rejects_zero_coefficient(self):
        with pytest.raises(ZeroFactorCoefficient):
            QProductExpr.build(1, 0, [(0, 1, 1)]).subst_qinv()

    def test_not_expandable(self):
        expr = QProductExpr.build(1, 0, [(-1, -1, -1)])
        assert not expr.is_expandable
        with pytest.raises(NotExpandable):
            expand(expr, 5)

    def test_infinite_constant_factor(self):
        with pytest.raises(NotExpandable):
            QProductExpr.build(1, 0, [(-1, 0, -1)]).normalized()

    def test_vanishing_constant_factor_gives_zero(self):
        assert QProductExpr.build(1, 0, [(-1, 0, 1)]).normalized().is_zero

    def test_evaluate_matches_closed_form(self):
        expr = QProductExpr.build(2, 1, [(-1, 1, -1)])
        assert complex(expr.evaluate(0.5)) == pytest.approx(2 * 0.5 / (1 - 0.5))


class TestMonomial:
    @pytest.mark.parametrize(
        "text, coeff, exp",
        [
            ("0", 0, 0),
            ("-1", -1, 0),
            ("q", 1, 1),
            ("-q^2", -1, 2),
            ("3q^-1", 3, -1),
            ("q^(1/2)", 1, Fraction(1, 2)),
        ],
    )
    def test_parse(self, text, coeff, exp):
        assert Monomial.parse(text) == Monomial.of(coeff, exp)

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            Monomial.parse("q2")

    def test_arithmetic(self):
        a, b = Monomial.of(2, 1), Monomial.of(-1, 3)
        assert a * b == Monomial.of(-2, 4)
        assert a / b == Monomial.of(-2, -2)
        assert -a == Monomial.of(-2, 1)


class TestSummation:
    def test_sum_terms_geometric(self):
        series, used = sum_terms(lambda n: QProductExpr.monomial(1, n), 0, 8, lambda n: n)
        assert series.coefficients() == [1] * 8
        assert used == 8

    def test_sum_tails_settles(self):
        series, used = sum_tails(lambda n: QProductExpr.monomial(1, n), TruncatedQSeries.zero(6), 0, 6)
        assert series.coefficients() == [1] * 6
        assert used == 9

    def test_sum_tails_stall(self):
        with pytest.raises(StallDetected):
            sum_tails(lambda n: QProductExpr.monomial(1, 0), TruncatedQSeries.zero(4), 0, 4, stall_window=5)
