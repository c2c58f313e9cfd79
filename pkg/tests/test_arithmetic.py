from math import gcd

import pytest

from src.arithmetic import (
    CHI_W,
    ORDER_SQRT2,
    ORDER_SQRT3,
    ORDER_SQRT6,
    CoeffKind,
    CoeffTable,
    ThetaId,
    f_coeff_arith,
    ideal_count,
    pell_classes,
    sigma_coeff_arith,
    sigma_star_coeff_arith,
    signed_class_count,
    theta_double_sum,
    tw_pos,
)
from src.catalog import NamedSeriesId, build_series


class TestCharacter:
    def test_normalization(self):
        assert CHI_W(3) == 1j
        assert CHI_W(-1) == 1
        assert CHI_W(4) == 0

    def test_multiplicative(self):
        assert CHI_W.is_multiplicative()

    def test_exponent_rejects_even(self):
        with pytest.raises(ValueError):
            CHI_W.exponent(6)


class TestTwPos:
    @pytest.mark.parametrize("m, expected", [(1, 1), (7, -2), (9, -1), (23, -2), (8, 0)])
    def test_values(self, m, expected):
        assert tw_pos(m) == expected

    def test_non_positive(self):
        with pytest.raises(ValueError):
            tw_pos(0)

    def test_multiplicative_on_coprime(self):
        odd = range(1, 60, 2)
        for a in odd:
            for b in odd:
                if gcd(a, b) == 1:
                    assert tw_pos(a * b) == tw_pos(a) * tw_pos(b), (a, b)


class TestQuadratic:
    def test_unit_class(self):
        assert pell_classes(ORDER_SQRT6, 1).reps == ((1, 0),)

    def test_congruence_obstruction(self):
        assert len(pell_classes(ORDER_SQRT6, 2)) == 0

    def test_zero_norm_rejected(self):
        with pytest.raises(ValueError):
            pell_classes(ORDER_SQRT6, 0)

    def test_invalid_unit(self):
        from src.arithmetic.quadratic import QuadOrder

        with pytest.raises(ValueError):
            QuadOrder(6, (2, 1), 1)

    def test_window_contains_unit(self):
        assert ORDER_SQRT2.acting_unit == (3, 2)

    @pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (3, 2), (55, 2), (62, -2), (1609, 6)])
    def test_sigma_coefficients(self, n, expected):
        assert sigma_coeff_arith(n) == expected

    @pytest.mark.parametrize("n, expected", [(1, -2), (2, -2), (66, 2), (67, -2), (70, -4)])
    def test_sigma_star_coefficients(self, n, expected):
        assert sigma_star_coeff_arith(n) == expected

    def test_sigma_star_index(self):
        with pytest.raises(ValueError):
            sigma_star_coeff_arith(0)

    def test_signed_class_count_obstruction(self):
        # u^2 - 3v^2 = 2 não tem solução mod 3
        assert signed_class_count(ORDER_SQRT3, 2) == 0
        assert signed_class_count(ORDER_SQRT3, 1) == 1


class TestIdealCount:
    def test_split_prime(self):
        assert ideal_count(ORDER_SQRT2, 17) == 2
        assert ideal_count(ORDER_SQRT2, 1) == 1

    def test_residue_filter(self):
        assert ideal_count(ORDER_SQRT2, 9, residue_condition={9}) == 1
        assert ideal_count(ORDER_SQRT2, 17, residue_condition={9}) == 0

    def test_inert_prime(self):
        assert ideal_count(ORDER_SQRT2, 3) == 0
        assert ideal_count(ORDER_SQRT2, 9) == 1

    def test_weights(self):
        assert ideal_count(ORDER_SQRT2, 7, weight="kronecker_minus4") == -2
        assert ideal_count(ORDER_SQRT2, 7, weight="parity_sign") == -2

    def test_wrong_order(self):
        with pytest.raises(ValueError):
            ideal_count(ORDER_SQRT3, 5)

    @pytest.mark.parametrize(
        "k, head",
        [
            (1, [1, 2, 0, 3, 0, 1, 2, 2, 0, 0, 4]),
            (2, [0, 1, 1, 2, 0, 2, 2]),
            (3, [1, 0, 0, -2, 1, 0, 0, 0, 2, 0, 0, -2]),
            (4, [0, 1, -1, 0, -1, 0, 0, 2, -1, 1, 0, 0, 0, 0]),
        ],
    )
    def test_f_heads(self, k, head):
        assert [f_coeff_arith(k, n) for n in range(len(head))] == head

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            f_coeff_arith(9, 1)


class TestTheta:
    def test_ll_head_from_first_block(self):
        series = theta_double_sum(ThetaId.LL_THETA, 4)
        assert series.coefficients() == [0, -1, 1, 0]

    def test_w1_matches_family(self):
        assert theta_double_sum(ThetaId.W1_THETA, 40) == build_series(NamedSeriesId.W1, 40)


class TestCoeffTable:
    def test_fill_and_get(self):
        table = CoeffTable.empty(CoeffKind.TW_POS).fill([1, 7, 23])
        assert table[7] == -2
        assert table.get(9) == -1
        assert len(table) == 4

    def test_tw_neg_needs_provider(self):
        with pytest.raises(ValueError):
            CoeffTable.empty(CoeffKind.TW_NEG).fill([1])

    def test_save_and_load(self, tmp_path):
        table = CoeffTable.empty(CoeffKind.IDEAL_COUNT).fill([1, 17, 49])
        path = table.save(str(tmp_path))
        assert path.endswith(".csv")
        loaded = CoeffTable.load(str(tmp_path), CoeffKind.IDEAL_COUNT)
        assert loaded.entries == {1: 1, 17: 2, 49: 3}

    def test_conventions_mismatch_ignores_cache(self, tmp_path):
        CoeffTable.empty(CoeffKind.T_SIGMA).fill([1]).save(str(tmp_path))
        assert CoeffTable.load(str(tmp_path), CoeffKind.T_SIGMA, conventions="outra") is None

    def test_cached_without_directory(self):
        assert len(CoeffTable.cached(None, CoeffKind.TW_POS)) == 0


@pytest.mark.slow
class TestOracleEquivalence:
    def test_sigma(self):
        sigma = build_series(NamedSeriesId.SIGMA, 201).coefficients()
        assert [sigma_coeff_arith(n) for n in range(201)] == sigma

    def test_sigma_star(self):
        star = build_series(NamedSeriesId.SIGMA_STAR, 201)
        assert [sigma_star_coeff_arith(n) for n in range(1, 201)] == [star.coefficient(n) for n in range(1, 201)]

    def test_w(self):
        w = build_series(NamedSeriesId.W, 201)
        assert [tw_pos(8 * n - 1) for n in range(1, 201)] == [w.coefficient(n) for n in range(1, 201)]

    @pytest.mark.parametrize("k, series_id", [(1, NamedSeriesId.F1), (2, NamedSeriesId.F2)])
    def test_f_families(self, k, series_id):
        series = build_series(series_id, 201).coefficients()
        assert [f_coeff_arith(k, n) for n in range(201)] == series
