from fractions import Fraction

import pytest

from src.catalog import (
    DEFAULT_PARAMS,
    IdentityId,
    NamedSeriesId,
    SeriesFactory,
    build_series,
    compare,
    fine_F,
    get_family,
    verify_identity,
)
from src.series import Monomial, TruncatedQSeries
from src.utils.exceptions import NonConvergentParameters, UnknownSeries


class TestGoldenExpansions:
    def test_sigma_head(self):
        assert build_series(NamedSeriesId.SIGMA, 10).coefficients() == [1, 1, -1, 2, -2, 1, 0, 1, -2, 0]

    def test_sigma_printed_terms(self):
        sigma = build_series("SIGMA", 63)
        assert [sigma.coefficient(e) for e in (1, 2, 3, 55, 57, 62)] == [1, -1, 2, 2, 1, -2]

    def test_sigma_star_printed_terms(self):
        star = build_series(NamedSeriesId.SIGMA_STAR, 71)
        assert [star.coefficient(e) for e in (1, 2, 66, 67, 70)] == [-2, -2, 2, -2, -4]

    def test_w_head(self):
        assert build_series(NamedSeriesId.W, 10).coefficients() == [0, -2, 0, -2, 2, 0, 2, 0, 2, -2]

    def test_shadow_w_head(self):
        assert build_series(NamedSeriesId.SW, 11).coefficients() == [-1, 1, -2, 1, 0, 2, -3, 0, 0, 2, -1]

    @pytest.mark.slow
    def test_w_and_shadow_tails(self):
        w = build_series(NamedSeriesId.W, 101)
        sw = build_series(NamedSeriesId.SW, 101)
        assert [w.coefficient(e) for e in (97, 99, 100)] == [-2, -4, 4]
        assert [sw.coefficient(e) for e in (91, 95, 96, 100)] == [1, 2, -2, -2]

    @pytest.mark.parametrize(
        "series_id, head",
        [
            (NamedSeriesId.F1, [1, 2, 0, 3, 0, 1, 2, 2, 0, 0, 4]),
            (NamedSeriesId.F2, [0, 1, 1, 2, 0, 2, 2]),
            (NamedSeriesId.F3, [1, 0, 0, -2, 1, 0, 0, 0, 2, 0, 0, -2]),
            (NamedSeriesId.F4, [0, 1, -1, 0, -1, 0, 0, 2, -1, 1, 0, 0, 0, 0]),
            (NamedSeriesId.CHALLENGE_TAIL, [0, 1, -1, 2, -1, 1, -2]),
        ],
    )
    def test_printed_heads(self, series_id, head):
        assert build_series(series_id, len(head)).coefficients() == head

    @pytest.mark.slow
    def test_challenge_tail_printed_terms(self):
        tail = build_series(NamedSeriesId.CHALLENGE_TAIL, 50)
        assert [tail.coefficient(e) for e in (46, 47, 48, 49)] == [-14, 6, 13, -8]


class TestSeriesFactory:
    def test_resolve_is_case_insensitive(self):
        assert SeriesFactory.resolve("sigma-star") == NamedSeriesId.SIGMA_STAR

    def test_unknown_series(self):
        with pytest.raises(UnknownSeries):
            build_series("NOT_A_SERIES", 5)

    def test_empty_bound(self):
        assert build_series(NamedSeriesId.SIGMA, 0).is_zero

    def test_ghosts_have_no_family(self):
        assert get_family(NamedSeriesId.GHOST_W) is None
        assert not build_series(NamedSeriesId.GHOST_W, 5).is_zero

    def test_every_family_is_registered(self):
        families = SeriesFactory().create_all_families()
        missing = [s for s in NamedSeriesId if not s.is_ghost and s not in families]
        assert missing == []

    def test_term_matches_expansion(self):
        family = get_family(NamedSeriesId.SIGMA)
        assert family.head(4) == [1, 1, -1, 2]


class TestFineSeries:
    def test_geometric_case(self):
        series = fine_F(Monomial.of(0), Monomial.of(0), Monomial.of(1, 1), 10)
        assert series.coefficients() == [1] * 10

    def test_non_convergent(self):
        with pytest.raises(NonConvergentParameters):
            fine_F(Monomial.of(0), Monomial.of(0), Monomial.of(1), 10)


class TestCompare:
    def test_coverage_loss_fails(self):
        lhs = TruncatedQSeries.from_coefficients([1, 1], 2)
        rhs = TruncatedQSeries.from_coefficients([1, 1, 1, 1], 4)
        report = compare("X", 4, lhs, rhs)
        assert not report.passed
        assert report.first_mismatch is None
        assert "q^2" in report.detail

    def test_mismatch_reported(self):
        lhs = TruncatedQSeries.from_coefficients([1, 1, 1], 3)
        rhs = TruncatedQSeries.from_coefficients([1, 1, 2], 3)
        report = compare("X", 3, lhs, rhs)
        assert report.first_mismatch == 2
        assert report.to_dict()["pass"] is False


class TestIdentities:
    @pytest.mark.parametrize("identity", list(IdentityId))
    def test_identity_small_bound(self, identity):
        report = verify_identity(identity, 30)
        assert report.passed, report.to_dict()

    @pytest.mark.parametrize("source, target", [(NamedSeriesId.F5, NamedSeriesId.F6), (NamedSeriesId.F7, NamedSeriesId.F8)])
    def test_inverted_family_sums_to_companion(self, source, target):
        transformed = get_family(source).expand_transformed(40)
        assert transformed == build_series(target, 40)
        assert transformed != build_series(target, 40).scale(-1)

    def test_parametrized_cases(self):
        report = verify_identity("entry_172", 30)
        assert len(report.cases) == len(DEFAULT_PARAMS[IdentityId.ENTRY_172])

    def test_report_shape(self):
        data = verify_identity(IdentityId.JACKSON, 20).to_dict()
        assert set(data) >= {"id", "bound", "pass", "first_mismatch", "lhs_head", "rhs_head"}
        assert data["bound"] == str(Fraction(20))

    def test_unknown_identity(self):
        with pytest.raises(ValueError):
            verify_identity("NOT_AN_IDENTITY", 10)

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "identity",
        [
            IdentityId.FINE_63,
            IdentityId.ENTRY_172,
            IdentityId.AJO,
            IdentityId.RAMA_SUMSOFTAILS,
            IdentityId.JACKSON,
            IdentityId.CFLZ_W1_THETA,
            IdentityId.CFLZ_W2_THETA,
            IdentityId.LL_THETA,
            IdentityId.L_EQ_LL,
            IdentityId.SYM_F3,
            IdentityId.SYM_F4,
            IdentityId.SYM_F5F6,
            IdentityId.SYM_F7F8,
            IdentityId.SYM_L,
        ],
    )
    def test_identity_suite_bound_150(self, identity):
        assert verify_identity(identity, 150).passed
