import pytest

from src.catalog import NamedSeriesId, SeriesFactory, build_series, get_family
from src.renorm import Renormalizer, check_involution, ghost_decay_profile, shadow, tails_sum
from src.utils.exceptions import DomainHole, NoLimitTerm, PoleAtPoint


class TestShadow:
    def test_sigma_shadow_is_minus_sigma_star(self):
        result = shadow(NamedSeriesId.SIGMA, 30)
        assert result.shadow == build_series(NamedSeriesId.SIGMA_STAR, 30).scale(-1)
        assert result.tails == result.shadow + result.ghost

    def test_w_shadow(self):
        result = shadow("W", 30)
        assert result.shadow == build_series(NamedSeriesId.SW, 30)
        assert result.n_used > 0

    def test_sw_shadow_is_w(self):
        result = shadow("SW", 40)
        assert result.shadow == build_series(NamedSeriesId.W, 40)
        assert result.tails == result.shadow + result.ghost

    def test_sw_ghost_odd_sum_starts_at_q(self):
        # P (sum q^(2n)/(1-q^(2n)) + sum_{n>=0} q^(2n+1)/(1+q^(2n+1)))
        assert build_series(NamedSeriesId.GHOST_SW, 3).coefficient(1) == 1

    def test_to_dict(self):
        data = shadow(NamedSeriesId.SIGMA_STAR, 10).to_dict()
        assert data["id"] == "SIGMA_STAR"
        assert set(data) == {"id", "bound", "n_used", "tails", "ghost", "shadow"}

    def test_family_without_ghost(self):
        with pytest.raises(NoLimitTerm):
            shadow(NamedSeriesId.F1, 10)

    def test_tails_without_limit(self):
        with pytest.raises(NoLimitTerm):
            tails_sum(get_family(NamedSeriesId.F1), 10)


class TestInvolution:
    @pytest.mark.parametrize("series_id", ["SIGMA", "SIGMA_STAR", "W", "SW"])
    def test_involution(self, series_id):
        report = check_involution(series_id, 25)
        assert report.passed, report.to_dict()
        assert len(report.cases) == 2

    def test_empty_bound(self):
        report = check_involution(NamedSeriesId.SIGMA, 0)
        assert report.passed
        assert report.detail == "comparação vazia"

    def test_unpaired_series(self):
        with pytest.raises(NoLimitTerm):
            check_involution(NamedSeriesId.F3, 10)


class TestGhostDecay:
    @pytest.mark.parametrize(
        "ghost_id, order, radii",
        [
            (NamedSeriesId.GHOST_SIGMA, 1, [0.8, 0.9, 0.95, 0.99]),
            (NamedSeriesId.GHOST_SIGMA, 1, [0.5, 0.7, 0.9]),
            (NamedSeriesId.GHOST_SIGMA_STAR, 2, [0.8, 0.9, 0.95, 0.99]),
            (NamedSeriesId.GHOST_W, 4, [0.9, 0.95, 0.99]),
            (NamedSeriesId.GHOST_SW, 1, [0.8, 0.9, 0.95, 0.99]),
        ],
    )
    def test_decreasing_towards_root(self, ghost_id, order, radii):
        profile = ghost_decay_profile(ghost_id, order, radii)
        assert profile.is_strictly_decreasing(), profile.rows
        assert [row["r"] for row in profile.to_rows()] == radii

    @pytest.mark.parametrize("ghost_id", [NamedSeriesId.GHOST_W, NamedSeriesId.GHOST_SW, NamedSeriesId.GHOST_SIGMA])
    def test_closed_form_matches_expansion(self, ghost_id):
        q = 0.3j
        series = build_series(ghost_id, 80)
        expected = sum(complex(c) * q ** int(e) for e, c in series.items())
        value = SeriesFactory().get_ghost(ghost_id).evaluate(q, 30)
        assert complex(value) == pytest.approx(expected, abs=1e-12)

    def test_w_ghost_at_i_decays_after_first_radius(self):
        profile = ghost_decay_profile(NamedSeriesId.GHOST_W, 4, [0.8, 0.9, 0.95, 0.99])
        assert profile.magnitudes[1] > profile.magnitudes[0]
        assert not profile.is_strictly_decreasing()
        assert profile.is_strictly_decreasing(from_radius=0.9)

    @pytest.mark.parametrize(
        "ghost_id, order",
        [(NamedSeriesId.GHOST_W, 1), (NamedSeriesId.GHOST_SIGMA, 2), (NamedSeriesId.GHOST_SIGMA, 4)],
    )
    def test_pole(self, ghost_id, order):
        with pytest.raises(PoleAtPoint):
            ghost_decay_profile(ghost_id, order, [0.5, 0.9])

    def test_domain_hole(self):
        with pytest.raises(DomainHole):
            ghost_decay_profile(NamedSeriesId.GHOST_W, 2, [0.5, 0.9])

    @pytest.mark.parametrize("radii", [[0.9, 0.5], [0.5, 1.0], [0.0, 0.5]])
    def test_invalid_radii(self, radii):
        with pytest.raises(ValueError):
            ghost_decay_profile(NamedSeriesId.GHOST_SIGMA, 1, radii)

    def test_invalid_order(self):
        with pytest.raises(ValueError):
            Renormalizer().ghost_decay_profile(NamedSeriesId.GHOST_SIGMA, 0, [0.5])

    def test_rows_shape(self):
        rows = ghost_decay_profile(NamedSeriesId.GHOST_SIGMA, 1, [0.5]).to_rows()
        assert set(rows[0]) == {"order", "r", "magnitude", "exponent"}
