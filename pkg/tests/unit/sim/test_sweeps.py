"""
Unit tests for bound and threshold sweeps.
"""

import pytest

from foldcc.sim.sweeps import fmt, sweep_bounds, sweep_thresholds


@pytest.mark.unit
class TestFormatting:
    """Test numeric formatting of sweep cells."""

    @pytest.mark.parametrize(
        "value,text", [(3 / 100003, "2.99991e-05"), (0.2985781, "0.298578"), (0.0, "0"), (1.0, "1")]
    )
    def test_six_significant_digits(self, value, text):
        """Test probabilities carry six significant digits."""
        assert fmt(value) == text


@pytest.mark.unit
class TestSweepBounds:
    """Test bound sweeps."""

    def test_saraf_rows(self):
        """Test one saraf row per t with the expected columns."""
        rows = sweep_bounds("saraf", [35, 36], k=1000, n=2000, l=10)
        assert [row["bound"] for row in rows] == ["0", "0.298578"]
        assert list(rows[0]) == ["n", "k", "l", "t", "bound"]

    def test_gr2016_rows(self):
        """Test gr2016 sweeps the evaluation count."""
        rows = sweep_bounds("gr2016", [10], k=10000, q=100003)
        assert rows == [{"q": "100003", "k": "10000", "evals": "10", "bound": "2.99991e-05"}]

    def test_ours_rows(self):
        """Test ours reports the hypergeometric bound."""
        rows = sweep_bounds("ours", [1], k=3, q=11, l=1)
        assert rows[0]["bound"] == "0.8"

    @pytest.mark.parametrize(
        "which,kwargs",
        [("ours", {"q": 11}), ("gr2016", {}), ("saraf", {"n": 100}), ("bogus", {"q": 11})],
    )
    def test_missing_parameters(self, which, kwargs):
        """Test a bound without its parameters, or an unknown bound, raises."""
        with pytest.raises(ValueError):
            sweep_bounds(which, [1], k=3, **kwargs)


@pytest.mark.unit
class TestSweepThresholds:
    """Test threshold tables."""

    def test_family_columns(self, figure_family):
        """Test the m=100 row of the large family."""
        (row,) = sweep_thresholds(*figure_family, [100])
        assert row["s_star"] == "10"
        assert row["A_paper"] == "508"
        assert row["A_LCC"] == "299"
        assert row["a_s_star"] == "0.518685"
        assert row["extra_computation"] == "0.09"
        assert "A_asymptotic" not in row

    def test_asymptotic_column(self, figure_family):
        """Test eps adds the large-m column."""
        rows = sweep_thresholds(*figure_family, [1, 10], eps="0.1")
        assert [row["A_asymptotic"] for row in rows] == ["499", "499"]
        assert rows[0]["A_paper"] == rows[0]["A_LCC"] == "299"
        assert rows[0]["ratio_paper"] == "1"
