"""Certificates: coefficient sums, closed forms vs series oracle, thresholds."""

import numpy as np
import pytest

import harmomap as hm
from harmomap.errors import DegenerateThresholdError, HypothesisError
from harmomap.specialfn import HypergeometricParams as HP

from conftest import CERTIFIED_B1_FREE_SPECS, CERTIFIED_B1_ZERO_SPECS, monomial_map


class TestCoefficientMargin:
    def test_identity_certified(self):
        cert = hm.coefficient_margin(hm.identity_map())
        assert cert.certified and cert.sum_value == 0.0

    def test_boundary_case(self):
        cert = hm.coefficient_margin(monomial_map(2, 0.5))
        assert cert.certified
        assert cert.boundary
        assert cert.sum_value == pytest.approx(1.0)

    def test_f0_not_certified(self):
        cert = hm.coefficient_margin(hm.mocanu_example(2, 0.3))
        assert not cert.certified
        assert cert.sum_value == pytest.approx(2.2)

    def test_b1_gate(self):
        f = hm.HarmonicMapSeries(
            hm.AnalyticSeries([0, 1]), hm.AnalyticSeries([0, 0.5])
        )
        with pytest.raises(HypothesisError):
            hm.coefficient_margin(f, allow_b1=False)
        cert = hm.coefficient_margin(f, allow_b1=True)
        assert cert.certified  # sum = 1*0.5

    def test_b1_magnitude_gate(self):
        f = hm.HarmonicMapSeries(
            hm.AnalyticSeries([0, 1]), hm.AnalyticSeries([0, 1.0])
        )
        with pytest.raises(HypothesisError):
            hm.coefficient_margin(f, allow_b1=True)

    def test_margin_recomputable(self):
        cert = hm.coefficient_margin(monomial_map(3, 0.2))
        assert cert.margin == cert.bound - cert.sum_value
        record = cert.to_record()
        assert record["margin"] == cert.margin


class TestFamilyClosed:
    def test_t41a_reference_value(self):
        spec = hm.FamilySpec("T41a", HP.real(1, 1, 4), 0.2)
        cert = hm.family_k_closed(spec)
        # 0.2 * (Gamma(4)Gamma(1)/Gamma(3)^2) * (1 + 2*1) = 0.9
        assert cert.sum_value == pytest.approx(0.9, abs=1e-12)
        assert cert.certified and not cert.boundary

    def test_t44a_reference_value(self):
        spec = hm.FamilySpec("T44a", HP.real(1, 1, 3), 0.4)
        cert = hm.family_k_closed(spec)
        assert cert.sum_value == pytest.approx(0.8, abs=1e-12)

    def test_hypothesis_gate_names_condition(self):
        spec = hm.FamilySpec("T41a", HP.real(1, 1, 2.5), 0.2)
        with pytest.raises(HypothesisError, match="c > Re\\(a\\+b\\) \\+ 1"):
            hm.family_k_closed(spec)

    def test_alpha_gates(self):
        with pytest.raises(HypothesisError, match="alpha"):
            hm.family_k_closed(hm.FamilySpec("T41a", HP.real(1, 1, 4), 0.7))
        with pytest.raises(HypothesisError, match="alpha"):
            hm.family_k_closed(hm.FamilySpec("T44a", HP.real(1, 1, 3), 1.2))

    def test_t41b_side_condition(self):
        # 2|alpha| ab <= c violated: ab = 4, c = 6, alpha = 0.9
        spec = hm.FamilySpec("T41b", HP.real(2, 2, 6), 0.9)
        with pytest.raises(HypothesisError, match="2\\|alpha\\| ab <= c"):
            hm.family_k_closed(spec)

    def test_t44b_needs_shifted_product(self):
        spec = hm.FamilySpec("T44b", HP.real(1, 1, 3), 0.2)
        with pytest.raises(HypothesisError, match="\\(a-1\\)\\(b-1\\)"):
            hm.family_k_closed(spec)

    def test_conjugate_a_equal_one_rejected(self):
        spec = hm.FamilySpec("T44b", HP(1, 1, 3, "conjugate-pair"), 0.2)
        with pytest.raises(HypothesisError, match="a != 1"):
            hm.family_k_closed(spec)

    @pytest.mark.parametrize(
        "spec",
        CERTIFIED_B1_ZERO_SPECS + CERTIFIED_B1_FREE_SPECS,
        ids=lambda s: f"{s.family}-{s.params.mode}",
    )
    def test_corpus_certified(self, spec):
        assert hm.family_k_closed(spec).certified


class TestSeriesOracle:
    @pytest.mark.parametrize(
        "spec",
        CERTIFIED_B1_ZERO_SPECS + CERTIFIED_B1_FREE_SPECS,
        ids=lambda s: f"{s.family}-{s.params.mode}",
    )
    def test_oracle_equivalence(self, spec):
        closed = hm.family_k_closed(spec)
        series = hm.family_k_series(spec, truncation=20000)
        assert abs(closed.sum_value - series.value) <= series.tail_bound + 1e-8

    def test_polynomial_exact(self):
        spec = hm.FamilySpec("T41a", HP.negative_integer(2, 3), 0.1)
        closed = hm.family_k_closed(spec)
        series = hm.family_k_series(spec)
        assert series.tail_bound == 0.0
        assert abs(closed.sum_value - series.value) <= 1e-12

    def test_alpha_zero_gives_zero(self):
        for fam in hm.criteria.FAMILY_KEYS:
            params = HP.real(0.5, 0.5, 4.0)
            assert hm.family_k_series(hm.FamilySpec(fam, params, 0.0), 2000).value == 0.0

    def test_series_value_is_lower_bound(self):
        spec = hm.FamilySpec("T41a", HP.real(1, 1, 4), 0.2)
        closed = hm.family_k_closed(spec)
        for n in (500, 2000, 20000):
            series = hm.family_k_series(spec, truncation=n)
            assert series.value <= closed.sum_value + 1e-12

    def test_monotone_decreasing_in_c(self):
        # every family's sum decreases strictly in c at fixed a, b, alpha
        for fam, (a, b) in [
            ("T41a", (1.0, 1.0)),
            ("T41b", (0.5, 1.5)),
            ("T41c", (1.0, 2.0)),
            ("T44a", (0.5, 0.5)),
            ("T44b", (2.0, 3.0)),
            ("C46a", (1.0, 1.0)),
            ("C46b", (0.5, 0.5)),
        ]:
            s = a + b
            floor = {"T44a": s, "T44b": max(1.0, s)}.get(fam, s + 1.0)
            cs = np.arange(floor + 0.1, floor + 4.0, 0.1)
            vals = []
            for c in cs:
                spec = hm.FamilySpec(fam, HP.real(a, b, float(c)), 0.01)
                vals.append(hm.family_k_closed(spec).sum_value)
            assert np.all(np.diff(vals) < 0), fam


class TestThresholds:
    def test_c42b_alpha_zero(self):
        roots = hm.threshold_c("C42b", 1.0, 0.0)
        assert roots.root_plus == pytest.approx(3.0, abs=1e-12)
        assert roots.root_minus == pytest.approx(2.0, abs=1e-12)

    def test_c42a_reference(self):
        roots = hm.threshold_c("C42a", 1.0, 0.25)
        assert roots.root_plus == pytest.approx(4.2808, abs=5e-4)

    def test_degenerate_leading_coefficient(self):
        with pytest.raises(DegenerateThresholdError) as info:
            hm.threshold_c("C42a", 1.0, 0.5)
        assert info.value.single_root > 0
        with pytest.raises(DegenerateThresholdError):
            hm.threshold_c("C47", 1.0, 1.0)

    def test_out_of_range_alpha(self):
        with pytest.raises(HypothesisError):
            hm.threshold_c("C42a", 1.0, 0.8)
        with pytest.raises(HypothesisError):
            hm.threshold_c("C47", 2.0, 1.3)

    @pytest.mark.parametrize("family", ["C42a", "C42b", "C47"])
    def test_equality_at_root_and_failure_below(self, family):
        rng = np.random.default_rng(hash(family) % 2**32)
        for _ in range(6):
            b = rng.uniform(0.3, 2.5)
            t = rng.uniform(0.05, 0.45)
            alpha = t * np.exp(1j * rng.uniform(0, 2 * np.pi))
            roots = hm.threshold_c(family, b, alpha)
            at_root = hm.threshold_parent_certificate(family, b, alpha, roots.root_plus)
            assert abs(at_root.sum_value - 1.0) < 1e-9
            assert at_root.certified and at_root.boundary
            below = hm.threshold_parent_certificate(
                family, b, alpha, roots.root_plus - 0.01
            )
            assert below.sum_value > 1.0
            assert not below.certified

    def test_c47_root_against_direct_solve(self):
        # direct quadratic: (1-t)c^2 - (2b+3-t)c + (b+1)(b+2) = 0
        b, t = 1.0, 0.5
        roots = hm.threshold_c("C47", b, t)
        expected = (9 + np.sqrt(33)) / 2
        assert roots.root_plus == pytest.approx(expected, abs=1e-12)


class TestCrossModuleMargin:
    @pytest.mark.parametrize(
        "spec", CERTIFIED_B1_ZERO_SPECS, ids=lambda s: f"{s.family}-{s.params.mode}"
    )
    def test_truncated_family_margin_with_tail(self, spec):
        # truncated coefficient sum + certified tail stays within the bound
        f = hm.hypergeometric_family(spec, truncation=2048)
        cert = hm.coefficient_margin(f, allow_b1=False)
        series = hm.family_k_series(spec, truncation=2048)
        assert cert.sum_value + series.tail_bound <= 1.0 + 1e-9

    def test_certificate_serialization(self):
        cert = hm.family_k_closed(hm.FamilySpec("T41a", HP.real(1, 1, 4), 0.2))
        text = hm.format_certificate(cert)
        assert "criterion : T41a" in text
        assert "certified" in text
        record = cert.to_record()
        assert record["verdict"] == "certified"
        assert record["note"].startswith("one-sided")
