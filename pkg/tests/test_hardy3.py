import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contextnet.errors import OutOfDomain
from contextnet.hardy3 import (
    HardyScenario,
    ScenarioParams,
    build_scenario,
    chain_rule_residual,
    f_expansion_residual,
    nf_relation_residual,
    predicted_f3,
    predicted_nf3,
    predicted_paradox,
    verify_all,
)
from contextnet.hilbert import born_probability, inner
from contextnet.report import report_to_json

interior = st.floats(min_value=0.01, max_value=0.99)
phases = st.floats(min_value=0.0, max_value=2.0 * math.pi)

scenario_params = st.builds(
    ScenarioParams, alpha=interior, beta=interior, phase_d1=phases, phase_d2=phases
)


@pytest.fixture(scope="module")
def center() -> HardyScenario:
    return build_scenario(ScenarioParams(0.5, 0.5))


class TestScenarioParams:
    @pytest.mark.parametrize("alpha,beta", [(0.0, 0.5), (1.0, 0.5), (0.5, 0.0), (0.5, 1.0)])
    def test_boundaries_rejected(self, alpha, beta):
        with pytest.raises(OutOfDomain):
            ScenarioParams(alpha, beta)

    def test_near_boundary_rejected(self):
        with pytest.raises(OutOfDomain):
            ScenarioParams(1e-10, 0.5)

    def test_round_trip(self):
        p = ScenarioParams(0.37, 0.81, 1.1, 2.2)
        assert ScenarioParams.from_dict(p.to_dict()) == p

    def test_from_dict_defaults_phases(self):
        p = ScenarioParams.from_dict({"alpha": 0.5, "beta": 0.25})
        assert p.phase_d1 == 0.0 and p.phase_d2 == 0.0

    def test_from_dict_rejects_unknown_keys(self):
        with pytest.raises(ValueError):
            ScenarioParams.from_dict({"alpha": 0.5, "beta": 0.5, "gamma": 1.0})

    def test_from_dict_requires_both_magnitudes(self):
        with pytest.raises(ValueError):
            ScenarioParams.from_dict({"alpha": 0.5})


class TestBuildScenario:
    def test_central_context_is_standard_basis(self, center):
        assert np.array_equal(center.k1.components, [1, 0, 0])
        assert np.array_equal(center.k2.components, [0, 1, 0])
        assert np.array_equal(center.k3.components, [0, 0, 1])

    def test_defining_magnitudes(self):
        s = build_scenario(ScenarioParams(0.25, 0.5))
        assert inner(s.k1, s.d1) == 0.0
        assert abs(inner(s.d1, s.k3)) ** 2 == pytest.approx(0.25, abs=1e-15)
        assert inner(s.k2, s.d2) == 0.0
        assert abs(inner(s.d2, s.k3)) ** 2 == pytest.approx(0.5, abs=1e-15)

    @given(params=scenario_params)
    @settings(max_examples=80, deadline=None)
    def test_defining_orthogonalities(self, params):
        s = build_scenario(params)
        for u, v in [
            (s.k1, s.d1), (s.k2, s.d2),
            (s.s1, s.k1), (s.s1, s.d1),
            (s.s2, s.k2), (s.s2, s.d2),
            (s.f, s.s1), (s.f, s.s2),
            (s.n_f, s.d1), (s.n_f, s.d2),
        ]:
            assert abs(inner(u, v)) < 1e-10

    @given(params=scenario_params)
    @settings(max_examples=80, deadline=None)
    def test_all_nine_normalized(self, params):
        s = build_scenario(params)
        for v in s.vectors.values():
            assert abs(v.norm() - 1.0) < 1e-12

    def test_vectors_dict_has_nine_labels(self, center):
        assert set(center.vectors) == {"1", "2", "3", "D1", "D2", "S1", "S2", "f", "N_f"}

    def test_deterministic(self):
        p = ScenarioParams(0.37, 0.81, 1.1, 2.2)
        a, b = build_scenario(p), build_scenario(p)
        assert a == b


class TestChainRule:
    def test_residual_tiny_at_center(self, center):
        assert chain_rule_residual(center) < 1e-12

    def test_center_overlap_is_alpha_beta(self, center):
        # |<D1|D2>|^2 = alpha * beta = 1/4
        assert abs(inner(center.d1, center.d2)) ** 2 == pytest.approx(0.25, abs=1e-14)

    def test_phase_randomized(self):
        s = build_scenario(ScenarioParams(0.5, 0.5, 0.7, -1.3))
        assert chain_rule_residual(s) < 1e-12

    @given(params=scenario_params)
    @settings(max_examples=80, deadline=None)
    def test_identity_holds_everywhere(self, params):
        assert chain_rule_residual(build_scenario(params)) < 1e-12


class TestFExpansion:
    @pytest.mark.parametrize("alpha,beta", [(0.5, 0.5), (0.3, 0.8)])
    def test_zero_phase_cases(self, alpha, beta):
        assert f_expansion_residual(build_scenario(ScenarioParams(alpha, beta))) < 1e-12

    @given(params=scenario_params)
    @settings(max_examples=80, deadline=None)
    def test_identity_holds_everywhere(self, params):
        assert f_expansion_residual(build_scenario(params)) < 1e-12


class TestNfRelations:
    @pytest.mark.parametrize("alpha,beta", [(0.5, 0.5), (0.25, 0.75)])
    def test_zero_phase_cases(self, alpha, beta):
        assert nf_relation_residual(build_scenario(ScenarioParams(alpha, beta))) < 1e-12

    def test_random_ensemble(self):
        rng = np.random.default_rng(7)
        for _ in range(1000):
            alpha, beta = rng.uniform(0.01, 0.99, size=2)
            ph1, ph2 = rng.uniform(0.0, 2.0 * math.pi, size=2)
            s = build_scenario(ScenarioParams(alpha, beta, ph1, ph2))
            assert nf_relation_residual(s) < 1e-10


class TestPredictedFormulas:
    def test_nf3_frozen_values(self):
        assert predicted_nf3(0.5, 0.5) == pytest.approx(1 / 3, abs=1e-15)
        # (3/4 * 3/4) / (15/16) = 3/5
        assert predicted_nf3(0.25, 0.25) == pytest.approx(3 / 5, abs=1e-15)

    def test_f3_frozen_values(self):
        assert predicted_f3(0.5, 0.5) == pytest.approx(1 / 3, abs=1e-15)
        # (1/16) / (7/16) = 1/7
        assert predicted_f3(0.25, 0.25) == pytest.approx(1 / 7, abs=1e-15)

    def test_paradox_frozen_values(self):
        assert predicted_paradox(0.5, 0.5) == pytest.approx(1 / 9, abs=1e-15)
        # (3/5) * (1/7) = 3/35
        assert predicted_paradox(0.25, 0.25) == pytest.approx(3 / 35, abs=1e-15)

    @given(alpha=interior, beta=interior)
    def test_symmetry(self, alpha, beta):
        assert predicted_nf3(alpha, beta) == pytest.approx(predicted_nf3(beta, alpha), abs=1e-15)
        assert predicted_f3(alpha, beta) == pytest.approx(predicted_f3(beta, alpha), abs=1e-15)
        assert predicted_paradox(alpha, beta) == pytest.approx(
            predicted_paradox(beta, alpha), abs=1e-15
        )

    @given(alpha=interior, beta=interior)
    def test_factorization_identity(self, alpha, beta):
        assert abs(
            predicted_paradox(alpha, beta) - predicted_nf3(alpha, beta) * predicted_f3(alpha, beta)
        ) < 1e-14

    @pytest.mark.parametrize("fn", [predicted_nf3, predicted_f3, predicted_paradox])
    def test_out_of_domain(self, fn):
        with pytest.raises(OutOfDomain):
            fn(0.0, 0.5)
        with pytest.raises(OutOfDomain):
            fn(0.5, 1.0)


class TestFormulaAgainstVectors:
    """The closed forms must match magnitudes computed from the raw vectors."""

    @given(params=scenario_params)
    @settings(max_examples=100, deadline=None)
    def test_three_magnitudes(self, params):
        s = build_scenario(params)
        assert abs(predicted_nf3(params.alpha, params.beta) - abs(inner(s.k3, s.n_f)) ** 2) < 1e-10
        assert abs(predicted_f3(params.alpha, params.beta) - abs(inner(s.f, s.k3)) ** 2) < 1e-10
        assert abs(
            predicted_paradox(params.alpha, params.beta) - abs(inner(s.f, s.n_f)) ** 2
        ) < 1e-10

    @given(alpha=interior, beta=interior, ph1=phases, ph2=phases)
    @settings(max_examples=60, deadline=None)
    def test_phase_invariance(self, alpha, beta, ph1, ph2):
        plain = build_scenario(ScenarioParams(alpha, beta))
        rotated = build_scenario(ScenarioParams(alpha, beta, ph1, ph2))
        for a, b in [(plain, rotated)]:
            assert abs(
                abs(inner(a.f, a.n_f)) ** 2 - abs(inner(b.f, b.n_f)) ** 2
            ) < 1e-12
            assert abs(
                abs(inner(a.k3, a.n_f)) ** 2 - abs(inner(b.k3, b.n_f)) ** 2
            ) < 1e-12
            assert abs(
                abs(inner(a.f, a.k3)) ** 2 - abs(inner(b.f, b.k3)) ** 2
            ) < 1e-12

    @given(params=scenario_params)
    @settings(max_examples=80, deadline=None)
    def test_both_paths_to_f3_agree(self, params):
        s = build_scenario(params)
        via_d1 = inner(s.f, s.d1) * inner(s.d1, s.k3)
        via_d2 = inner(s.f, s.d2) * inner(s.d2, s.k3)
        assert abs(via_d1 - via_d2) < 1e-12

    @given(params=scenario_params)
    @settings(max_examples=80, deadline=None)
    def test_f_normalization_relation(self, params):
        s = build_scenario(params)
        total = (
            abs(inner(s.f, s.d1)) ** 2
            + abs(inner(s.f, s.d2)) ** 2
            - abs(inner(s.f, s.k3)) ** 2
        )
        assert abs(total - 1.0) < 1e-12

    @given(params=scenario_params)
    @settings(max_examples=80, deadline=None)
    def test_nf_never_joins_central_context(self, params):
        s = build_scenario(params)
        w = abs(inner(s.k3, s.n_f)) ** 2
        assert w >= predicted_nf3(params.alpha, params.beta) - 1e-10
        assert w > 0.0


class TestEqualSuperposition:
    def test_center_coefficients_are_thirds(self, center):
        for k in (center.k1, center.k2, center.k3):
            assert abs(inner(k, center.n_f)) ** 2 == pytest.approx(1 / 3, abs=1e-12)

    def test_off_center_coefficients(self):
        s = build_scenario(ScenarioParams(0.25, 0.25))
        # beta (1-alpha) / (1-alpha beta) = 1/5 for both side coefficients
        assert abs(inner(s.k1, s.n_f)) ** 2 == pytest.approx(1 / 5, abs=1e-12)
        assert abs(inner(s.k2, s.n_f)) ** 2 == pytest.approx(1 / 5, abs=1e-12)
        assert abs(inner(s.k3, s.n_f)) ** 2 == pytest.approx(3 / 5, abs=1e-12)

    def test_born_probability_route(self, center):
        assert born_probability(center.n_f, center.f) == pytest.approx(1 / 9, abs=1e-12)


class TestVerifyAll:
    def test_center_report(self, center):
        report = verify_all(center)
        eq16 = report.relation("eq16")
        assert eq16.formula_value == pytest.approx(1 / 9, abs=1e-12)
        assert eq16.direct_value == pytest.approx(1 / 9, abs=1e-12)
        assert eq16.residual < 1e-12
        assert report.max_residual() < 1e-10

    def test_expected_relation_ids(self, center):
        ids = [r.id for r in verify_all(center).relations]
        assert ids == [
            "eq3", "eq6", "eq9", "eq10a", "eq10b", "eq11a", "eq11b",
            "eq12", "eq13a", "eq13b", "eq14", "eq15", "eq16",
        ]

    def test_phase_randomized_report(self):
        s = build_scenario(ScenarioParams(0.37, 0.81, 1.1, 2.2))
        assert verify_all(s).max_residual() < 1e-10

    def test_reports_are_identical_across_runs(self):
        p = ScenarioParams(0.37, 0.81, 1.1, 2.2)
        first = verify_all(build_scenario(p))
        second = verify_all(build_scenario(p))
        assert first == second

    def test_json_schema(self, center):
        doc = report_to_json(verify_all(center))
        assert doc["phase_canon"] == "first-nonzero-real-positive"
        assert {"phase_canon", "tool_version"} <= set(doc["metadata"])
        assert "timestamp" not in doc["metadata"]
        for rel in doc["relations"]:
            assert set(rel) == {"id", "formula", "direct", "residual"}

    def test_json_residual_recomputable(self, center):
        def as_complex(x):
            return complex(x[0], x[1]) if isinstance(x, list) else complex(x)

        for rel in report_to_json(verify_all(center))["relations"]:
            recomputed = abs(as_complex(rel["formula"]) - as_complex(rel["direct"]))
            assert recomputed == pytest.approx(rel["residual"], abs=1e-15)

    def test_timestamp_only_when_requested(self, center):
        doc = report_to_json(verify_all(center), timestamp="2026-08-10T00:00:00+00:00")
        assert doc["metadata"]["timestamp"] == "2026-08-10T00:00:00+00:00"
