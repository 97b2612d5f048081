import math
from fractions import Fraction as F

import pytest

from historyvalue import (
    best_equilibrium_payoffs,
    check_equivalence,
    corpus,
    induced_belief_distribution,
    maximize_concave,
    argmax_unit_interval,
    max_social_value,
    optimal_eps_agent,
    optimal_eps_social,
    random_structure,
    single_signal_payoff,
    split_to_ternary,
    ternary_social_value,
    ternary_structure,
    ternary_value_i,
    uninformative_mass,
    validate_structure,
    verify_dominance,
)
from historyvalue.errors import NonFiniteEvaluation

HALF = F(1, 2)


def sym_binary():
    return validate_structure({"s1": (F(2, 3), F(1, 3)), "s2": (F(1, 3), F(2, 3))})


def one_sided_quarter():
    # beliefs {1/4, 1}: conclusive-high mass 2/3, interior belief 1/4
    return validate_structure({"hi": (F(2, 3), F(0)), "int": (F(1, 3), F(1))})


class TestSplit:
    def test_symmetric_binary(self):
        split = split_to_ternary(sym_binary())
        assert uninformative_mass(split) == F(2, 3)
        d = induced_belief_distribution(split)
        assert d.atoms == (
            (F(0), F(0), F(1, 3)),
            (HALF, F(2, 3), F(2, 3)),
            (F(1), F(1, 3), F(0)),
        )

    def test_ternary_fixed_point(self):
        pi = ternary_structure(F(2, 5))
        split = split_to_ternary(pi)
        assert induced_belief_distribution(split) == induced_belief_distribution(pi)

    def test_full_information_passthrough(self):
        pi = validate_structure({"a": (F(1), F(0)), "b": (F(0), F(1))})
        split = split_to_ternary(pi)
        assert induced_belief_distribution(split) == induced_belief_distribution(pi)

    def test_preserves_single_signal_payoff(self):
        for s in corpus(7, 40):
            assert single_signal_payoff(split_to_ternary(s)) == single_signal_payoff(s)

    def test_output_beliefs_ternary(self):
        for s in corpus(11, 40):
            assert uninformative_mass(split_to_ternary(s)) is not None

    def test_bayes_plausible_per_signal(self):
        # conditional mean of the post-split belief given the original
        # signal equals the original belief
        for s in corpus(13, 30):
            for _sig, ph, pl in s.items():
                if ph == 0 and pl == 0:
                    continue
                belief = ph / (ph + pl)
                mid = min(ph, pl)
                hi = max(F(0), ph - pl)
                lo = max(F(0), pl - ph)
                total = 2 * mid + hi + lo  # unconditional mass, scaled by 2
                mean = (2 * mid * HALF + hi * 1 + lo * 0) / total
                assert mean == belief


class TestEquivalence:
    def test_one_sided_matches_ternary(self):
        report = check_equivalence(one_sided_quarter(), ternary_structure(F(1, 3)))
        assert report.equivalent and report.condition == "low-side"
        assert report.values_match

    def test_different_eps_not_equivalent(self):
        report = check_equivalence(ternary_structure(F(1, 3)), ternary_structure(F(1, 2)))
        assert not report.equivalent
        assert report.single_a != report.single_b

    def test_reflexive(self):
        report = check_equivalence(sym_binary(), sym_binary())
        assert report.equivalent and report.condition == "identical"
        assert report.values_match


class TestTernaryClosedForms:
    def test_value_i(self):
        assert ternary_value_i(HALF, 2) == F(1, 16)
        assert ternary_value_i(F(0), 5) == 0
        assert ternary_value_i(F(1), 5) == 0

    def test_value_i_matches_engine(self):
        for eps in (F(1, 4), F(3, 5)):
            p = best_equilibrium_payoffs(ternary_structure(eps), 5)
            for i in range(1, 6):
                assert p.history_value[i - 1] == ternary_value_i(eps, i)

    def test_social_value(self):
        assert ternary_social_value(HALF, HALF) == F(1, 24)
        assert ternary_social_value(F(0), F(3, 4)) == 0
        # maximum at delta = 3/4 is attained at eps = 2/3 with value 1/12
        assert ternary_social_value(F(2, 3), F(3, 4)) == F(1, 12)


class TestOptima:
    def test_agent_two(self):
        assert optimal_eps_agent(2).eps == 0.5

    def test_agent_one_degenerate(self):
        opt = optimal_eps_agent(1)
        assert opt.degenerate and opt.eps == 1.0

    @pytest.mark.parametrize("i", range(2, 9))
    def test_agent_matches_numeric_argmax(self, i):
        got = argmax_unit_interval(lambda e: ternary_value_i(e, i), F(1, 10**10))
        assert abs(float(got.argmax) - optimal_eps_agent(i).eps) < 1e-8

    def test_social_closed_form(self):
        assert optimal_eps_social(F(3, 4)) == pytest.approx(2 / 3, abs=1e-12)
        assert optimal_eps_social(HALF) == pytest.approx(2 - math.sqrt(2), abs=1e-12)
        assert optimal_eps_social(F(1, 10**6)) == pytest.approx(0.5, abs=1e-6)

    def test_social_monotone_in_delta(self):
        grid = [F(k, 100) for k in range(5, 100, 5)]
        values = [optimal_eps_social(d) for d in grid]
        assert values == sorted(values)
        assert all(x < y for x, y in zip(values, values[1:]))

    def test_max_social_value(self):
        assert max_social_value(F(3, 4)) == pytest.approx(1 / 12, abs=1e-12)


class TestMaximizeConcave:
    def test_social_objective(self):
        got = maximize_concave(lambda e: ternary_social_value(e, F(3, 4)), F(1, 10**9))
        assert abs(float(got.argmax) - 2 / 3) < 1e-9

    def test_agent_two_objective(self):
        got = maximize_concave(lambda e: ternary_value_i(e, 2), F(1, 10**9))
        assert abs(float(got.argmax) - 0.5) < 1e-9

    def test_flat_objective(self):
        got = maximize_concave(lambda e: F(1, 7), F(1, 10**6))
        assert got.flat
        assert 0 <= got.argmax <= 1

    def test_non_finite(self):
        with pytest.raises(NonFiniteEvaluation):
            maximize_concave(lambda e: float("nan"), F(1, 100))


class TestDominance:
    def test_symmetric_binary_strict(self):
        report = verify_dominance(sym_binary(), 3)
        assert report.base_values[1] == 0
        assert report.split_values[1] == F(1, 18)
        assert report.two_sided and report.strict and report.verdict

    def test_ternary_identity(self):
        report = verify_dominance(ternary_structure(F(1, 3)), 4)
        assert report.base_values == report.split_values
        assert report.verdict

    def test_one_sided_equalities(self):
        report = verify_dominance(one_sided_quarter(), 4)
        assert not report.two_sided
        assert report.base_values == report.split_values
        assert report.verdict

    def test_report_serialization(self):
        report = verify_dominance(sym_binary(), 3)
        payload = report.to_json_dict()
        assert payload["verdict"] is True
        assert payload["history_values"][1]["split"] == "1/18"
        assert report.to_csv().splitlines()[2].startswith("2,0/1,1/18")


class TestRandomCorpus:
    def test_deterministic(self):
        a = corpus(42, 10)
        b = corpus(42, 10)
        assert a == b

    def test_valid_structures(self):
        import random

        rng = random.Random(3)
        for _ in range(50):
            s = random_structure(rng)
            assert len(s.signals) <= 4
            assert all(q.denominator <= 12 for q in s.like_high + s.like_low)
