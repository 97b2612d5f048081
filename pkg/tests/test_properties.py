"""Property-based checks of the exact-arithmetic invariants."""

from fractions import Fraction as F

from hypothesis import given, settings
from hypothesis import strategies as st

from historyvalue import (
    best_equilibrium_payoffs,
    compose_beliefs,
    iid_belief_distribution,
    induced_belief_distribution,
    single_signal_payoff,
    split_to_ternary,
    structure_from_json,
    structure_to_json,
    uninformative_mass,
    validate_structure,
)

HALF = F(1, 2)


def fractions(max_den=16):
    return st.builds(
        F,
        st.integers(min_value=0, max_value=max_den),
        st.integers(min_value=1, max_value=max_den),
    ).filter(lambda q: q <= 1)


@st.composite
def structures(draw, max_signals=4, max_den=12):
    k = draw(st.integers(min_value=1, max_value=max_signals))

    def column():
        den = draw(st.integers(min_value=1, max_value=max_den))
        cuts = sorted(
            draw(st.integers(min_value=0, max_value=den)) for _ in range(k - 1)
        )
        bounds = [0] + cuts + [den]
        return [F(b - a, den) for a, b in zip(bounds, bounds[1:])]

    high = column()
    low = column()
    return validate_structure({f"s{j}": (high[j], low[j]) for j in range(k)})


beliefs = fractions()
interior_beliefs = beliefs.filter(lambda q: 0 < q < 1)


@given(a=interior_beliefs, b=interior_beliefs)
def test_compose_commutative(a, b):
    assert compose_beliefs(a, b) == compose_beliefs(b, a)


@given(a=interior_beliefs, b=interior_beliefs, c=interior_beliefs)
def test_compose_associative(a, b, c):
    lhs = compose_beliefs(compose_beliefs(a, b), c)
    rhs = compose_beliefs(a, compose_beliefs(b, c))
    assert lhs == rhs


@given(a=beliefs)
def test_compose_identity(a):
    assert compose_beliefs(a, HALF) == a


@given(s=structures())
def test_bayes_plausibility(s):
    assert induced_belief_distribution(s).mean() == HALF


@given(s=structures(), n=st.integers(min_value=1, max_value=4))
@settings(max_examples=40, deadline=None)
def test_bayes_plausibility_iid(s, n):
    assert iid_belief_distribution(s, n).mean() == HALF


@given(s=structures())
def test_split_preserves_single_signal_payoff(s):
    assert single_signal_payoff(split_to_ternary(s)) == single_signal_payoff(s)


@given(s=structures())
def test_split_is_ternary_and_idempotent(s):
    split = split_to_ternary(s)
    assert uninformative_mass(split) is not None
    assert induced_belief_distribution(split_to_ternary(split)) == induced_belief_distribution(split)


@given(s=structures())
@settings(max_examples=40, deadline=None)
def test_sandwich_and_nonnegative_history_value(s):
    p = best_equilibrium_payoffs(s, 4)
    for i in range(4):
        assert p.single <= p.with_history[i] <= p.benchmark[i]
        assert p.history_value[i] >= 0
        assert p.history_value[i] <= p.benchmark[i] - p.single


@given(s=structures())
@settings(max_examples=40, deadline=None)
def test_split_dominates(s):
    base = best_equilibrium_payoffs(s, 4)
    after = best_equilibrium_payoffs(split_to_ternary(s), 4)
    assert after.single == base.single
    for b, a in zip(base.history_value, after.history_value):
        assert a >= b


@given(s=structures())
def test_json_round_trip(s):
    assert structure_from_json(structure_to_json(s)) == s
