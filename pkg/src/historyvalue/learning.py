"""Equilibrium play over the public-belief tree and payoff accounting.

Agents act in sequence.  Each sees the full action history (summarized
by a public likelihood pair), receives a private signal, and takes the
action that is myopically optimal for the combined posterior: action 1
when the posterior exceeds 1/2, action 0 below, with a tie-break rule at
exactly 1/2.  Because payoffs depend only on an agent's own action,
myopic play is a Bayes-Nash equilibrium; the only strategic freedom is
how ties are broken, which changes what successors can infer.

Computed quantities, all exact rationals:

* ``single_signal_payoff`` -- expected payoff from the private signal alone;
* ``full_observation_payoff`` -- benchmark payoff of an agent who sees
  ``i`` i.i.d. signals directly (an upper bound on equilibrium payoffs);
* ``simulate_equilibrium`` -- per-agent payoffs under a fixed tie rule;
* ``best_equilibrium_payoffs`` -- lexicographically best payoffs over
  all deterministic per-node tie-break tables;
* ``social_value`` -- discounted aggregate of the per-agent history gains.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .beliefs import (
    InformationStructure,
    iid_belief_distribution,
    induced_belief_distribution,
)
from .errors import (
    HorizonCapExceeded,
    IncompleteTieBreakTable,
    TooManyIndifferenceNodes,
    ValidationError,
)
from .rationals import HALF, QUARTER, format_rational, format_decimal

#: Horizon cap for fixed-rule simulation.
HORIZON_CAP = 12
#: Horizon cap for the lexicographic tie-break enumeration.
LEX_CAP = 8
#: Bound on enumerated tie-break assignments in one search.
MAX_TIE_PROFILES = 20000

# Fixed tie-break rules; a per-node table is a dict
# {(depth, public_belief, private_belief): action}.
ACTION1 = "action1"
ACTION0 = "action0"
FOLLOW_SIGNAL = "follow-signal"


@dataclass(frozen=True)
class PayoffProfile:
    """Per-agent value accounting for one structure and horizon.

    ``single`` is the signal-only payoff; ``with_history[i-1]`` the
    equilibrium payoff of agent ``i``; ``benchmark[i-1]`` the payoff
    from observing ``i`` signals directly; ``history_value[i-1]`` the
    gain from history, ``with_history - single``.
    """

    single: Fraction
    with_history: tuple
    benchmark: tuple
    history_value: tuple

    @property
    def horizon(self) -> int:
        return len(self.with_history)

    def to_csv(self) -> str:
        """Export: columns i, V_i, Vbar_i, hist_value_i (exact + decimal)."""
        lines = [
            "i,V_i,Vbar_i,hist_value_i,V_i_dec,Vbar_i_dec,hist_value_i_dec"
        ]
        for i in range(self.horizon):
            v, vb, h = self.with_history[i], self.benchmark[i], self.history_value[i]
            lines.append(
                f"{i + 1},{format_rational(v)},{format_rational(vb)},{format_rational(h)},"
                f"{format_decimal(v)},{format_decimal(vb)},{format_decimal(h)}"
            )
        return "\n".join(lines) + "\n"


def single_signal_payoff(structure: InformationStructure) -> Fraction:
    """Expected payoff of an agent acting on one private signal only.

    Equals the mass of beliefs strictly above 1/2 weighted by their edge
    over the cutoff; 1/4 for conclusive signals, 0 for uninformative ones.
    """
    dist = induced_belief_distribution(structure)
    total = Fraction(0)
    for belief, wh, wl in dist.atoms:
        if belief > HALF:
            total += (belief - HALF) * (wh + wl) / 2
    return total


def full_observation_payoff(structure: InformationStructure, i: int, cap: int = 16) -> Fraction:
    """Payoff of an agent who directly observes ``i`` i.i.d. signals."""
    dist = iid_belief_distribution(structure, i, cap=cap)
    total = Fraction(0)
    for belief, wh, wl in dist.atoms:
        gain = belief - HALF
        if gain > 0:
            total += gain * (wh + wl) / 2
    return total


def _chooser(rule):
    """Turn a tie-break rule into ``choose(depth, public, private) -> action``."""
    if rule == ACTION1:
        return lambda d, q, x: 1
    if rule == ACTION0:
        return lambda d, q, x: 0
    if rule == FOLLOW_SIGNAL:
        # Follow the private signal's direction; an exactly uninformative
        # private belief defaults to action 1.
        return lambda d, q, x: 1 if x >= HALF else 0
    if isinstance(rule, dict):
        def choose(d, q, x):
            try:
                return rule[(d, q, x)]
            except KeyError:
                raise IncompleteTieBreakTable(
                    f"no tie-break entry for depth {d}, public {q}, private {x}"
                ) from None
        return choose
    raise ValidationError(f"unknown tie-break rule: {rule!r}")


def _advance(level, atoms, depth, choose):
    """Play one generation.

    ``level`` maps public belief -> [like_high, like_low] (probability of
    reaching that public state in each state of the world).  Returns the
    agent's ex-ante payoff, the next level, and the indifference points
    ``(public, private)`` encountered.
    """
    payoff = Fraction(0)
    nxt = {}
    indifference = []
    for public, (lh, ll) in level.items():
        sums = {1: [Fraction(0), Fraction(0)], 0: [Fraction(0), Fraction(0)]}
        for private, wh, wl in atoms:
            ph = lh * wh
            pl = ll * wl
            if ph == 0 and pl == 0:
                continue
            composed = ph / (ph + pl)
            if composed > HALF:
                action = 1
            elif composed < HALF:
                action = 0
            else:
                indifference.append((public, private))
                action = choose(depth, public, private)
            if action == 1:
                payoff += (ph - pl) / 4
            sums[action][0] += wh
            sums[action][1] += wl
        for action in (1, 0):
            ch = lh * sums[action][0]
            cl = ll * sums[action][1]
            if ch == 0 and cl == 0:
                continue
            belief = ch / (ch + cl)
            node = nxt.setdefault(belief, [Fraction(0), Fraction(0)])
            node[0] += ch
            node[1] += cl
    return payoff, nxt, indifference


def _check_level(level):
    # Tree consistency: reach probabilities sum to one in each state.
    assert sum(v[0] for v in level.values()) == 1
    assert sum(v[1] for v in level.values()) == 1


def simulate_equilibrium(
    structure: InformationStructure,
    horizon: int,
    rule=ACTION1,
    horizon_cap: int = HORIZON_CAP,
) -> PayoffProfile:
    """Per-agent equilibrium payoffs under a fixed tie-break rule.

    Builds the public-belief tree forward, merging histories with equal
    public beliefs.  Every non-tie action is the strict best response by
    construction; ties are resolved by ``rule``.
    """
    if horizon > horizon_cap:
        raise HorizonCapExceeded(f"horizon {horizon} exceeds cap {horizon_cap}")
    choose = _chooser(rule)
    atoms = induced_belief_distribution(structure).atoms
    level = {HALF: [Fraction(1), Fraction(1)]}
    values = []
    for depth in range(horizon):
        _check_level(level)
        payoff, level, _ = _advance(level, atoms, depth, choose)
        values.append(payoff)
    single = values[0] if values else single_signal_payoff(structure)
    benchmark = tuple(full_observation_payoff(structure, i) for i in range(1, horizon + 1))
    return PayoffProfile(
        single=single,
        with_history=tuple(values),
        benchmark=benchmark,
        history_value=tuple(v - single for v in values),
    )


def best_equilibrium_payoffs(
    structure: InformationStructure,
    horizon: int,
    lex_cap: int = LEX_CAP,
    max_profiles: int = MAX_TIE_PROFILES,
) -> PayoffProfile:
    """Lexicographically best per-agent payoffs over tie-break tables.

    Enumerates every deterministic assignment of actions to reachable
    indifference points, depth by depth, and selects the payoff vector
    maximal in lexicographic order (earlier agents first).  An agent's
    own tie-break never changes that agent's payoff, only what later
    agents can learn, so this realizes the greedy forward selection.
    """
    if horizon > lex_cap:
        raise HorizonCapExceeded(f"horizon {horizon} exceeds lexicographic cap {lex_cap}")
    atoms = induced_belief_distribution(structure).atoms
    root = {HALF: [Fraction(1), Fraction(1)]}
    vectors = []
    counter = itertools.count(1)

    def explore(level, depth, acc):
        if depth == horizon:
            if next(counter) > max_profiles:
                raise TooManyIndifferenceNodes(
                    f"more than {max_profiles} tie-break profiles", count=max_profiles
                )
            vectors.append(tuple(acc))
            return
        _check_level(level)
        # Discover reachable indifference points with a throwaway pass.
        _, _, points = _advance(level, atoms, depth, lambda d, q, x: 1)
        for assignment in itertools.product((1, 0), repeat=len(points)):
            table = dict(zip(((depth, q, x) for q, x in points), assignment))
            choose = _chooser(table) if points else (lambda d, q, x: 1)
            payoff, nxt, _ = _advance(level, atoms, depth, choose)
            explore(nxt, depth + 1, acc + [payoff])

    explore(root, 0, [])
    best = max(vectors)
    single = best[0]
    benchmark = tuple(full_observation_payoff(structure, i) for i in range(1, horizon + 1))
    return PayoffProfile(
        single=single,
        with_history=best,
        benchmark=benchmark,
        history_value=tuple(v - single for v in best),
    )


@dataclass(frozen=True)
class BoundedValue:
    """A value together with a certified absolute error bound (0 = exact)."""

    value: Fraction
    error_bound: Fraction

    @property
    def exact(self) -> bool:
        return self.error_bound == 0

    def __float__(self) -> float:
        return float(self.value)


def _ternary_mid_probability(structure: InformationStructure):
    """Return the uninformative-signal probability if the structure only
    induces beliefs in {0, 1/2, 1}, else None."""
    dist = induced_belief_distribution(structure)
    allowed = {Fraction(0), HALF, Fraction(1)}
    if not set(dist.beliefs()) <= allowed:
        return None
    for belief, wh, _wl in dist.atoms:
        if belief == HALF:
            return wh
    return Fraction(0)


def social_value(
    structure: InformationStructure,
    delta: Fraction,
    tolerance,
    lex_cap: int = LEX_CAP,
) -> BoundedValue:
    """Discounted aggregate history gain, ``(1-d) * sum d^(i-1) * gain_i``.

    Structures whose beliefs live on {0, 1/2, 1} admit an exact closed
    form ``d*e*(1-e) / (4*(1-d*e))`` and return error bound 0.  Otherwise
    the series is truncated at a depth whose tail bound ``d^N / 4`` (each
    per-agent gain lies in [0, 1/4]) is below ``tolerance``.
    """
    delta = Fraction(delta)
    if not 0 < delta < 1:
        raise ValidationError(f"discount factor must lie in (0, 1): {delta}")
    tolerance = Fraction(tolerance)
    if tolerance <= 0:
        raise ValidationError("tolerance must be positive")

    eps = _ternary_mid_probability(structure)
    if eps is not None:
        value = delta * eps * (1 - eps) / (4 * (1 - delta * eps))
        return BoundedValue(value, Fraction(0))

    depth = 1
    tail = QUARTER * delta
    while tail > tolerance:
        depth += 1
        tail *= delta
        if depth > lex_cap:
            raise HorizonCapExceeded(
                f"tolerance {tolerance} needs horizon {depth} > cap {lex_cap}",
                achievable_tolerance=QUARTER * delta**lex_cap,
            )
    profile = best_equilibrium_payoffs(structure, depth, lex_cap=lex_cap)
    partial = (1 - delta) * sum(
        delta**i * g for i, g in enumerate(profile.history_value)
    )
    return BoundedValue(partial, QUARTER * delta**depth)
