"""Ternary structures, belief splitting, equivalence, and optimal mixing.

A *ternary* structure induces beliefs only in {0, 1/2, 1}: it reveals
the state with probability ``1 - eps`` and says nothing with probability
``eps``, identically in both states.  Any structure can be *split* into
a ternary one that keeps the signal-only payoff unchanged while weakly
raising every agent's gain from history; this module builds that split,
verifies the dominance by exact computation, and locates the mixing
probabilities that maximize individual and discounted aggregate gains.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .beliefs import InformationStructure, induced_belief_distribution, validate_structure
from .errors import NonFiniteEvaluation, ValidationError
from .learning import best_equilibrium_payoffs, single_signal_payoff
from .rationals import HALF, format_decimal, format_rational

LO_ID, MID_ID, HI_ID = "lo", "mid", "hi"


@dataclass(frozen=True)
class TernaryStructure:
    """Mixture of full and no information with uninformative mass ``eps``."""

    eps: Fraction

    def __post_init__(self):
        if not 0 <= self.eps <= 1:
            raise ValidationError(f"eps outside [0, 1]: {self.eps}")

    def to_structure(self) -> InformationStructure:
        e = Fraction(self.eps)
        return validate_structure(
            {
                HI_ID: (1 - e, Fraction(0)),
                MID_ID: (e, e),
                LO_ID: (Fraction(0), 1 - e),
            }
        )


def ternary_structure(eps) -> InformationStructure:
    return TernaryStructure(Fraction(eps)).to_structure()


def split_to_ternary(structure: InformationStructure) -> InformationStructure:
    """Split interior beliefs onto {0, 1/2, 1}, preserving the signal-only payoff.

    Signal by signal, likelihood mass ``min(pH, pL)`` moves to the
    uninformative signal in both states and the residual to the
    conclusive signal on the majority side; the conditional mean of the
    post-split belief equals the original belief.  The output is always
    a ternary structure with uninformative mass ``sum min(pH, pL)``.
    """
    mid = Fraction(0)
    hi = Fraction(0)
    lo = Fraction(0)
    for _s, ph, pl in structure.items():
        mid += min(ph, pl)
        hi += max(Fraction(0), ph - pl)
        lo += max(Fraction(0), pl - ph)
    table = {}
    if hi:
        table[HI_ID] = (hi, Fraction(0))
    if mid:
        table[MID_ID] = (mid, mid)
    if lo:
        table[LO_ID] = (Fraction(0), lo)
    return validate_structure(table)


def uninformative_mass(structure: InformationStructure):
    """The probability of the belief-1/2 signal if ``structure`` is ternary,
    else None."""
    dist = induced_belief_distribution(structure)
    if not set(dist.beliefs()) <= {Fraction(0), HALF, Fraction(1)}:
        return None
    for belief, wh, _wl in dist.atoms:
        if belief == HALF:
            return wh
    return Fraction(0)


# -- equivalence ---------------------------------------------------------------


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of the one-sided-support equivalence test plus cross-check."""

    equivalent: bool
    condition: str  # "identical", "low-side", "high-side", or "none"
    single_a: Fraction
    single_b: Fraction
    history_values_a: tuple
    history_values_b: tuple

    @property
    def values_match(self) -> bool:
        return (
            self.single_a == self.single_b
            and self.history_values_a == self.history_values_b
        )


def check_equivalence(
    a: InformationStructure, b: InformationStructure, horizon: int = 4
) -> EquivalenceReport:
    """Decide equivalence via the one-sided-support conditions.

    Two structures are equivalent when all interior beliefs of both sit
    on the same side of 1/2 (weakly) and the conclusive mass on the
    opposite side matches.  The verdict is cross-validated by comparing
    the signal-only payoff and per-agent history gains up to ``horizon``.
    """
    da = induced_belief_distribution(a)
    db = induced_belief_distribution(b)

    def conclusive_high_mass(dist):
        return sum(wh for bel, wh, _ in dist.atoms if bel == 1)

    def conclusive_low_mass(dist):
        return sum(wl for bel, _, wl in dist.atoms if bel == 0)

    def interior(dist):
        return [bel for bel in dist.beliefs() if 0 < bel < 1]

    condition = "none"
    if da.atoms == db.atoms:
        condition = "identical"
    elif (
        all(x <= HALF for x in interior(da))
        and all(x <= HALF for x in interior(db))
        and conclusive_high_mass(da) == conclusive_high_mass(db)
    ):
        condition = "low-side"
    elif (
        all(x >= HALF for x in interior(da))
        and all(x >= HALF for x in interior(db))
        and conclusive_low_mass(da) == conclusive_low_mass(db)
    ):
        condition = "high-side"

    pa = best_equilibrium_payoffs(a, horizon)
    pb = best_equilibrium_payoffs(b, horizon)
    return EquivalenceReport(
        equivalent=condition != "none",
        condition=condition,
        single_a=pa.single,
        single_b=pb.single,
        history_values_a=pa.history_value,
        history_values_b=pb.history_value,
    )


# -- closed forms for the ternary family ---------------------------------------


def ternary_value_i(eps, i: int) -> Fraction:
    """History gain of agent ``i`` under the ternary structure: (e - e^i)/4."""
    e = Fraction(eps)
    if not 0 <= e <= 1:
        raise ValidationError(f"eps outside [0, 1]: {e}")
    if i < 1:
        raise ValidationError("agent index must be >= 1")
    return (e - e**i) / 4


def ternary_social_value(eps, delta) -> Fraction:
    """Discounted aggregate history gain: d*e*(1-e) / (4*(1-d*e))."""
    e = Fraction(eps)
    d = Fraction(delta)
    if not 0 <= e <= 1:
        raise ValidationError(f"eps outside [0, 1]: {e}")
    if not 0 < d < 1:
        raise ValidationError(f"discount factor must lie in (0, 1): {d}")
    return d * e * (1 - e) / (4 * (1 - d * e))


@dataclass(frozen=True)
class AgentOptimum:
    """Maximizing uninformative mass for one agent's history gain."""

    eps: float
    degenerate: bool  # agent 1 gains nothing from history at any eps


def optimal_eps_agent(i: int) -> AgentOptimum:
    """Uninformative mass maximizing agent ``i``'s history gain.

    The gain ``(e - e^i)/4`` is stationary where ``i * e^(i-1) = 1``,
    i.e. at ``(1/i)^(1/(i-1))``; for ``i = 1`` the gain is identically
    zero and the result is flagged degenerate.
    """
    if i < 1:
        raise ValidationError("agent index must be >= 1")
    if i == 1:
        return AgentOptimum(eps=1.0, degenerate=True)
    return AgentOptimum(eps=(1.0 / i) ** (1.0 / (i - 1)), degenerate=False)


def optimal_eps_social(delta) -> float:
    """Uninformative mass maximizing the aggregate gain: (1 - sqrt(1-d))/d."""
    d = float(delta)
    if not 0 < d < 1:
        raise ValidationError(f"discount factor must lie in (0, 1): {delta}")
    return (1.0 - math.sqrt(1.0 - d)) / d


def max_social_value(delta) -> float:
    """Aggregate gain at the maximizing mass: (1 - sqrt(1-d))^2 / (4*d)."""
    d = float(delta)
    return (1.0 - math.sqrt(1.0 - d)) ** 2 / (4.0 * d)


# -- numeric search ------------------------------------------------------------

_LIMIT = 10**40  # denominator cap for interior probe points


@dataclass(frozen=True)
class SearchResult:
    argmax: Fraction
    value: object
    flat: bool

    def __float__(self) -> float:
        return float(self.argmax)


def maximize_concave(f, tolerance, lo=0, hi=1) -> SearchResult:
    """Golden-section search for the argmax of a unimodal ``f`` on [lo, hi].

    Probe points are exact rationals, so when ``f`` returns exact values
    the bracket shrinks without any floating-point noise; the returned
    point is within ``tolerance`` of the true argmax for unimodal ``f``.
    """
    lo = Fraction(lo)
    hi = Fraction(hi)
    tol = Fraction(tolerance)
    if tol <= 0:
        raise ValidationError("tolerance must be positive")
    invphi = Fraction(math.sqrt(5.0) - 1.0) / 2

    def ev(x):
        y = f(x)
        if isinstance(y, float) and not math.isfinite(y):
            raise NonFiniteEvaluation(f"objective not finite at {float(x)}")
        return y

    seen_min = seen_max = None
    while hi - lo > tol:
        h = hi - lo
        c = (lo + (1 - invphi) * h).limit_denominator(_LIMIT)
        d = (lo + invphi * h).limit_denominator(_LIMIT)
        if not lo < c < d < hi:  # interval too narrow for the denominator cap
            break
        yc, yd = ev(c), ev(d)
        for y in (yc, yd):
            seen_min = y if seen_min is None else min(seen_min, y)
            seen_max = y if seen_max is None else max(seen_max, y)
        if yc > yd:
            hi = d
        else:
            lo = c
    mid = (lo + hi) / 2
    return SearchResult(argmax=mid, value=ev(mid), flat=seen_min == seen_max)


def argmax_unit_interval(f, tolerance, grid: int = 64) -> SearchResult:
    """Coarse grid scan followed by golden-section refinement on [0, 1]."""
    values = [f(Fraction(k, grid)) for k in range(grid + 1)]
    best = max(range(grid + 1), key=lambda k: values[k])
    lo = Fraction(max(best - 1, 0), grid)
    hi = Fraction(min(best + 1, grid), grid)
    result = maximize_concave(f, tolerance, lo, hi)
    flat = result.flat and len(set(values)) == 1
    return SearchResult(argmax=result.argmax, value=result.value, flat=flat)


# -- dominance verification ----------------------------------------------------


@dataclass(frozen=True)
class DominanceReport:
    """Exact comparison of a structure against its ternary split."""

    eps: Fraction  # uninformative mass of the split
    single_base: Fraction
    single_split: Fraction
    base_values: tuple  # per-agent history gains of the original
    split_values: tuple  # per-agent history gains of the split
    two_sided: bool  # original has beliefs strictly on both sides of 1/2

    @property
    def single_preserved(self) -> bool:
        return self.single_base == self.single_split

    @property
    def dominates(self) -> bool:
        return self.single_preserved and all(
            s >= b for b, s in zip(self.base_values, self.split_values)
        )

    @property
    def strict(self) -> bool:
        """Strict improvement for every agent i >= 2."""
        return all(
            s > b for b, s in zip(self.base_values[1:], self.split_values[1:])
        )

    @property
    def verdict(self) -> bool:
        return self.dominates and (self.strict or not self.two_sided)

    def to_json_dict(self) -> dict:
        return {
            "eps": format_rational(self.eps),
            "single_payoff": {
                "base": format_rational(self.single_base),
                "split": format_rational(self.single_split),
            },
            "history_values": [
                {
                    "i": i + 1,
                    "base": format_rational(b),
                    "split": format_rational(s),
                }
                for i, (b, s) in enumerate(zip(self.base_values, self.split_values))
            ],
            "two_sided": self.two_sided,
            "dominates": self.dominates,
            "strict": self.strict,
            "verdict": self.verdict,
        }

    def to_csv(self) -> str:
        lines = ["i,hist_value_base,hist_value_split,hist_value_base_dec,hist_value_split_dec"]
        for i, (b, s) in enumerate(zip(self.base_values, self.split_values)):
            lines.append(
                f"{i + 1},{format_rational(b)},{format_rational(s)},"
                f"{format_decimal(b)},{format_decimal(s)}"
            )
        return "\n".join(lines) + "\n"


def verify_dominance(structure: InformationStructure, horizon: int) -> DominanceReport:
    """Split ``structure`` and compare values agent by agent, exactly."""
    split = split_to_ternary(structure)
    base = best_equilibrium_payoffs(structure, horizon)
    after = best_equilibrium_payoffs(split, horizon)
    beliefs = induced_belief_distribution(structure).beliefs()
    two_sided = any(0 < b < HALF for b in beliefs) and any(
        HALF < b < 1 for b in beliefs
    )
    return DominanceReport(
        eps=uninformative_mass(split),
        single_base=base.single,
        single_split=after.single,
        base_values=base.history_value,
        split_values=after.history_value,
        two_sided=two_sided,
    )


# -- random corpus -------------------------------------------------------------


def random_structure(
    rng: random.Random, max_signals: int = 4, max_denominator: int = 12
) -> InformationStructure:
    """Random structure with small-denominator rational likelihoods."""
    k = rng.randint(1, max_signals)

    def column():
        den = rng.randint(1, max_denominator)
        cuts = sorted(rng.randint(0, den) for _ in range(k - 1))
        bounds = [0] + cuts + [den]
        return [Fraction(b - a, den) for a, b in zip(bounds, bounds[1:])]

    high = column()
    low = column()
    return validate_structure(
        {f"s{j}": (high[j], low[j]) for j in range(k)}
    )


def corpus(seed: int, count: int, max_signals: int = 4, max_denominator: int = 12):
    """Deterministic list of random structures for dominance sweeps."""
    rng = random.Random(seed)
    return [random_structure(rng, max_signals, max_denominator) for _ in range(count)]
