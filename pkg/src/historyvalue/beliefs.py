"""Exact-rational information structures and Bayesian updating.

The world has two states, low and high, with a uniform prior.  An
information structure is a finite signal alphabet together with the
likelihood of each signal in each state.  Beliefs are probabilities of
the high state, represented exactly as ``Fraction``.

Every operation here is pure and introduces no rounding.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CapExceeded,
    ContradictoryConclusiveBeliefs,
    EmptyAlphabet,
    NegativeLikelihood,
    NonStochastic,
    ParseError,
    ValidationError,
    ZeroProbabilitySignal,
)
from .rationals import HALF, format_rational, parse_rational

ONE = Fraction(1)

#: Default cap on the number of composed i.i.d. draws.
IID_CAP = 16


def as_belief(value) -> Fraction:
    """Validate and return a belief (probability of the high state)."""
    p = Fraction(value)
    if not 0 <= p <= 1:
        raise ValidationError(f"belief outside [0, 1]: {p}")
    return p


@dataclass(frozen=True)
class InformationStructure:
    """Finite signal alphabet with per-state exact likelihoods.

    ``like_high[k]`` / ``like_low[k]`` are the probabilities of signal
    ``signals[k]`` in the high / low state.  Each column sums to one.
    Construct via :func:`validate_structure` (or ``from_table``).
    """

    signals: tuple
    like_high: tuple
    like_low: tuple

    @classmethod
    def from_table(cls, table) -> "InformationStructure":
        return validate_structure(table)

    def likelihoods(self, signal):
        k = self.signals.index(signal)
        return self.like_high[k], self.like_low[k]

    def items(self):
        return zip(self.signals, self.like_high, self.like_low)


def validate_structure(table) -> InformationStructure:
    """Check a raw ``{signal: (p_high, p_low)}`` table and canonicalize it.

    Raises ``EmptyAlphabet``, ``NegativeLikelihood`` or ``NonStochastic``
    when the table is not a valid pair of probability columns.
    """
    if not table:
        raise EmptyAlphabet("at least one signal is required")
    signals = tuple(table.keys())
    like_high = tuple(Fraction(table[s][0]) for s in signals)
    like_low = tuple(Fraction(table[s][1]) for s in signals)
    for s, ph, pl in zip(signals, like_high, like_low):
        if ph < 0 or pl < 0:
            raise NegativeLikelihood(f"signal {s!r} has a negative likelihood")
    if sum(like_high) != 1 or sum(like_low) != 1:
        raise NonStochastic(
            f"columns sum to {sum(like_high)} (high) and {sum(like_low)} (low), expected 1"
        )
    return InformationStructure(signals, like_high, like_low)


def posterior(prior, signal, structure: InformationStructure) -> Fraction:
    """Bayes update of ``prior`` on observing ``signal`` under ``structure``."""
    p = as_belief(prior)
    ph, pl = structure.likelihoods(signal)
    num = p * ph
    den = num + (1 - p) * pl
    if den == 0:
        raise ZeroProbabilitySignal(f"signal {signal!r} has probability zero under prior {p}")
    return num / den


def compose_beliefs(a, b) -> Fraction:
    """Combine two independent beliefs about the same state.

    Returns ``ab / (ab + (1-a)(1-b))``; a belief of exactly 1/2 acts as
    the identity.  Combining certainty in opposite states is undefined.
    """
    y, z = as_belief(a), as_belief(b)
    num = y * z
    den = num + (1 - y) * (1 - z)
    if den == 0:
        raise ContradictoryConclusiveBeliefs(f"cannot combine beliefs {y} and {z}")
    return num / den


@dataclass(frozen=True)
class BeliefDistribution:
    """Distribution of a posterior belief, with per-state signal weights.

    ``atoms`` maps each belief to ``(weight_high, weight_low)``: the
    probability of landing on that belief in each state.  Both weight
    columns sum to one, and each atom satisfies
    ``belief = weight_high / (weight_high + weight_low)`` (uniform prior).
    """

    atoms: tuple  # sorted tuple of (belief, weight_high, weight_low)

    @classmethod
    def from_weights(cls, weights) -> "BeliefDistribution":
        """Build from ``{belief: (w_high, w_low)}``, dropping null atoms."""
        atoms = []
        for belief, (wh, wl) in weights.items():
            if wh == 0 and wl == 0:
                continue
            belief = Fraction(belief)
            if belief != wh / (wh + wl):
                raise ValidationError(
                    f"atom {belief} inconsistent with weights ({wh}, {wl})"
                )
            atoms.append((belief, wh, wl))
        dist = cls(tuple(sorted(atoms)))
        dist._check()
        return dist

    def _check(self):
        if sum(a[1] for a in self.atoms) != 1 or sum(a[2] for a in self.atoms) != 1:
            raise ValidationError("belief-distribution weights do not sum to one")

    def beliefs(self):
        return tuple(a[0] for a in self.atoms)

    def unconditional(self, belief) -> Fraction:
        """Probability of the atom under the uniform prior."""
        for b, wh, wl in self.atoms:
            if b == belief:
                return (wh + wl) / 2
        return Fraction(0)

    def mean(self) -> Fraction:
        """Unconditional expected belief; always 1/2 by Bayes plausibility."""
        return sum(((wh + wl) / 2) * b for b, wh, wl in self.atoms)


def induced_belief_distribution(structure: InformationStructure) -> BeliefDistribution:
    """Distribution of the posterior after one signal, uniform prior.

    Signals inducing the same posterior are merged into a single atom;
    the signal labels carry no further payoff-relevant content.
    """
    weights = {}
    for _s, ph, pl in structure.items():
        if ph == 0 and pl == 0:
            continue
        belief = ph / (ph + pl)
        wh, wl = weights.get(belief, (Fraction(0), Fraction(0)))
        weights[belief] = (wh + ph, wl + pl)
    return BeliefDistribution.from_weights(weights)


def compose_distributions(a: BeliefDistribution, b: BeliefDistribution) -> BeliefDistribution:
    """Distribution of the combined belief from two independent draws."""
    weights = {}
    for _ba, wha, wla in a.atoms:
        for _bb, whb, wlb in b.atoms:
            wh = wha * whb
            wl = wla * wlb
            if wh == 0 and wl == 0:
                continue  # jointly impossible (e.g. conclusive-low with conclusive-high)
            belief = wh / (wh + wl)
            cwh, cwl = weights.get(belief, (Fraction(0), Fraction(0)))
            weights[belief] = (cwh + wh, cwl + wl)
    return BeliefDistribution.from_weights(weights)


def iid_belief_distribution(structure: InformationStructure, n: int, cap: int = IID_CAP) -> BeliefDistribution:
    """Exact distribution of the belief combined from ``n`` i.i.d. signals."""
    if n < 1:
        raise ValidationError("need at least one draw")
    if n > cap:
        raise CapExceeded(f"{n} i.i.d. draws exceeds cap {cap}")
    base = induced_belief_distribution(structure)
    dist = base
    for _ in range(n - 1):
        dist = compose_distributions(dist, base)
    return dist


# -- JSON structure-file format ------------------------------------------------
#
# {"signals": [{"id": "s1", "pH": "2/3", "pL": "1/3"}, ...]}
# Rationals are "num/den" strings; round-trips are bit-exact.


def structure_to_json(structure: InformationStructure) -> str:
    payload = {
        "signals": [
            {"id": s, "pH": format_rational(ph), "pL": format_rational(pl)}
            for s, ph, pl in structure.items()
        ]
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def structure_from_json(text: str) -> InformationStructure:
    try:
        payload = json.loads(text)
        entries = payload["signals"]
        table = {
            e["id"]: (parse_rational(e["pH"]), parse_rational(e["pL"]))
            for e in entries
        }
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ParseError(f"bad structure file: {exc}") from exc
    if len(table) != len(entries):
        raise ParseError("duplicate signal id in structure file")
    return validate_structure(table)
