"""Monopoly pricing of access to the action history.

A data seller records purchasers' actions and sells access to the
record.  Buyer ``i``'s willingness to pay is exactly their gain from
history, so under per-period (dynamic) pricing the seller extracts it
fully: the seller's discounted surplus equals the aggregate history
gain and each buyer keeps the signal-only payoff.  Under sticky pricing
the price can only reset every ``t`` periods, at the block leader's
willingness to pay, leaving later buyers in a block a rent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .beliefs import InformationStructure
from .design import (
    argmax_unit_interval,
    optimal_eps_social,
    ternary_social_value,
    uninformative_mass,
)
from .errors import DegenerateParameter, HorizonCapExceeded, ValidationError
from .learning import (
    LEX_CAP,
    BoundedValue,
    best_equilibrium_payoffs,
    single_signal_payoff,
    social_value,
)
from .rationals import QUARTER, format_decimal, format_rational


@dataclass(frozen=True)
class MarketParams:
    """Discount factor, welfare weight on buyers, and price stickiness."""

    delta: Fraction
    alpha: Fraction
    stickiness: int = 1

    def __post_init__(self):
        if not 0 < Fraction(self.delta) < 1:
            raise DegenerateParameter(f"delta must lie in (0, 1): {self.delta}")
        if not 0 < Fraction(self.alpha) < 1:
            raise DegenerateParameter(f"alpha must lie in (0, 1): {self.alpha}")
        if self.stickiness < 1:
            raise ValidationError(f"stickiness must be >= 1: {self.stickiness}")


@dataclass(frozen=True)
class PriceSchedule:
    """Posted price per buyer index, plus the pricing regime."""

    prices: tuple
    regime: str  # "dynamic" or "sticky(t)"

    def to_csv(self) -> str:
        lines = ["i,price,price_dec"]
        for i, p in enumerate(self.prices):
            lines.append(f"{i + 1},{format_rational(p)},{format_decimal(p)}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SurplusReport:
    """Seller, buyer, and weighted social surplus for one regime."""

    seller: BoundedValue
    buyer: BoundedValue
    social: BoundedValue
    regime: str

    def to_json_dict(self) -> dict:
        def entry(v: BoundedValue):
            return {
                "value": format_rational(v.value),
                "value_dec": format_decimal(v.value),
                "error_bound": format_decimal(v.error_bound),
            }

        return {
            "regime": self.regime,
            "seller": entry(self.seller),
            "buyer": entry(self.buyer),
            "social": entry(self.social),
        }


def dynamic_price_path(structure: InformationStructure, horizon: int) -> PriceSchedule:
    """Per-buyer prices under dynamic pricing: each buyer's history gain."""
    profile = best_equilibrium_payoffs(structure, horizon)
    return PriceSchedule(prices=profile.history_value, regime="dynamic")


def sticky_price_path(structure: InformationStructure, t: int, horizon: int) -> PriceSchedule:
    """Block-constant prices: block ``k`` is priced at buyer ``k*t + 1``'s gain."""
    if t < 1:
        raise ValidationError(f"stickiness must be >= 1: {t}")
    profile = best_equilibrium_payoffs(structure, horizon)
    gains = profile.history_value
    prices = tuple(gains[(i // t) * t] for i in range(horizon))
    regime = "dynamic" if t == 1 else f"sticky({t})"
    return PriceSchedule(prices=prices, regime=regime)


def _weighted(alpha: Fraction, buyer: BoundedValue, seller: BoundedValue) -> BoundedValue:
    return BoundedValue(
        alpha * buyer.value + (1 - alpha) * seller.value,
        alpha * buyer.error_bound + (1 - alpha) * seller.error_bound,
    )


def surpluses(structure: InformationStructure, params: MarketParams, tolerance) -> SurplusReport:
    """Dynamic-regime surpluses: seller gets the aggregate history gain,
    each buyer keeps the signal-only payoff."""
    if params.stickiness != 1:
        raise ValidationError("use sticky_surpluses for stickiness > 1")
    seller = social_value(structure, params.delta, tolerance)
    buyer = BoundedValue(single_signal_payoff(structure), Fraction(0))
    return SurplusReport(
        seller=seller,
        buyer=buyer,
        social=_weighted(Fraction(params.alpha), buyer, seller),
        regime="dynamic",
    )


def ternary_sticky_seller_surplus(eps, delta, t: int) -> Fraction:
    """Closed-form sticky seller surplus for the ternary family:
    (d^t / 4) * e * (1 - e^t) / (1 - d^t * e^t)."""
    e = Fraction(eps)
    d = Fraction(delta)
    if not 0 <= e <= 1:
        raise ValidationError(f"eps outside [0, 1]: {e}")
    if not 0 < d < 1:
        raise DegenerateParameter(f"delta must lie in (0, 1): {d}")
    if t < 1:
        raise ValidationError(f"stickiness must be >= 1: {t}")
    return (d**t / 4) * e * (1 - e**t) / (1 - d**t * e**t)


def ternary_sticky_buyer_surplus(eps, delta, t: int) -> Fraction:
    """Closed-form sticky buyer surplus for the ternary family.

    The discounted average of payoff-with-history minus price:
    ``1/4 - (1-d)*e / (4*(1-d*e)) - seller``.
    """
    e = Fraction(eps)
    d = Fraction(delta)
    with_history = QUARTER - (1 - d) * e / (4 * (1 - d * e))
    return with_history - ternary_sticky_seller_surplus(e, d, t)


def sticky_surpluses(structure: InformationStructure, params: MarketParams, tolerance) -> SurplusReport:
    """Sticky-regime surpluses, exact for ternary structures.

    For other structures both series are truncated with a certified tail
    bound: every term is in [0, 1/4], so stopping after ``N`` buyers
    leaves at most ``d^N / 4`` on the table for each series.
    """
    t = params.stickiness
    d = Fraction(params.delta)
    a = Fraction(params.alpha)
    tol = Fraction(tolerance)
    regime = "dynamic" if t == 1 else f"sticky({t})"

    eps = uninformative_mass(structure)
    if eps is not None:
        if t == 1:
            return surpluses(structure, params, tolerance)
        seller = BoundedValue(ternary_sticky_seller_surplus(eps, d, t), Fraction(0))
        buyer = BoundedValue(ternary_sticky_buyer_surplus(eps, d, t), Fraction(0))
        return SurplusReport(
            seller=seller, buyer=buyer, social=_weighted(a, buyer, seller), regime=regime
        )

    if t == 1:
        return surpluses(structure, MarketParams(d, a, 1), tolerance)

    # General structure: truncate both discounted series.
    horizon = 1
    while QUARTER * d**horizon > tol:
        horizon += 1
        if horizon > LEX_CAP:
            raise HorizonCapExceeded(
                f"tolerance {tol} needs horizon {horizon} > cap {LEX_CAP}",
                achievable_tolerance=QUARTER * d**LEX_CAP,
            )
    profile = best_equilibrium_payoffs(structure, horizon)
    gains = profile.history_value
    prices = [gains[(i // t) * t] for i in range(horizon)]
    tail = QUARTER * d**horizon
    seller_sum = (1 - d) * sum(d**i * p for i, p in enumerate(prices))
    buyer_sum = (1 - d) * sum(
        d**i * (profile.single + gains[i] - prices[i]) for i in range(horizon)
    )
    seller = BoundedValue(seller_sum, tail)
    buyer = BoundedValue(buyer_sum, tail)
    return SurplusReport(
        seller=seller, buyer=buyer, social=_weighted(a, buyer, seller), regime=regime
    )


# -- surplus-optimal mixing probabilities --------------------------------------


def optimal_eps_seller(delta) -> float:
    """Seller-optimal uninformative mass under dynamic pricing."""
    return optimal_eps_social(delta)


def optimal_eps_buyer() -> Fraction:
    """Buyers are best served by full information: mass 0, exactly."""
    return Fraction(0)


def optimal_eps_seller_sticky(delta, t: int) -> float:
    """Seller-optimal uninformative mass with price resets every ``t`` periods.

    Root of a quadratic in ``e^t``; reduces to the dynamic formula at t=1.
    """
    d = float(delta)
    if not 0 < d < 1:
        raise DegenerateParameter(f"delta must lie in (0, 1): {delta}")
    if t < 1:
        raise ValidationError(f"stickiness must be >= 1: {t}")
    dt = d**t
    b = t + 1 - (t - 1) * dt
    root = (b - math.sqrt(b * b - 4 * dt)) / (2 * dt)
    return root ** (1.0 / t)


def optimal_eps_weighted(delta, alpha) -> float:
    """Mass maximizing the weighted surplus under dynamic pricing.

    Zero when ``delta <= alpha / (1 - alpha)`` (the buyer side dominates),
    otherwise ``(1 - sqrt((1-alpha)(1-delta)/(1-2*alpha))) / delta``.  The
    interior branch only arises for ``alpha < 1/2``.
    """
    d = float(delta)
    a = float(alpha)
    if not 0 < d < 1:
        raise DegenerateParameter(f"delta must lie in (0, 1): {delta}")
    if not 0 < a < 1:
        raise DegenerateParameter(f"alpha must lie in (0, 1): {alpha}")
    if a >= 0.5 or d <= a / (1 - a):
        return 0.0
    return (1.0 - math.sqrt((1 - a) * (1 - d) / (1 - 2 * a))) / d


def ternary_weighted_surplus(eps, delta, alpha) -> Fraction:
    """Exact weighted surplus on the ternary family, dynamic regime."""
    e = Fraction(eps)
    a = Fraction(alpha)
    buyer = (1 - e) / 4
    return a * buyer + (1 - a) * ternary_social_value(e, delta)


def ternary_weighted_surplus_sticky(eps, delta, alpha, t: int) -> Fraction:
    """Exact weighted surplus on the ternary family, sticky regime."""
    a = Fraction(alpha)
    return a * ternary_sticky_buyer_surplus(eps, delta, t) + (
        1 - a
    ) * ternary_sticky_seller_surplus(eps, delta, t)


def optimal_eps_weighted_sticky(delta, alpha, t: int, tolerance=Fraction(1, 10**9)):
    """Mass maximizing the weighted sticky surplus.

    Exactly 0 for ``alpha >= 1/2``; otherwise located numerically (no
    closed form is provided) with the returned point within ``tolerance``
    of the argmax.
    """
    a = Fraction(alpha)
    if not 0 < a < 1:
        raise DegenerateParameter(f"alpha must lie in (0, 1): {alpha}")
    if a >= Fraction(1, 2):
        return Fraction(0)
    result = argmax_unit_interval(
        lambda e: ternary_weighted_surplus_sticky(e, delta, alpha, t), tolerance
    )
    return result.argmax
