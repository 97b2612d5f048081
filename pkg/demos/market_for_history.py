"""Walkthrough: a monopolist sells access to the action record.

Each buyer pays at most their gain from history, so dynamic pricing
hands the seller exactly the aggregate gain and leaves buyers their
signal-only payoff.  With sticky prices (resets every t periods) later
buyers in a block keep a rent.  The seller prefers noisier signals than
society does; buyers want full information.
"""

from fractions import Fraction as F

from historyvalue import (
    MarketParams,
    dynamic_price_path,
    optimal_eps_seller_sticky,
    optimal_eps_weighted,
    sticky_price_path,
    sticky_surpluses,
    surpluses,
    ternary_structure,
)

pi = ternary_structure(F(1, 2))
params = MarketParams(delta=F(1, 2), alpha=F(1, 2))

print("Dynamic prices (uninformative mass 1/2):")
print("  " + ", ".join(str(p) for p in dynamic_price_path(pi, 6).prices))
rep = surpluses(pi, params, F(1, 10**9))
print(f"  seller {rep.seller.value}, buyer {rep.buyer.value}, social {rep.social.value}")

print("\nSticky prices, reset every 2 periods:")
print("  " + ", ".join(str(p) for p in sticky_price_path(pi, 2, 6).prices))
rep2 = sticky_surpluses(pi, MarketParams(F(1, 2), F(1, 2), 2), F(1, 10**9))
print(f"  seller {rep2.seller.value} (was {rep.seller.value}), "
      f"buyer {rep2.buyer.value} (was {rep.buyer.value})")
print("  coarser pricing shifts surplus from seller to buyers.")

print("\nWho wants how much noise? (delta = 3/4)")
print(f"  buyers:  0 (full information)")
print(f"  seller:  {optimal_eps_seller_sticky(F(3, 4), 1):.6f}")
for alpha in (F(1, 4), F(2, 5), F(1, 2)):
    print(f"  weighted alpha={alpha}: {optimal_eps_weighted(F(3, 4), alpha):.6f}")
print("The seller-optimal mixture is noisier than any weighted optimum.")
