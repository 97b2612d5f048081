"""Walkthrough: how much is watching your predecessors worth?

Agents guess a binary state.  Each sees all earlier actions plus one
private signal.  We compute, exactly, how much the action record adds
to each agent's expected payoff, and compare with an agent who could
watch the raw signals directly.
"""

from fractions import Fraction as F

from historyvalue import (
    best_equilibrium_payoffs,
    induced_belief_distribution,
    single_signal_payoff,
    ternary_structure,
    validate_structure,
)

print("A symmetric binary signal: right with probability 2/3.")
sym = validate_structure({"up": (F(2, 3), F(1, 3)), "down": (F(1, 3), F(2, 3))})
dist = induced_belief_distribution(sym)
print("  induced beliefs:", ", ".join(str(b) for b in dist.beliefs()))
print("  signal-only payoff:", single_signal_payoff(sym))

profile = best_equilibrium_payoffs(sym, 5)
print("\n  agent  with-history  direct-observation  gain-from-history")
for i in range(5):
    print(
        f"  {i + 1:>5}  {str(profile.with_history[i]):>12}"
        f"  {str(profile.benchmark[i]):>18}  {str(profile.history_value[i]):>17}"
    )
print("\nAgent 2 gains nothing: an opposing signal cancels the first action")
print("exactly, and the direct-observation benchmark pins the payoff down.")

print("\nNow a mixture of full and no information (uninformative w.p. 1/2):")
mix = ternary_structure(F(1, 2))
profile = best_equilibrium_payoffs(mix, 5)
for i in range(5):
    print(f"  agent {i + 1}: gain {profile.history_value[i]}  (= (e - e^i)/4 at e=1/2)")
print("Here every later agent strictly benefits from the record.")
