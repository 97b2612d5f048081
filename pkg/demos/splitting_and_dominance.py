"""Walkthrough: splitting beliefs onto {0, 1/2, 1} never hurts.

Any structure can be transformed into a full-or-nothing mixture that
keeps the signal-only payoff unchanged and weakly raises every agent's
gain from history.  We verify this by exact computation on a seeded
random corpus, then locate the gain-maximizing mixture.
"""

from fractions import Fraction as F

from historyvalue import (
    argmax_unit_interval,
    corpus,
    optimal_eps_social,
    split_to_ternary,
    structure_to_json,
    ternary_social_value,
    uninformative_mass,
    verify_dominance,
)

print("One structure in detail:")
sample = corpus(seed=5, count=1)[0]
print(structure_to_json(sample))
report = verify_dominance(sample, 5)
print(f"split uninformative mass: {report.eps}")
print(f"signal-only payoff preserved: {report.single_preserved}")
for i, (b, s) in enumerate(zip(report.base_values, report.split_values)):
    marker = "=" if b == s else "<"
    print(f"  agent {i + 1}: {b} {marker} {s}")

print("\nSweep a corpus of 60 random structures:")
wins = strict = 0
for s in corpus(seed=2024, count=60):
    rep = verify_dominance(s, 5)
    wins += rep.dominates
    strict += rep.two_sided and rep.strict
print(f"  dominance held for {wins}/60; strict whenever beliefs straddle 1/2 ({strict} cases)")

print("\nWhich mixture maximizes the discounted aggregate gain?")
for d in (F(1, 4), F(1, 2), F(3, 4)):
    closed = optimal_eps_social(d)
    numeric = argmax_unit_interval(lambda e: ternary_social_value(e, d), F(1, 10**9))
    print(
        f"  delta={d}: closed form {closed:.9f}, golden-section {float(numeric.argmax):.9f}"
    )
print("More patience -> a noisier mixture is best.")
