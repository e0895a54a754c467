"""Outcome models: from two team ratings to a game result.
=========================================================

The second step of the prediction pipeline turns a pair of strength ratings
into a win distribution. Two families exist: the deterministic largest-value
rule for any real-valued rating, and the Bernoulli race for ratings that are
probabilities.
"""

import numpy as np

from courtsim import (
    GameOutcome,
    Rating,
    RatingKind,
    bernoulli_race_no_ties,
    bernoulli_race_with_ties,
    largest_value,
    sample_outcome,
)

# The largest-value rule is brutal: the better-rated team always wins, and an
# exact tie becomes a coin flip. Works for net ratings and win percentages.
strong, weak = Rating(4.2, RatingKind.REAL_VALUED), Rating(-1.3, RatingKind.REAL_VALUED)
print("largest value, +4.2 vs -1.3:", largest_value(strong, weak))
print("largest value, exact tie:   ", largest_value(weak, weak))

# The Bernoulli race keeps probability interpretations consistent. Against an
# average opponent (p2 = 0.5) a team wins with exactly its own rating:
for p1 in (0.25, 0.6, 0.9):
    print(f"race({p1}, 0.5) ->", round(bernoulli_race_no_ties(p1, 0.5).p_home_win, 6))

# ... and two equally rated teams are always a coin flip:
print("race(0.7, 0.7) ->", bernoulli_race_no_ties(0.7, 0.7).p_home_win)

# Sports with draws use the single-trial variant, where equal draws tie:
print("race with ties (0.7, 0.4) ->", bernoulli_race_with_ties(0.7, 0.4))

# Sampling consumes exactly one uniform draw per game, with fixed category
# order (home, away, tie). That one-draw-per-game discipline is what makes
# whole replications reproducible and auditable.
dist = bernoulli_race_no_ties(0.8, 0.6)
rng = np.random.default_rng(7)
draws = rng.random(100_000)
wins = sum(sample_outcome(dist, d) is GameOutcome.HOME_WIN for d in draws)
print(f"\nrace(0.8, 0.6): p_home = {dist.p_home_win:.6f} (exactly 8/11)")
print(f"empirical over {len(draws):,} samples: {wins / len(draws):.6f}")
