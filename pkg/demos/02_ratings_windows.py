"""Strength ratings: win percentage with a prior, net rating, windows.
=====================================================================

The first step of the pipeline summarizes a team's history into one number.
Ratings are computed strictly from games before the one being predicted, and
a sliding window can limit how far back that history reaches.
"""

from courtsim import (
    TeamGameOutcome,
    TeamHistoryView,
    WindowPolicy,
    net_rating,
    win_percentage,
)


def played(won, at_home, pf, pa, poss=100.0):
    return TeamGameOutcome(won=won, at_home=at_home, points_for=pf,
                           points_against=pa, possessions=poss)


# A fresh team has no games; the prior keeps its rating away from 0 or 1.
empty = TeamHistoryView(())
print("no games, neutral prior:", win_percentage(empty, prior=0.5).value)
print("no games, bullish prior:", win_percentage(empty, prior=0.7).value)

# After W, W, L the smoothed percentage is (0.5 + 2) / (1 + 3).
history = TeamHistoryView((
    played(True, True, 110, 100),
    played(True, False, 104, 99),
    played(False, True, 96, 101),
))
print("W-W-L:", win_percentage(history).value)

# A window keeps only the most recent games: the same team judged on its
# last two games alone looks worse.
print("W-W-L, last 2 only:", round(win_percentage(history, window=WindowPolicy.last(2)).value, 4))

# Net rating is the point differential per 100 possessions, zero to start.
print("\nnet rating, no games:", net_rating(empty).value)
print("net rating W-W-L:", round(net_rating(history).value, 3))

# Home adjustment (used by methods ii, iv, vi) rates the home team from its
# home games only; filtering happens before the window applies.
print("home games only:", [e.won for e in history.home_only()])
print("home-only win %:", round(win_percentage(history.home_only()).value, 4))
