"""Scoring rules and the Condorcet winner on a small election."""

from comsoc import Election, ScoringVector, condorcet_winner, majority_matrix, scoring_winners

# Three voters over four alternatives a1..a4 (ids 0..3).
e = Election(
    [
        (0, 1, 2, 3),
        (0, 1, 3, 2),
        (2, 1, 0, 3),
    ],
    labels=("a1", "a2", "a3", "a4"),
)

wins = majority_matrix(e)
print("head-to-head tallies (row beats column):")
for c in e.alternatives():
    print(" ", e.label_of(c), list(wins[c]))

winner = condorcet_winner(e)
print("Condorcet winner:", e.label_of(winner) if winner is not None else "none")

for name, vector in [
    ("plurality", ScoringVector.plurality(e.m)),
    ("2-approval", ScoringVector.d_approval(e.m, 2)),
    ("Borda", ScoringVector.borda(e.m)),
]:
    result = scoring_winners(e, vector)
    pretty = {e.label_of(c): s for c, s in enumerate(result.scores)}
    print(f"{name:10s} scores {pretty} -> winners {[e.label_of(c) for c in result.winners]}")
