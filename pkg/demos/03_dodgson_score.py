"""Dodgson scores: fewest adjacent swaps to forge a Condorcet winner."""

from comsoc import Election, build_program, dodgson_bruteforce, dodgson_score

e = Election(
    [
        (0, 1, 2, 3),
        (0, 1, 3, 2),
        (2, 1, 0, 3),
    ],
    labels=("a1", "a2", "a3", "a4"),
)

for c in e.alternatives():
    program = build_program(e, c)
    solution = dodgson_score(e, c)
    print(
        f"{e.label_of(c)}: deficits {list(program.deficits)}, score {solution.score},"
        f" lifts {solution.lifts}"
    )

# The typed program agrees with raw breadth-first search over swap
# sequences (which may swap any adjacent pair, not only the target).
for c in e.alternatives():
    score = dodgson_score(e, c).score
    assert dodgson_bruteforce(e, c, score, max_k=12) == score
print("swap-BFS oracle confirms every score")
