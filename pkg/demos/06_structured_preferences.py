"""Single-peakedness, single-crossingness, Euclidean checks, distances."""

from fractions import Fraction

from comsoc import (
    Election,
    EuclideanEmbedding,
    GeneratorSpec,
    all_single_peaked_axes,
    find_single_peaked_axis,
    generate,
    group_separable_split,
    peak_count,
    single_crossing_report,
    sp_deletion_distance,
    verify_euclidean,
)

e = Election(
    [
        (0, 1, 2, 3, 4),
        (2, 3, 1, 0, 4),
        (2, 1, 0, 3, 4),
    ]
)
print("first single-peaked axis:", find_single_peaked_axis(e))
print("all valid axes:", all_single_peaked_axes(e))
print("peaks of voter 1 along 0..4:", peak_count(e.voters[1], (0, 1, 2, 3, 4)))

report = single_crossing_report(e)
print("single-crossing:", report.is_single_crossing, "max crossings:", report.max_crossings)

print("group separable split:", group_separable_split(e))

# Add a voter that breaks every axis; one deletion repairs it.
spoiled = Election(list(e.voters) + [(0, 1, 3, 2, 4)])
distance, witness = sp_deletion_distance(spoiled, "voters")
print(f"deletion distance to single-peakedness: {distance} (drop voters {witness})")

# A one-dimensional embedding can be verified exactly.
result = generate(GeneratorSpec("euclidean-1d", m=4, n=3, seed=11))
print("generated election verifies against its embedding:",
      verify_euclidean(result.election, result.embedding))

manual = EuclideanEmbedding(1, [(Fraction(1),), (Fraction(2),)], [(Fraction(0),)])
print("manual embedding check:", verify_euclidean(Election([(0, 1)]), manual))
