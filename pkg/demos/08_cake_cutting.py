"""Cake cutting with exact rational densities and two classic protocols."""

from fractions import Fraction

from comsoc import (
    Piece,
    PiecewisePolyDensity,
    check_fairness,
    cut_and_choose,
    cut_query,
    last_diminisher,
    measure,
    welfare,
)

F = Fraction

uniform = PiecewisePolyDensity.uniform()
left_heavy = PiecewisePolyDensity([(0, F(1, 2), (F(3, 2),)), (F(1, 2), 1, (F(1, 2),))])
ramp = PiecewisePolyDensity([(0, 1, (F(0), F(2)))])  # density 2t

print("ramp value of [0, 1/2]:", measure(ramp, Piece.interval(0, F(1, 2))))
print("ramp cut capturing 1/4 from 0:", cut_query(ramp, 0, F(1, 4)))

division = cut_and_choose([left_heavy, ramp])
report = check_fairness(division, [left_heavy, ramp], eps=0)
print("cut and choose pieces:", division.pieces)
print("  envy-free:", report.envy_free, " proportional:", report.proportional)

players = [uniform, left_heavy, ramp]
division = last_diminisher(players)
report = check_fairness(division, players)
print("last diminisher pieces:")
for idx, piece in enumerate(division.pieces):
    print(f"  player {idx}: {piece} worth {report.values[idx][idx]} to them")
print("  proportional:", report.proportional)
print("  utilitarian welfare:", welfare(division, players, "utilitarian"))
print("  egalitarian welfare:", welfare(division, players, "egalitarian"))
