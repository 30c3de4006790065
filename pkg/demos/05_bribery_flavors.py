"""The four bribery flavors on one election under Borda."""

from comsoc import (
    BriberyBudget,
    Election,
    ScoringVector,
    ShiftPriceFunction,
    SwapPriceFunction,
    shift_bribery,
    swap_bribery,
    unit_or_priced_bribery,
)

e = Election(
    [
        (1, 2, 0),
        (2, 1, 0),
        (1, 0, 2),
    ]
)
rule = ScoringVector.borda(3)
p = 0  # currently a Borda loser

unit = unit_or_priced_bribery(e, rule, p, BriberyBudget(3))
print("unit bribery: bribe", [a.voter for a in unit.actions], "cost", unit.cost)

priced = unit_or_priced_bribery(e, rule, p, BriberyBudget(9, prices=(5, 1, 3)))
print("priced bribery: bribe", [a.voter for a in priced.actions], "cost", priced.cost)

swap = swap_bribery(e, rule, p, SwapPriceFunction.unit(e.n, e.m), budget=6)
print("swap bribery: cost", swap.cost, "swaps", {a.voter: a.swaps for a in swap.actions})

shift = shift_bribery(e, rule, p, ShiftPriceFunction.linear(e, p), budget=6)
print("shift bribery: cost", shift.cost, "shifts", {a.voter: a.shift for a in shift.actions})

# Shifts are swaps restricted to the preferred alternative, so with unit
# prices the swap optimum can never cost more.
assert swap.cost <= shift.cost
