"""Weighted circuit satisfiability, weft/depth, and ballot acceptance."""

from comsoc import Circuit, MabInstance, mab_solve, mab_to_majority_circuit, wcs_solve

# MAJ(x0, x1, x2) AND x3: satisfiable at weight 3, not at weight 2.
circuit = Circuit(
    [
        ("x0", "INPUT", ()),
        ("x1", "INPUT", ()),
        ("x2", "INPUT", ()),
        ("x3", "INPUT", ()),
        ("m", "MAJ", ("x0", "x1", "x2")),
        ("out", "AND2", ("m", "x3")),
    ],
    "out",
)
print("metrics:", circuit.metrics())
for k in (2, 3):
    print(f"weight-{k} satisfying assignment:", wcs_solve(circuit, k))

# Ballot acceptance: a strict majority of voters must each find a strict
# majority of the ballot inside their favorite set.
inst = MabInstance(
    m=5,
    ballots=[{0, 1}, {1, 2}, {1, 4}],
    agenda={1},
)
print("smallest accepted ballot:", mab_solve(inst))
print("accepted ballot of size 3:", mab_solve(inst, size=3))
print("unanimous variant:", mab_solve(inst, unanimous=True))

# The majority-circuit encoding is extensionally equivalent: a weight-k
# satisfying assignment exists exactly when a size-k ballot is accepted.
for k in (1, 2, 3):
    encoded = mab_to_majority_circuit(inst, k)
    via_wcs = wcs_solve(encoded, k)
    via_search = mab_solve(inst, size=k)
    print(f"k={k}: circuit route {via_wcs}, direct route {via_search}")
    assert (via_wcs is None) == (via_search is None)
