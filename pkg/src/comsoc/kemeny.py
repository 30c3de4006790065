"""Exact Kemeny ranking solvers.

Two independent routes compute the same optimum: a factorial brute force
over all rankings (the oracle) and a dynamic program over the 2^m
alternative subsets. Both break ties toward the lexicographically
smallest optimal ranking, so their results are bit-identical.

The average voter disagreement ``d_a`` (ceiling of the mean pairwise
Kendall tau distance between voters) is computed and reported as a
difficulty measure; no instance shrinking is attached to it.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from itertools import combinations, permutations

from .elections import Election, PreferenceOrder, kendall_tau, majority_matrix, sum_kendall_tau
from .errors import CapacityError

BRUTE_FORCE_MAX_M = 8
DP_MAX_M = 24


@dataclass(frozen=True)
class KemenyResult:
    """An optimal ranking and its score (total inversions vs all voters)."""

    ranking: PreferenceOrder
    score: int


def kemeny_brute_force(e: Election, max_m: int = BRUTE_FORCE_MAX_M) -> KemenyResult:
    """Minimum-score ranking by enumerating all m! candidates.

    The score of each candidate ranking is the sum of its Kendall tau
    distances to the voters, computed directly from the definition. Ties
    break to the lexicographically smallest ranking; enumeration order
    already delivers that.
    """
    if e.m > max_m:
        raise CapacityError(f"brute force limited to m <= {max_m}, got m={e.m}")
    best_score = None
    best = None
    for candidate in permutations(range(e.m)):
        score = sum_kendall_tau(e, candidate)
        if best_score is None or score < best_score:
            best_score = score
            best = candidate
    return KemenyResult(PreferenceOrder(best), best_score)


def kemeny_dp(e: Election, max_m: int = DP_MAX_M) -> KemenyResult:
    """Minimum-score ranking via dynamic programming over subsets.

    ``best[S]`` is the cheapest way to order the alternatives of ``S`` as
    the final |S| positions. Placing ``c`` first among ``S`` costs
    ``sum(wins[d][c] for d in S - {c})``: one disagreement per voter who
    prefers a later-placed ``d`` over ``c``. Reconstruction picks the
    smallest ``c`` achieving the optimum at every step, which yields the
    lexicographically smallest optimal ranking.
    """
    m = e.m
    if m > max_m:
        raise CapacityError(f"subset DP limited to m <= {max_m}, got m={m}")
    wins = majority_matrix(e).wins

    full = (1 << m) - 1
    infinity = 1 << 62
    best = array("q", [infinity]) * (full + 1)
    best[0] = 0
    for s in range(1, full + 1):
        members = [c for c in range(m) if s >> c & 1]
        b = infinity
        for c in members:
            cost = 0
            for d in members:
                if d != c:
                    cost += wins[d][c]
            cand = best[s ^ (1 << c)] + cost
            if cand < b:
                b = cand
        best[s] = b

    ranking = []
    s = full
    while s:
        members = [c for c in range(m) if s >> c & 1]
        for c in members:
            cost = 0
            for d in members:
                if d != c:
                    cost += wins[d][c]
            if best[s ^ (1 << c)] + cost == best[s]:
                ranking.append(c)
                s ^= 1 << c
                break
    return KemenyResult(PreferenceOrder(ranking), int(best[full]))


def kemeny_decision(e: Election, k: int) -> bool:
    """True if some ranking has score at most ``k``."""
    if k < 0:
        return False
    return kemeny_dp(e).score <= k


def avg_pairwise_distance(e: Election) -> int:
    """Ceiling of the mean Kendall tau distance over all voter pairs.

    A single-voter election has no pairs; 0 is returned by convention.
    """
    n = e.n
    if n < 2:
        return 0
    total = sum(kendall_tau(v, w) for v, w in combinations(e.voters, 2))
    pairs = n * (n - 1) // 2
    return -(-total // pairs)
