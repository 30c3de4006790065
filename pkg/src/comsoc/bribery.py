"""Exact solvers for four bribery flavors under positional scoring rules.

Flavors
-------
unit
    Every bribed voter costs 1; a bribed voter's order may be rewritten
    arbitrarily.
priced
    Like unit, but voter ``v`` costs ``pi_v``.
swap
    Payment per executed adjacent swap, priced per unordered alternative
    pair and per voter.
shift
    Only swaps involving the preferred alternative: voter ``v`` charges
    ``rho_v(t)`` for moving it up ``t`` positions.

All solvers return the minimum cost plan that makes the preferred
alternative a winner (co-winner by default, strict under ``unique``), or
``None`` when no plan fits the budget. Returned plans carry the rewritten
orders and the resulting election so they can be re-validated.

Everything is enumeration plus branch and bound, sized for desk scale;
capacity limits are explicit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .elections import Election, PreferenceOrder, ScoringVector
from .errors import CapacityError

SWAP_MAX_M = 6
REWRITE_MAX_M = 6
REWRITE_MAX_N = 16


def _pair(a, b):
    return (a, b) if a < b else (b, a)


class SwapPriceFunction:
    """Per-voter nonnegative prices for swapping adjacent unordered pairs."""

    def __init__(self, tables):
        normalized = []
        for v, table in enumerate(tables):
            fixed = {}
            for key, cost in table.items():
                a, b = tuple(key)
                if int(cost) < 0:
                    raise ValueError(f"negative swap price for voter {v}")
                fixed[_pair(a, b)] = int(cost)
            normalized.append(fixed)
        self.tables = tuple(normalized)

    @classmethod
    def unit(cls, n, m):
        table = {_pair(a, b): 1 for a, b in combinations(range(m), 2)}
        return cls([dict(table) for _ in range(n)])

    def check_complete(self, m):
        for v, table in enumerate(self.tables):
            for a, b in combinations(range(m), 2):
                if _pair(a, b) not in table:
                    raise ValueError(f"voter {v} missing price for pair {(a, b)}")

    def price(self, v, a, b):
        return self.tables[v][_pair(a, b)]

    def voter_table(self, v):
        return self.tables[v]


class ShiftPriceFunction:
    """Per-voter nondecreasing shift tariffs with ``rho_v(0) = 0``.

    ``rho_v`` has one entry per possible upward shift of the preferred
    alternative in voter ``v``'s current order, including the zero shift.
    """

    def __init__(self, rhos):
        fixed = []
        for v, rho in enumerate(rhos):
            rho = tuple(int(x) for x in rho)
            if not rho or rho[0] != 0:
                raise ValueError(f"voter {v}: rho(0) must be 0")
            if any(rho[i] > rho[i + 1] for i in range(len(rho) - 1)):
                raise ValueError(f"voter {v}: rho must be nondecreasing")
            if any(x < 0 for x in rho):
                raise ValueError(f"voter {v}: negative shift price")
            fixed.append(rho)
        self.rhos = tuple(fixed)

    @classmethod
    def linear(cls, e: Election, p, slope=1):
        return cls([tuple(slope * t for t in range(v.rank_of(p))) for v in e.voters])

    def check_against(self, e: Election, p):
        for v, rho in zip(e.voters, self.rhos):
            if len(rho) != v.rank_of(p):
                raise ValueError("rho length must equal the position of the preferred alternative")
        if len(self.rhos) != e.n:
            raise ValueError(f"{len(self.rhos)} tariffs for {e.n} voters")

    def cost(self, v, t):
        return self.rhos[v][t]


@dataclass(frozen=True)
class BriberyBudget:
    """Budget ``limit`` plus optional per-voter prices (None means unit)."""

    limit: int
    prices: tuple | None = None

    def __post_init__(self):
        if self.limit < 0:
            raise ValueError("budget must be nonnegative")
        if self.prices is not None:
            prices = tuple(int(x) for x in self.prices)
            if any(x < 0 for x in prices):
                raise ValueError("voter prices must be nonnegative")
            object.__setattr__(self, "prices", prices)

    def voter_price(self, v):
        return 1 if self.prices is None else self.prices[v]


@dataclass(frozen=True)
class VoterAction:
    voter: int
    new_order: PreferenceOrder
    cost: int
    swaps: tuple = None
    shift: int = None


@dataclass(frozen=True)
class BriberyPlan:
    flavor: str
    actions: tuple
    cost: int
    election: Election


def apply_swap_sequence(order, seq, prices):
    """Execute adjacent swaps in sequence; returns (new order, total cost).

    Each pair must be adjacent when its turn comes; otherwise a ValueError
    names the offending index.
    """
    if not isinstance(order, PreferenceOrder):
        order = PreferenceOrder(order)
    current = list(order.ranking)
    cost = 0
    for idx, (a, b) in enumerate(seq):
        pa, pb = current.index(a), current.index(b)
        if abs(pa - pb) != 1:
            raise ValueError(f"swap {idx}: pair ({a}, {b}) is not adjacent")
        current[pa], current[pb] = current[pb], current[pa]
        cost += prices[_pair(a, b)]
    return PreferenceOrder(current), cost


def bubble_sequence(order, target):
    """Adjacent swaps turning ``order`` into ``target``; every discordant
    pair is swapped exactly once (selection of the target prefix)."""
    if not isinstance(order, PreferenceOrder):
        order = PreferenceOrder(order)
    if not isinstance(target, PreferenceOrder):
        target = PreferenceOrder(target)
    current = list(order.ranking)
    seq = []
    for goal_pos, alt in enumerate(target.ranking):
        pos = current.index(alt)
        while pos > goal_pos:
            seq.append((current[pos - 1], current[pos]))
            current[pos - 1], current[pos] = current[pos], current[pos - 1]
            pos -= 1
    return tuple(seq)


def min_cost_to_target(order, target, prices):
    """Cheapest swap cost from ``order`` to ``target``: the sum of pair
    prices over discordant pairs.

    Every discordant pair must be swapped an odd number of times and every
    concordant pair an even number; with nonnegative prices once and never
    are optimal, and the bubble sequence realizes exactly that.
    """
    if not isinstance(order, PreferenceOrder):
        order = PreferenceOrder(order)
    if not isinstance(target, PreferenceOrder):
        target = PreferenceOrder(target)
    if order.m != target.m:
        raise ValueError("orders rank different alternative sets")
    cost = 0
    for a, b in combinations(range(order.m), 2):
        if order.prefers(a, b) != target.prefers(a, b):
            cost += prices[_pair(a, b)]
    return cost


def _tally(orders, alpha, m):
    scores = [0] * m
    for order in orders:
        for pos, alt in enumerate(order):
            scores[alt] += alpha[pos]
    return scores


def _p_wins(scores, p, unique):
    best = max(scores)
    if scores[p] < best:
        return False
    return not unique or scores.count(best) == 1


def _finish_plan(e, rule, p, flavor, actions, cost, unique):
    orders = list(v.ranking for v in e.voters)
    for action in actions:
        orders[action.voter] = action.new_order.ranking
    result = Election([PreferenceOrder(o) for o in orders], labels=e.labels)
    scores = _tally(orders, rule.alpha, e.m)
    assert _p_wins(scores, p, unique)
    return BriberyPlan(flavor, tuple(actions), cost, result)


def swap_bribery(
    e: Election,
    rule: ScoringVector,
    p,
    prices: SwapPriceFunction,
    budget,
    unique: bool = False,
    max_m: int = SWAP_MAX_M,
):
    """Minimum-cost swap bribery plan within ``budget``, or None.

    Each voter's reachable orders and their exact costs are tabulated
    (every target order is reachable, at the sum of its discordant pair
    prices), then a depth-first search assigns one target per voter,
    cutting branches that cannot beat the incumbent cost or the budget.
    """
    if e.m > max_m:
        raise CapacityError(f"swap bribery limited to m <= {max_m}, got {e.m}")
    prices.check_complete(e.m)
    alpha = rule.alpha
    if len(rule) != e.m:
        raise ValueError("scoring vector length mismatch")
    base = _tally([v.ranking for v in e.voters], alpha, e.m)
    if _p_wins(base, p, unique):
        return _finish_plan(e, rule, p, "swap", [], 0, unique)

    all_orders = list(permutations(range(e.m)))
    columns = {}
    for order in all_orders:
        col = [0] * e.m
        for pos, alt in enumerate(order):
            col[alt] = alpha[pos]
        columns[order] = tuple(col)
    tables = []
    for vi, voter in enumerate(e.voters):
        table = sorted(
            (min_cost_to_target(voter, PreferenceOrder(t), prices.voter_table(vi)), t)
            for t in all_orders
        )
        tables.append(table)

    best_cost = None
    best_choice = None
    n = e.n
    choice = [None] * n

    def rec(vi, cost, scores):
        nonlocal best_cost, best_choice
        if best_cost is not None and cost >= best_cost:
            return
        if vi == n:
            if _p_wins(scores, p, unique):
                best_cost = cost
                best_choice = list(choice)
            return
        for extra, target in tables[vi]:
            total = cost + extra
            if total > budget:
                break
            if best_cost is not None and total >= best_cost:
                break
            choice[vi] = target
            rec(vi + 1, total, [s + c for s, c in zip(scores, columns[target])])
        choice[vi] = None

    rec(0, 0, [0] * e.m)
    if best_cost is None:
        return None
    actions = []
    for vi, target in enumerate(best_choice):
        if target != e.voters[vi].ranking:
            order = PreferenceOrder(target)
            seq = bubble_sequence(e.voters[vi], order)
            actions.append(
                VoterAction(
                    vi,
                    order,
                    min_cost_to_target(e.voters[vi], order, prices.voter_table(vi)),
                    swaps=seq,
                )
            )
    return _finish_plan(e, rule, p, "swap", actions, best_cost, unique)


def _shifted(order: PreferenceOrder, p, t):
    pos = order.rank_of(p) - 1
    ranking = list(order.ranking)
    del ranking[pos]
    ranking.insert(pos - t, p)
    return PreferenceOrder(ranking)


def shift_bribery(
    e: Election,
    rule: ScoringVector,
    p,
    shift_prices: ShiftPriceFunction,
    budget,
    unique: bool = False,
):
    """Minimum-cost shift bribery plan within ``budget``, or None.

    Exhaustive search over per-voter shift amounts with cost-based
    pruning; tariffs are nondecreasing, so per-voter options are explored
    in increasing cost order.
    """
    if len(rule) != e.m:
        raise ValueError("scoring vector length mismatch")
    shift_prices.check_against(e, p)
    alpha = rule.alpha
    options = []
    for vi, voter in enumerate(e.voters):
        per_voter = []
        for t in range(voter.rank_of(p)):
            order = _shifted(voter, p, t)
            col = [0] * e.m
            for pos, alt in enumerate(order.ranking):
                col[alt] = alpha[pos]
            per_voter.append((shift_prices.cost(vi, t), t, tuple(col)))
        options.append(per_voter)

    best_cost = None
    best_shifts = None
    n = e.n
    shifts = [0] * n

    def rec(vi, cost, scores):
        nonlocal best_cost, best_shifts
        if best_cost is not None and cost >= best_cost:
            return
        if vi == n:
            if _p_wins(scores, p, unique):
                best_cost = cost
                best_shifts = list(shifts)
            return
        for extra, t, col in options[vi]:
            total = cost + extra
            if total > budget:
                continue
            if best_cost is not None and total >= best_cost:
                continue
            shifts[vi] = t
            rec(vi + 1, total, [s + c for s, c in zip(scores, col)])
        shifts[vi] = 0

    rec(0, 0, [0] * e.m)
    if best_cost is None:
        return None
    actions = []
    for vi, t in enumerate(best_shifts):
        if t:
            actions.append(
                VoterAction(vi, _shifted(e.voters[vi], p, t), shift_prices.cost(vi, t), shift=t)
            )
    return _finish_plan(e, rule, p, "shift", actions, best_cost, unique)


def _rewrite_feasible(e, alpha, p, subset, unique):
    """Whether some rewrite of ``subset`` (preferred alternative on top)
    makes it win; returns the rewritten orders or None.

    Putting the preferred alternative first is never worse: it maximizes
    its own points and weakly lowers everyone else. Remaining positions
    are searched exhaustively, cutting as soon as a rival provably
    overshoots.
    """
    m = e.m
    fixed = [v.ranking for i, v in enumerate(e.voters) if i not in subset]
    scores = _tally(fixed, alpha, m)
    p_final = scores[p] + len(subset) * alpha[0]
    rivals = [c for c in range(m) if c != p]
    subset = sorted(subset)

    def overshoot(sc):
        for c in rivals:
            if sc[c] > p_final or (unique and sc[c] == p_final):
                return True
        return False

    found = []

    def rec(idx, sc):
        if overshoot(sc):
            return False
        if idx == len(subset):
            return True
        for perm in permutations(rivals):
            sc2 = list(sc)
            for pos, alt in enumerate(perm, start=1):
                sc2[alt] += alpha[pos]
            if rec(idx + 1, sc2):
                found.append((subset[idx], (p,) + perm))
                return True
        return False

    if rec(0, scores):
        return {vi: PreferenceOrder(order) for vi, order in found}
    return None


def unit_or_priced_bribery(
    e: Election,
    rule: ScoringVector,
    p,
    budget: BriberyBudget,
    unique: bool = False,
    max_m: int = REWRITE_MAX_M,
    max_n: int = REWRITE_MAX_N,
):
    """Minimum-cost bribery (unit or per-voter priced) plan, or None.

    Voter subsets are tried in ascending (cost, index tuple) order, so the
    first subset admitting a winning rewrite is a cheapest one.
    """
    if e.m > max_m:
        raise CapacityError(f"rewrite bribery limited to m <= {max_m}, got {e.m}")
    if e.n > max_n:
        raise CapacityError(f"rewrite bribery limited to n <= {max_n}, got {e.n}")
    if len(rule) != e.m:
        raise ValueError("scoring vector length mismatch")
    alpha = rule.alpha
    flavor = "unit" if budget.prices is None else "priced"

    subsets = []
    for size in range(e.n + 1):
        for subset in combinations(range(e.n), size):
            cost = sum(budget.voter_price(v) for v in subset)
            if cost <= budget.limit:
                subsets.append((cost, subset))
    subsets.sort(key=lambda item: (item[0], item[1]))

    for cost, subset in subsets:
        rewrites = _rewrite_feasible(e, alpha, p, set(subset), unique)
        if rewrites is None:
            continue
        actions = [
            VoterAction(vi, order, budget.voter_price(vi))
            for vi, order in sorted(rewrites.items())
        ]
        return _finish_plan(e, rule, p, flavor, actions, cost, unique)
    return None
